#ifndef ASYMPTOSCOPE_REPORT_HPP
#define ASYMPTOSCOPE_REPORT_HPP

#include <json.hpp>

#include "asymptoscope/riemann.hpp"
#include "asymptoscope/summability.hpp"
#include "asymptoscope/tauberian.hpp"
#include "asymptoscope/transform.hpp"

namespace asco {

using json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "asymptoscope/1";

json to_json(Complex z);
json to_json(const SlowVariationModel& m);
json to_json(const TauberianProfile& p);
json to_json(const ExponentReport& r);
json to_json(const ClassEstimateReport& r);
json to_json(const GlobalHolderReport& r);
json to_json(const StabilizationReport& r);
json to_json(const RationalPoint& r);
json to_json(const ZetaEvaluation& z);
json to_json(const ExpansionCoefficients& e);
json to_json(const ExpansionVerification& v);
json to_json(const LittlewoodReport& r);
json to_json(const LaplaceProfile& p);
json to_json(const TransformField& f);

/// Wraps a module result into the versioned report envelope.
json make_report(const std::string& subcommand, const json& request, const json& result,
                 const json& provenance);

}  // namespace asco

#endif  // ASYMPTOSCOPE_REPORT_HPP
