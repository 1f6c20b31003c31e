#ifndef ASYMPTOSCOPE_INGEST_HPP
#define ASYMPTOSCOPE_INGEST_HPP

#include <iosfwd>
#include <string>

#include "asymptoscope/distributions.hpp"
#include "asymptoscope/summability.hpp"

namespace asco {

/// CSV with columns t, value...: one value column gives a real channel, a
/// pair (re, im) a complex channel, 2k columns k complex channels.  Spacing
/// must be uniform to 1e-9 relative.
SampledSignal ingest_csv(const std::string& path);
SampledSignal ingest_csv_stream(std::istream& in, const std::string& name);

/// Built-in coefficient streams for the summability subcommands:
/// alt-harmonic, alt-ones, ones, inv-nlogn, geometric:<x>, inv-n2,
/// alt-inv-n2, leibniz.
CoefficientStream make_stream(const std::string& name);

}  // namespace asco

#endif  // ASYMPTOSCOPE_INGEST_HPP
