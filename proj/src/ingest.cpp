#include "asymptoscope/ingest.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace asco {

SampledSignal ingest_csv_stream(std::istream& in, const std::string& name) {
  std::vector<std::vector<Real>> rows;
  std::string line;
  size_t width = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<Real> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw validation_error("csv '" + name + "': non-numeric cell '" + cell + "'");
      }
    }
    if (row.size() < 2) throw validation_error("csv '" + name + "': need at least two columns");
    if (width == 0) width = row.size();
    if (row.size() != width)
      throw validation_error("csv '" + name + "': ragged rows");
    rows.push_back(std::move(row));
  }
  if (rows.size() < 2) throw validation_error("csv '" + name + "': need at least two rows");

  const Real spacing = rows[1][0] - rows[0][0];
  if (!(spacing > 0)) throw validation_error("csv '" + name + "': t must increase");
  Real worst = 0.0;
  size_t worst_row = 0;
  for (size_t i = 1; i < rows.size(); ++i) {
    const Real gap = rows[i][0] - rows[i - 1][0];
    const Real rel = std::abs(gap - spacing) / spacing;
    if (rel > worst) {
      worst = rel;
      worst_row = i;
    }
  }
  if (worst > 1e-9)
    throw validation_error("csv '" + name + "': non-uniform spacing, worst gap at row " +
                           std::to_string(worst_row) + " (relative deviation " +
                           std::to_string(worst) + ")");

  const size_t vcols = width - 1;
  SampledSignal s;
  s.spacing = spacing;
  s.origin = rows[0][0];
  s.label = name;
  if (vcols == 1) {
    ArrayXcd ch(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) ch[i] = rows[i][1];
    s.channels.push_back(ch);
  } else if (vcols % 2 == 0) {
    for (size_t c = 0; c < vcols / 2; ++c) {
      ArrayXcd ch(rows.size());
      for (size_t i = 0; i < rows.size(); ++i)
        ch[i] = Complex(rows[i][1 + 2 * c], rows[i][2 + 2 * c]);
      s.channels.push_back(ch);
    }
  } else {
    throw validation_error("csv '" + name +
                           "': value columns must be a single real column or (re, im) pairs");
  }
  return s;
}

SampledSignal ingest_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open '" + path + "'");
  return ingest_csv_stream(in, path);
}

CoefficientStream make_stream(const std::string& name) {
  std::string base = name;
  Real param = 0.0;
  if (auto pos = name.find(':'); pos != std::string::npos) {
    base = name.substr(0, pos);
    param = std::stod(name.substr(pos + 1));
  }
  CoefficientStream s;
  s.label = name;
  if (base == "alt-harmonic") {
    s.c = [](long long n) -> Complex {
      return n == 0 ? 0.0 : (n % 2 == 1 ? 1.0 : -1.0) / static_cast<Real>(n);
    };
    return s;
  }
  if (base == "alt-ones") {
    s.c = [](long long n) -> Complex { return n % 2 == 0 ? 1.0 : -1.0; };
    return s;
  }
  if (base == "ones") {
    s.c = [](long long) -> Complex { return 1.0; };
    return s;
  }
  if (base == "inv-nlogn") {
    s.c = [](long long n) -> Complex {
      return 1.0 / ((n + 1.0) * std::log(n + 2.0));
    };
    return s;
  }
  if (base == "geometric") {
    s.c = [param](long long n) -> Complex { return std::pow(param, static_cast<Real>(n)); };
    return s;
  }
  if (base == "inv-n2") {
    s.c = [](long long n) -> Complex { return n == 0 ? 0.0 : 1.0 / static_cast<Real>(n * n); };
    return s;
  }
  if (base == "alt-inv-n2") {
    s.c = [](long long n) -> Complex {
      return n == 0 ? 0.0 : (n % 2 == 1 ? 1.0 : -1.0) / static_cast<Real>(n * n);
    };
    return s;
  }
  if (base == "leibniz") {
    s.c = [](long long n) -> Complex { return (n % 2 == 0 ? 1.0 : -1.0) / (2.0 * n + 1.0); };
    return s;
  }
  throw validation_error("unknown coefficient stream '" + name + "'");
}

}  // namespace asco
