#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "orthozeros/bounds.hpp"
#include "orthozeros/convexity.hpp"
#include "orthozeros/sweep.hpp"

namespace orthozeros {

using OrderedJson = nlohmann::ordered_json;

/// Grid evaluation of F (and j where defined) for one spec.
struct NormalFormGrid {
  FamilySpec spec;
  NormalFormProfile profile;
  std::vector<double> t;
  std::vector<double> f_values;
  std::vector<double> j_values;  // empty for Laguerre
};

NormalFormGrid evaluate_normal_form_grid(const FamilySpec& spec, double lo,
                                         double hi, int count);

/// The one float formatter of the tool: identical bytes in JSON and CSV.
/// Shortest round-trip representation, byte-stable across runs.
std::string format_double(double v);

OrderedJson to_json(const FamilySpec& spec);
FamilySpec spec_from_json(const OrderedJson& j);
OrderedJson to_json(const NormalFormProfile& profile);
OrderedJson to_json(const ZeroSet& zs);
OrderedJson to_json(const NormalFormGrid& grid);
OrderedJson to_json(const ConvexityReport& report);
OrderedJson to_json(const EmpiricalClassification& cls);
OrderedJson to_json(const GapBoundRecord& rec);
OrderedJson to_json(const BoundSuiteReport& report);
OrderedJson to_json(const SweepSummary& summary);

/// Top-level report object: tool_version, spec echo (when applicable), and
/// the payload under its own key.  Never contains non-finite numbers, so
/// parse(serialize(x)) == x value-for-value.
OrderedJson report_envelope(const std::optional<FamilySpec>& spec,
                            const std::string& payload_key, OrderedJson payload);

std::string to_csv(const ZeroSet& zs);
std::string to_csv(const NormalFormGrid& grid);
std::string to_csv(const ConvexityReport& report, const EmpiricalClassification& cls);
std::string to_csv(const BoundSuiteReport& report);
std::string to_csv(const SweepSummary& summary);

}  // namespace orthozeros
