#include "orthozeros/report.hpp"

#include <cmath>
#include <sstream>

#include "orthozeros/version.hpp"

namespace orthozeros {

namespace {

// Finite doubles as numbers, everything else as null (JSON has no inf).
OrderedJson json_num(double v) {
  if (std::isfinite(v)) return OrderedJson(v);
  return OrderedJson(nullptr);
}

OrderedJson json_opt(const std::optional<double>& v) {
  return v ? json_num(*v) : OrderedJson(nullptr);
}

OrderedJson to_json(const Interval& iv) {
  OrderedJson j;
  j["lo"] = json_num(iv.lo);
  j["hi"] = json_num(iv.hi);
  return j;
}

OrderedJson to_json(const GlobalBound& g) {
  OrderedJson j;
  j["value"] = json_num(g.value);
  j["satisfied"] = g.satisfied;
  j["margin"] = json_num(g.margin);
  return j;
}

OrderedJson global_or_null(const std::optional<GlobalBound>& g) {
  return g ? to_json(*g) : OrderedJson(nullptr);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_num(double v) { return format_double(v); }

std::string csv_opt(const std::optional<double>& v) {
  return v ? csv_num(*v) : std::string();
}

std::string csv_bool(bool b) { return b ? "true" : "false"; }

void csv_row(std::ostringstream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) os << ',';
    os << csv_escape(fields[i]);
  }
  os << '\n';
}

std::vector<std::string> spec_csv_fields(const FamilySpec& spec) {
  return {to_string(spec.kind), csv_num(spec.alpha),
          spec.kind == FamilyKind::Jacobi ? csv_num(spec.beta) : std::string(),
          std::to_string(spec.degree)};
}

}  // namespace

NormalFormGrid evaluate_normal_form_grid(const FamilySpec& spec, double lo,
                                         double hi, int count) {
  if (count < 2 || !(lo < hi)) {
    throw DomainViolation("normal-form grid needs lo < hi and count >= 2");
  }
  NormalFormGrid grid;
  grid.spec = spec;
  grid.profile = critical_points(spec);
  grid.t.reserve(count);
  const bool with_j = spec.kind != FamilyKind::Laguerre;
  for (int i = 0; i < count; ++i) {
    const double t = lo + (hi - lo) * i / (count - 1);
    grid.t.push_back(t);
    grid.f_values.push_back(F_eval(spec, t));
    if (with_j) grid.j_values.push_back(j_eval(spec, t));
  }
  return grid;
}

std::string format_double(double v) { return OrderedJson(v).dump(); }

OrderedJson to_json(const FamilySpec& spec) {
  OrderedJson j;
  j["family"] = to_string(spec.kind);
  j["alpha"] = json_num(spec.alpha);
  j["beta"] = spec.kind == FamilyKind::Laguerre ? OrderedJson(nullptr)
                                                : json_num(spec.effective_beta());
  j["degree"] = spec.degree;
  return j;
}

FamilySpec spec_from_json(const OrderedJson& j) {
  const std::string family = j.at("family").get<std::string>();
  const double alpha = j.at("alpha").get<double>();
  const int degree = j.at("degree").get<int>();
  if (family == "laguerre") return FamilySpec::laguerre(alpha, degree);
  if (family == "ultraspherical") return FamilySpec::ultraspherical(alpha, degree);
  if (family == "jacobi") {
    return FamilySpec::jacobi(alpha, j.at("beta").get<double>(), degree);
  }
  throw ParameterOutOfRange("unknown family name: " + family);
}

OrderedJson to_json(const NormalFormProfile& profile) {
  OrderedJson j;
  j["family"] = to_json(profile.family);
  j["support"] = to_json(profile.support_interval);
  j["x_aux"] = json_opt(profile.x_aux);
  j["y_aux"] = json_opt(profile.y_aux);
  j["z_aux"] = json_opt(profile.z_aux);
  j["t0"] = json_opt(profile.t0);
  if (profile.t12) {
    j["t12"] = OrderedJson::array({json_num((*profile.t12)[0]), json_num((*profile.t12)[1])});
    j["t12_in_support"] = OrderedJson::array(
        {profile.t12_in_support[0], profile.t12_in_support[1]});
  } else {
    j["t12"] = nullptr;
    j["t12_in_support"] = nullptr;
  }
  j["T12"] = profile.T12
                 ? OrderedJson::array({json_num((*profile.T12)[0]), json_num((*profile.T12)[1])})
                 : OrderedJson(nullptr);
  j["discriminant"] = json_opt(profile.discriminant);
  j["discriminant_sign"] = profile.discriminant_sign;
  return j;
}

OrderedJson to_json(const ZeroSet& zs) {
  OrderedJson j;
  j["spec"] = to_json(zs.spec);
  j["zeros"] = zs.zeros;
  j["spacings"] = zs.spacings;
  j["second_differences"] = zs.second_differences;
  return j;
}

OrderedJson to_json(const NormalFormGrid& grid) {
  OrderedJson j;
  j["spec"] = to_json(grid.spec);
  j["profile"] = to_json(grid.profile);
  j["t"] = grid.t;
  j["f_values"] = grid.f_values;
  j["j_values"] = grid.j_values.empty() ? OrderedJson(nullptr) : OrderedJson(grid.j_values);
  return j;
}

OrderedJson to_json(const ConvexityReport& report) {
  OrderedJson j;
  j["spec"] = to_json(report.spec);
  OrderedJson pieces = OrderedJson::array();
  for (const LabeledInterval& piece : report.partition) {
    OrderedJson p;
    p["lo"] = json_num(piece.span.lo);
    p["hi"] = json_num(piece.span.hi);
    p["label"] = to_string(piece.label);
    p["provenance"] = piece.provenance;
    pieces.push_back(std::move(p));
  }
  j["partition"] = std::move(pieces);
  j["boundaries"] = report.boundaries;
  return j;
}

OrderedJson to_json(const EmpiricalClassification& cls) {
  OrderedJson j;
  OrderedJson triples = OrderedJson::array();
  for (const TripleClassification& tc : cls.triples) {
    OrderedJson t;
    t["k"] = tc.k;
    t["piece"] = tc.piece ? OrderedJson(*tc.piece) : OrderedJson(nullptr);
    t["sign"] = tc.sign;
    t["verdict"] = to_string(tc.verdict);
    triples.push_back(std::move(t));
  }
  j["triples"] = std::move(triples);
  return j;
}

OrderedJson to_json(const GapBoundRecord& rec) {
  OrderedJson j;
  j["k"] = rec.k;
  j["x_k"] = json_num(rec.x_k);
  j["x_k1"] = json_num(rec.x_k1);
  j["spacing"] = json_num(rec.spacing);
  j["lower"] = json_opt(rec.lower);
  j["upper"] = json_opt(rec.upper);
  j["lower_source"] = rec.lower ? OrderedJson(rec.lower_source) : OrderedJson(nullptr);
  j["upper_source"] = rec.upper ? OrderedJson(rec.upper_source) : OrderedJson(nullptr);
  j["lower_satisfied"] = rec.lower_satisfied;
  j["upper_satisfied"] = rec.upper_satisfied;
  j["lower_margin"] = json_opt(rec.lower_margin);
  j["upper_margin"] = json_opt(rec.upper_margin);
  return j;
}

OrderedJson to_json(const BoundSuiteReport& report) {
  OrderedJson j;
  j["spec"] = to_json(report.spec);
  j["global_lower_paper"] = global_or_null(report.global_lower_paper);
  j["global_lower_derived"] = global_or_null(report.global_lower_derived);
  j["global_upper_F0"] = global_or_null(report.global_upper_F0);
  j["global_lower_F0"] = global_or_null(report.global_lower_F0);
  j["global_lower_FT2"] = global_or_null(report.global_lower_FT2);
  OrderedJson records = OrderedJson::array();
  for (const GapBoundRecord& rec : report.records) records.push_back(to_json(rec));
  j["records"] = std::move(records);
  OrderedJson violations = OrderedJson::array();
  for (const BoundViolation& v : report.violations) {
    OrderedJson vj;
    vj["k"] = v.k;
    vj["which"] = v.which;
    vj["margin"] = json_num(v.margin);
    violations.push_back(std::move(vj));
  }
  j["violations"] = std::move(violations);
  return j;
}

OrderedJson to_json(const SweepSummary& summary) {
  OrderedJson j;
  j["grid"] = summary.grid_description;
  OrderedJson totals;
  totals["specs_run"] = summary.specs_run;
  totals["triples_classified"] = summary.triples_classified;
  totals["agreements"] = summary.agreements;
  totals["disagreements"] = summary.disagreements;
  totals["straddles"] = summary.straddles;
  totals["below_tolerance"] = summary.below_tolerance;
  totals["bound_checks"] = summary.bound_checks;
  totals["violations"] = summary.violations;
  totals["paper_literal_checks"] = summary.paper_literal_checks;
  totals["paper_literal_failures"] = summary.paper_literal_failures;
  totals["laguerre_first_zero_below_t0"] = summary.laguerre_first_zero_below_t0;
  totals["first_zero_bound_anomalies"] = summary.first_zero_bound_anomalies;
  j["totals"] = std::move(totals);
  OrderedJson details = OrderedJson::array();
  for (const SweepViolationDetail& v : summary.violation_details) {
    OrderedJson vj;
    vj["spec"] = to_json(v.spec);
    vj["k"] = v.k;
    vj["which"] = v.which;
    vj["margin"] = json_num(v.margin);
    details.push_back(std::move(vj));
  }
  j["violation_details"] = std::move(details);
  return j;
}

OrderedJson report_envelope(const std::optional<FamilySpec>& spec,
                            const std::string& payload_key, OrderedJson payload) {
  OrderedJson j;
  j["tool_version"] = kToolVersion;
  j["spec"] = spec ? to_json(*spec) : OrderedJson(nullptr);
  j[payload_key] = std::move(payload);
  return j;
}

std::string to_csv(const ZeroSet& zs) {
  std::ostringstream os;
  csv_row(os, {"kind", "index", "value"});
  for (std::size_t i = 0; i < zs.zeros.size(); ++i) {
    csv_row(os, {"zero", std::to_string(i + 1), csv_num(zs.zeros[i])});
  }
  for (std::size_t i = 0; i < zs.spacings.size(); ++i) {
    csv_row(os, {"spacing", std::to_string(i + 1), csv_num(zs.spacings[i])});
  }
  for (std::size_t i = 0; i < zs.second_differences.size(); ++i) {
    csv_row(os, {"second_difference", std::to_string(i + 1),
                 csv_num(zs.second_differences[i])});
  }
  return os.str();
}

std::string to_csv(const NormalFormGrid& grid) {
  std::ostringstream os;
  csv_row(os, {"kind", "index", "t", "f_value", "j_value"});
  for (std::size_t i = 0; i < grid.t.size(); ++i) {
    csv_row(os, {"grid_point", std::to_string(i + 1), csv_num(grid.t[i]),
                 csv_num(grid.f_values[i]),
                 grid.j_values.empty() ? std::string() : csv_num(grid.j_values[i])});
  }
  return os.str();
}

std::string to_csv(const ConvexityReport& report, const EmpiricalClassification& cls) {
  std::ostringstream os;
  csv_row(os, {"kind", "index", "lo", "hi", "label", "provenance", "sign", "verdict"});
  for (std::size_t i = 0; i < report.partition.size(); ++i) {
    const LabeledInterval& piece = report.partition[i];
    csv_row(os, {"interval", std::to_string(i + 1),
                 std::isfinite(piece.span.lo) ? csv_num(piece.span.lo) : std::string(),
                 std::isfinite(piece.span.hi) ? csv_num(piece.span.hi) : std::string(),
                 to_string(piece.label), piece.provenance, "", ""});
  }
  for (const TripleClassification& tc : cls.triples) {
    std::string lo, hi, label;
    if (tc.piece) {
      const LabeledInterval& piece = report.partition[*tc.piece];
      lo = std::isfinite(piece.span.lo) ? csv_num(piece.span.lo) : std::string();
      hi = std::isfinite(piece.span.hi) ? csv_num(piece.span.hi) : std::string();
      label = to_string(piece.label);
    }
    csv_row(os, {"triple", std::to_string(tc.k), lo, hi, label, "",
                 std::to_string(tc.sign), to_string(tc.verdict)});
  }
  return os.str();
}

std::string to_csv(const BoundSuiteReport& report) {
  std::ostringstream os;
  csv_row(os, {"kind", "index", "x_k", "x_k1", "spacing", "lower", "upper",
               "lower_source", "upper_source", "lower_satisfied",
               "upper_satisfied", "lower_margin", "upper_margin"});
  for (const GapBoundRecord& rec : report.records) {
    csv_row(os, {"gap", std::to_string(rec.k), csv_num(rec.x_k), csv_num(rec.x_k1),
                 csv_num(rec.spacing), csv_opt(rec.lower), csv_opt(rec.upper),
                 rec.lower ? rec.lower_source : std::string(),
                 rec.upper ? rec.upper_source : std::string(),
                 csv_bool(rec.lower_satisfied), csv_bool(rec.upper_satisfied),
                 csv_opt(rec.lower_margin), csv_opt(rec.upper_margin)});
  }
  const std::pair<const char*, const std::optional<GlobalBound>*> globals[] = {
      {"laguerre-global-literal", &report.global_lower_paper},
      {"laguerre-global-sup-F", &report.global_lower_derived},
      {"ultraspherical-global-upper-F0", &report.global_upper_F0},
      {"ultraspherical-global-lower-F0", &report.global_lower_F0},
      {"ultraspherical-global-lower-FT2", &report.global_lower_FT2}};
  for (const auto& [name, bound] : globals) {
    if (!bound->has_value()) continue;
    const GlobalBound& g = **bound;
    const bool is_upper = std::string(name).find("upper") != std::string::npos;
    csv_row(os, {"global", "", "", "", "", is_upper ? "" : csv_num(g.value),
                 is_upper ? csv_num(g.value) : "", is_upper ? "" : name,
                 is_upper ? name : "", csv_bool(!is_upper ? g.satisfied : true),
                 csv_bool(is_upper ? g.satisfied : true),
                 is_upper ? "" : csv_num(g.margin), is_upper ? csv_num(g.margin) : ""});
  }
  return os.str();
}

std::string to_csv(const SweepSummary& summary) {
  std::ostringstream os;
  csv_row(os, {"kind", "name", "value", "family", "alpha", "beta", "degree",
               "k", "which", "margin"});
  const std::pair<const char*, int> totals[] = {
      {"specs_run", summary.specs_run},
      {"triples_classified", summary.triples_classified},
      {"agreements", summary.agreements},
      {"disagreements", summary.disagreements},
      {"straddles", summary.straddles},
      {"below_tolerance", summary.below_tolerance},
      {"bound_checks", summary.bound_checks},
      {"violations", summary.violations},
      {"paper_literal_checks", summary.paper_literal_checks},
      {"paper_literal_failures", summary.paper_literal_failures},
      {"laguerre_first_zero_below_t0", summary.laguerre_first_zero_below_t0},
      {"first_zero_bound_anomalies", summary.first_zero_bound_anomalies}};
  for (const auto& [name, value] : totals) {
    csv_row(os, {"total", name, std::to_string(value), "", "", "", "", "", "", ""});
  }
  for (const SweepViolationDetail& v : summary.violation_details) {
    auto spec_fields = spec_csv_fields(v.spec);
    csv_row(os, {"violation", "", "", spec_fields[0], spec_fields[1],
                 spec_fields[2], spec_fields[3], std::to_string(v.k), v.which,
                 csv_num(v.margin)});
  }
  return os.str();
}

}  // namespace orthozeros
