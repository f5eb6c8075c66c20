#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orthozeros/report.hpp"
#include "orthozeros/version.hpp"

namespace oz = orthozeros;

namespace {

struct SpecOptions {
  std::string family;
  double alpha = 0.0;
  std::optional<double> beta;
  int degree = 1;
};

oz::FamilySpec make_spec(const SpecOptions& opt) {
  if (opt.family == "laguerre") {
    if (opt.beta) throw CLI::ValidationError("--beta applies to jacobi only");
    return oz::FamilySpec::laguerre(opt.alpha, opt.degree);
  }
  if (opt.family == "ultraspherical") {
    if (opt.beta) throw CLI::ValidationError("--beta applies to jacobi only (ultraspherical uses --alpha)");
    return oz::FamilySpec::ultraspherical(opt.alpha, opt.degree);
  }
  if (!opt.beta) throw CLI::ValidationError("jacobi requires --beta");
  return oz::FamilySpec::jacobi(opt.alpha, *opt.beta, opt.degree);
}

void add_spec_options(CLI::App* sub, SpecOptions& opt) {
  sub->add_option("--family", opt.family, "polynomial family")
      ->required()
      ->check(CLI::IsMember({"laguerre", "jacobi", "ultraspherical"}));
  sub->add_option("--alpha", opt.alpha, "family parameter alpha")->required();
  sub->add_option("--beta", opt.beta, "family parameter beta (jacobi only)");
  sub->add_option("--n", opt.degree, "polynomial degree")->required();
}

void emit(const oz::OrderedJson& envelope, const std::string& csv_path,
          const std::string& csv_body) {
  std::cout << envelope.dump(2) << '\n';
  if (!csv_path.empty()) {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw oz::Error("cannot open CSV output file: " + csv_path);
    out << csv_body;
  }
}

// "lo:hi:step" inclusive range, or a single value.
std::vector<double> parse_range(const std::string& text) {
  const auto c1 = text.find(':');
  if (c1 == std::string::npos) return {std::stod(text)};
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string::npos) {
    throw CLI::ValidationError("range must be lo:hi:step, got " + text);
  }
  const double lo = std::stod(text.substr(0, c1));
  const double hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
  const double step = std::stod(text.substr(c2 + 1));
  if (!(step > 0.0) || hi < lo) {
    throw CLI::ValidationError("range must have lo <= hi and step > 0: " + text);
  }
  std::vector<double> values;
  for (double v = lo; v <= hi + 1e-12 * std::max(1.0, std::abs(hi)); v += step) {
    values.push_back(v);
  }
  return values;
}

struct GridSteps {
  double lo = 0.0, hi = 0.0;
  int count = 0;
};

GridSteps parse_grid(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = text.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) {
    throw CLI::ValidationError("--t-grid must be lo:hi:count, got " + text);
  }
  GridSteps g;
  g.lo = std::stod(text.substr(0, c1));
  g.hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
  g.count = std::stoi(text.substr(c2 + 1));
  return g;
}

oz::SweepGrid custom_sweep(const std::string& family,
                           const std::vector<std::string>& alpha_ranges,
                           const std::vector<std::string>& beta_ranges,
                           const std::vector<std::string>& n_ranges) {
  std::vector<double> alphas, betas;
  std::vector<int> degrees;
  for (const auto& r : alpha_ranges) {
    for (double v : parse_range(r)) alphas.push_back(v);
  }
  for (const auto& r : beta_ranges) {
    for (double v : parse_range(r)) betas.push_back(v);
  }
  for (const auto& r : n_ranges) {
    for (double v : parse_range(r)) degrees.push_back(static_cast<int>(v));
  }
  if (family == "jacobi" && betas.empty()) {
    throw CLI::ValidationError("custom jacobi sweeps require --beta ranges");
  }
  if (family != "jacobi" && !betas.empty()) {
    throw CLI::ValidationError("--beta ranges apply to jacobi only");
  }
  if (betas.empty()) betas.push_back(0.0);  // placeholder for the product below

  oz::SweepGrid grid;
  grid.description = "custom: " + family;
  for (const auto& r : alpha_ranges) grid.description += " alpha " + r;
  for (const auto& r : beta_ranges) grid.description += " beta " + r;
  for (const auto& r : n_ranges) grid.description += " n " + r;

  for (double a : alphas) {
    for (double b : betas) {
      for (int n : degrees) {
        if (family == "laguerre") {
          grid.specs.push_back(oz::FamilySpec::laguerre(a, n));
        } else if (family == "ultraspherical") {
          grid.specs.push_back(oz::FamilySpec::ultraspherical(a, n));
        } else {
          grid.specs.push_back(oz::FamilySpec::jacobi(a, b, n));
        }
      }
    }
  }
  return grid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zeros, convexity intervals, and spacing bounds of Laguerre, "
               "Jacobi and ultraspherical polynomials"};
  app.set_version_flag("--version", oz::kToolVersion);
  app.require_subcommand(1);

  int exit_code = 0;

  // zeros
  SpecOptions zeros_opt;
  std::string zeros_csv;
  auto* zeros_cmd = app.add_subcommand("zeros", "compute the n zeros and their spacings");
  add_spec_options(zeros_cmd, zeros_opt);
  zeros_cmd->add_option("--csv", zeros_csv, "also write a CSV report to PATH");
  zeros_cmd->callback([&] {
    const oz::FamilySpec spec = make_spec(zeros_opt);
    const oz::ZeroSet zs = oz::compute_zeros(spec);
    emit(oz::report_envelope(spec, "zero_set", oz::to_json(zs)), zeros_csv,
         oz::to_csv(zs));
  });

  // normal-form
  SpecOptions nf_opt;
  std::string nf_csv, nf_grid;
  auto* nf_cmd = app.add_subcommand(
      "normal-form", "evaluate F and j on a grid, with the critical structure");
  add_spec_options(nf_cmd, nf_opt);
  nf_cmd->add_option("--t-grid", nf_grid, "grid lo:hi:count strictly inside the support")
      ->required();
  nf_cmd->add_option("--csv", nf_csv, "also write a CSV report to PATH");
  nf_cmd->callback([&] {
    const oz::FamilySpec spec = make_spec(nf_opt);
    const GridSteps g = parse_grid(nf_grid);
    const oz::NormalFormGrid grid =
        oz::evaluate_normal_form_grid(spec, g.lo, g.hi, g.count);
    emit(oz::report_envelope(spec, "normal_form", oz::to_json(grid)), nf_csv,
         oz::to_csv(grid));
  });

  // classify
  SpecOptions cls_opt;
  std::string cls_csv;
  double cls_tol = 1e-9;
  auto* cls_cmd = app.add_subcommand(
      "classify", "theoretical convexity partition plus the per-triple empirical check");
  add_spec_options(cls_cmd, cls_opt);
  cls_cmd->add_option("--tol", cls_tol, "relative dead band for zero second differences");
  cls_cmd->add_option("--csv", cls_csv, "also write a CSV report to PATH");
  cls_cmd->callback([&] {
    const oz::FamilySpec spec = make_spec(cls_opt);
    const oz::NormalFormProfile profile = oz::critical_points(spec);
    const oz::ConvexityReport report = oz::classify_theoretical(spec, profile);
    const oz::ZeroSet zs = oz::compute_zeros(spec);
    const oz::EmpiricalClassification cls = oz::classify_empirical(zs, report, cls_tol);
    oz::OrderedJson payload;
    payload["report"] = oz::to_json(report);
    payload["empirical"] = oz::to_json(cls);
    emit(oz::report_envelope(spec, "classification", std::move(payload)), cls_csv,
         oz::to_csv(report, cls));
    for (const auto& tc : cls.triples) {
      if (tc.verdict == oz::Verdict::Disagrees) exit_code = 2;
    }
  });

  // bounds
  SpecOptions bnd_opt;
  std::string bnd_csv;
  auto* bnd_cmd = app.add_subcommand(
      "bounds", "per-gap and whole-interval spacing bounds with satisfaction flags");
  add_spec_options(bnd_cmd, bnd_opt);
  bnd_cmd->add_option("--csv", bnd_csv, "also write a CSV report to PATH");
  bnd_cmd->callback([&] {
    const oz::FamilySpec spec = make_spec(bnd_opt);
    const oz::BoundSuiteReport suite = oz::verify_suite(spec);
    emit(oz::report_envelope(spec, "bound_suite", oz::to_json(suite)), bnd_csv,
         oz::to_csv(suite));
    if (!suite.violations.empty()) exit_code = 2;
  });

  // verify
  std::string sweep_name, verify_family, verify_csv;
  std::vector<std::string> verify_alpha, verify_beta, verify_n;
  double verify_tol = 1e-9;
  auto* verify_cmd = app.add_subcommand(
      "verify", "run the verification sweep and aggregate the results");
  verify_cmd->add_option("--sweep", sweep_name, "named sweep (default)")
      ->check(CLI::IsMember({"default"}));
  verify_cmd->add_option("--family", verify_family, "custom sweep family")
      ->check(CLI::IsMember({"laguerre", "jacobi", "ultraspherical"}));
  verify_cmd->add_option("--alpha", verify_alpha, "alpha range lo:hi:step (repeatable)");
  verify_cmd->add_option("--beta", verify_beta, "beta range lo:hi:step (jacobi, repeatable)");
  verify_cmd->add_option("--n", verify_n, "degree range lo:hi:step (repeatable)");
  verify_cmd->add_option("--tol", verify_tol, "relative dead band for zero second differences");
  verify_cmd->add_option("--csv", verify_csv, "also write a CSV report to PATH");
  verify_cmd->callback([&] {
    oz::SweepGrid grid;
    if (!sweep_name.empty()) {
      grid = oz::default_sweep();
    } else {
      if (verify_family.empty() || verify_alpha.empty() || verify_n.empty()) {
        throw CLI::ValidationError(
            "verify needs --sweep default, or --family with --alpha and --n ranges");
      }
      grid = custom_sweep(verify_family, verify_alpha, verify_beta, verify_n);
    }
    const oz::SweepSummary summary = oz::run_sweep(grid, verify_tol);
    emit(oz::report_envelope(std::nullopt, "sweep_summary", oz::to_json(summary)),
         verify_csv, oz::to_csv(summary));
    if (summary.violations > 0 || summary.disagreements > 0) exit_code = 2;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const oz::Overflow& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 3;
  } catch (const oz::ConvergenceFailure& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 3;
  } catch (const oz::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}
