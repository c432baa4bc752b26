#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gbm/expansion.hpp"
#include "gbm/format.hpp"
#include "gbm/gauss.hpp"
#include "gbm/measures.hpp"
#include "gbm/refutation.hpp"

namespace {

using nlohmann::ordered_json;

constexpr const char* kGapCsvHeader =
    "alpha,eps,lambda,gap,gap_error_bound,predicted,agreement,violated";

struct OutputOptions {
  std::string format = "json";
  int precision = 17;
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--format", out.format, "Output format (json or csv)")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--precision", out.precision,
                  "Significant digits in numeric output")
      ->check(CLI::Range(6, 17));
}

double to_radians(double angle, bool degrees) {
  return degrees ? angle * gbm::kPi / 180.0 : angle;
}

const char* shape_name(gbm::BShape s) {
  switch (s) {
    case gbm::BShape::wedge:
      return "wedge";
    case gbm::BShape::strip:
      return "strip";
    default:
      return "halfspace1d";
  }
}

ordered_json gap_to_json(const gbm::GapReport& r, int prec) {
  ordered_json j;
  j["alpha"] = gbm::round_to_precision(r.alpha, prec);
  j["eps"] = gbm::round_to_precision(r.eps, prec);
  j["lambda"] = gbm::round_to_precision(r.lambda, prec);
  j["gap"] = gbm::round_to_precision(r.gap, prec);
  j["gap_error_bound"] = gbm::round_to_precision(r.gap_error_bound, prec);
  j["predicted"] = gbm::round_to_precision(r.predicted, prec);
  j["agreement"] = gbm::round_to_precision(r.agreement, prec);
  j["violated"] = r.violated;
  j["converged"] = r.converged;
  return j;
}

std::string gap_csv_row(const gbm::GapReport& r, int prec) {
  std::string s;
  const auto add = [&](double v) {
    s += gbm::format_double(v, prec);
    s += ',';
  };
  add(r.alpha);
  add(r.eps);
  add(r.lambda);
  add(r.gap);
  add(r.gap_error_bound);
  add(r.predicted);
  add(r.agreement);
  s += r.violated ? "true" : "false";
  return s;
}

void print_gap(const gbm::GapReport& r, const OutputOptions& out) {
  if (out.format == "csv")
    std::cout << kGapCsvHeader << "\n" << gap_csv_row(r, out.precision) << "\n";
  else
    std::cout << gap_to_json(r, out.precision).dump(2) << "\n";
}

void print_bconj(const gbm::BConjReport& r, const OutputOptions& out) {
  if (out.format == "csv") {
    std::cout << "shape,alpha,eps,halfwidth,t0,step,second_derivative,"
                 "fd_error_bound,log_concave_locally\n";
    std::string s = shape_name(r.shape);
    const auto add = [&](double v) {
      s += ',';
      s += gbm::format_double(v, out.precision);
    };
    add(r.alpha);
    add(r.eps);
    add(r.halfwidth);
    add(r.t0);
    add(r.step);
    add(r.second_derivative);
    add(r.fd_error_bound);
    s += r.log_concave_locally ? ",true" : ",false";
    std::cout << s << "\n";
  } else {
    ordered_json j;
    j["shape"] = shape_name(r.shape);
    j["alpha"] = gbm::round_to_precision(r.alpha, out.precision);
    j["eps"] = gbm::round_to_precision(r.eps, out.precision);
    j["halfwidth"] = gbm::round_to_precision(r.halfwidth, out.precision);
    j["t0"] = gbm::round_to_precision(r.t0, out.precision);
    j["step"] = gbm::round_to_precision(r.step, out.precision);
    j["second_derivative"] =
        gbm::round_to_precision(r.second_derivative, out.precision);
    j["fd_error_bound"] = gbm::round_to_precision(r.fd_error_bound, out.precision);
    j["log_concave_locally"] = r.log_concave_locally;
    std::cout << j.dump(2) << "\n";
  }
}

int write_reports(const std::vector<gbm::GapReport>& reports,
                  const std::string& path, const OutputOptions& out) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp(path + ".tmp");
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) {
      std::cerr << "gbmverify: cannot open " << tmp.string() << " for writing\n";
      return 1;
    }
    if (out.format == "csv") {
      os << kGapCsvHeader << "\n";
      for (const auto& r : reports) os << gap_csv_row(r, out.precision) << "\n";
    } else {
      ordered_json arr = ordered_json::array();
      for (const auto& r : reports) arr.push_back(gap_to_json(r, out.precision));
      os << arr.dump(2) << "\n";
    }
    os.flush();
    if (!os) {
      std::cerr << "gbmverify: write failed for " << tmp.string() << "\n";
      std::error_code ec;
      fs::remove(tmp, ec);
      return 1;
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    std::cerr << "gbmverify: cannot rename " << tmp.string() << " to " << path
              << ": " << ec.message() << "\n";
    std::error_code ec2;
    fs::remove(tmp, ec2);
    return 1;
  }
  std::cout << "wrote " << reports.size() << " reports to " << path << "\n";
  return 0;
}

}

int main(int argc, char** argv) {
  CLI::App app{
      "Certified numerical checks of wedge counter-examples to the Gaussian "
      "Brunn-Minkowski inequality and the nonsymmetric (B) property"};
  app.require_subcommand(1);
  int rc = 0;

  struct {
    double alpha = 0, eps = 0, lambda = 0, tol = 1e-10;
    bool degrees = false;
    OutputOptions out;
  } rep;
  auto* reproduce = app.add_subcommand(
      "reproduce", "Certified gap for one (alpha, eps, lambda) triple");
  reproduce->add_option("--alpha", rep.alpha, "Wedge angle from the x-axis")
      ->required();
  reproduce->add_option("--eps", rep.eps, "Downward translation of the second wedge")
      ->required()
      ->check(CLI::NonNegativeNumber);
  reproduce->add_option("--lambda", rep.lambda, "Combination weight")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  reproduce->add_option("--tol", rep.tol, "Quadrature absolute tolerance")
      ->check(CLI::PositiveNumber);
  reproduce->add_flag("--degrees", rep.degrees, "Angles are given in degrees");
  add_output_options(reproduce, rep.out);
  reproduce->callback([&] {
    const gbm::GapReport r =
        gbm::gbm_gap(to_radians(rep.alpha, rep.degrees), rep.eps, rep.lambda,
                     gbm::QuadratureConfig::with_tol(rep.tol));
    print_gap(r, rep.out);
  });

  struct {
    double tol = 1e-12;
    OutputOptions out;
  } ca;
  auto* critical = app.add_subcommand(
      "critical-angle", "Root of the discriminant bracket in (0, pi/2)");
  critical->add_option("--tol", ca.tol, "Bisection tolerance")
      ->check(CLI::PositiveNumber);
  add_output_options(critical, ca.out);
  critical->callback([&] {
    const double root = gbm::critical_angle(ca.tol);
    const double lo = std::clamp(root - ca.tol, 0.0, gbm::kHalfPi - 1e-6);
    const double hi = std::clamp(root + ca.tol, 0.0, gbm::kHalfPi - 1e-6);
    const double below = gbm::critical_angle_bracket(lo);
    const double above = gbm::critical_angle_bracket(hi);
    if (ca.out.format == "csv") {
      std::cout << "root,tol,bracket_below,bracket_above\n"
                << gbm::format_double(root, ca.out.precision) << ','
                << gbm::format_double(ca.tol, ca.out.precision) << ','
                << gbm::format_double(below, ca.out.precision) << ','
                << gbm::format_double(above, ca.out.precision) << "\n";
    } else {
      ordered_json j;
      j["root"] = gbm::round_to_precision(root, ca.out.precision);
      j["tol"] = gbm::round_to_precision(ca.tol, ca.out.precision);
      j["bracket_below"] = gbm::round_to_precision(below, ca.out.precision);
      j["bracket_above"] = gbm::round_to_precision(above, ca.out.precision);
      std::cout << j.dump(2) << "\n";
    }
  });

  struct {
    std::vector<double> alphas, epss, lambdas;
    double tol = 1e-10;
    std::string path;
    bool degrees = false;
    OutputOptions out;
  } sc;
  auto* scan = app.add_subcommand("scan", "Gap reports over a parameter grid");
  scan->add_option("--alphas", sc.alphas, "Wedge angles")->required()->delimiter(',');
  scan->add_option("--epss", sc.epss, "Translations")->required()->delimiter(',');
  scan->add_option("--lambdas", sc.lambdas, "Combination weights")
      ->required()
      ->delimiter(',');
  scan->add_option("--out", sc.path, "Output file")->required();
  scan->add_option("--tol", sc.tol, "Quadrature absolute tolerance")
      ->check(CLI::PositiveNumber);
  scan->add_flag("--degrees", sc.degrees, "Angles are given in degrees");
  add_output_options(scan, sc.out);
  scan->callback([&] {
    std::vector<double> alphas = sc.alphas;
    if (sc.degrees)
      for (double& a : alphas) a = to_radians(a, true);
    const auto reports =
        gbm::gbm_scan(alphas, sc.epss, sc.lambdas, gbm::QuadratureConfig::with_tol(sc.tol));
    rc = write_reports(reports, sc.path, sc.out);
  });

  struct {
    std::string shape;
    double alpha = 0, eps = 0, c = 0, t0 = 0, h = 0.05, tol = 1e-12;
    bool degrees = false;
    OutputOptions out;
  } bc;
  auto* bconj = app.add_subcommand(
      "bconj", "Second derivative of t -> ln gamma(e^t K) at t0");
  // long-form help only, so the step flag --h stays available
  bconj->set_help_flag("--help", "Print this help message and exit");
  bconj->add_option("--shape", bc.shape, "wedge, strip or halfspace1d")
      ->required()
      ->check(CLI::IsMember({"wedge", "strip", "halfspace1d"}));
  auto* bc_alpha = bconj->add_option("--alpha", bc.alpha, "Wedge angle");
  auto* bc_eps = bconj->add_option("--eps", bc.eps, "Translation")
                     ->check(CLI::NonNegativeNumber);
  auto* bc_c = bconj->add_option("--c", bc.c, "Strip halfwidth")
                   ->check(CLI::PositiveNumber);
  bconj->add_option("--t0", bc.t0, "Expansion point");
  bconj->add_option("--h", bc.h, "Finite difference step")
      ->check(CLI::PositiveNumber);
  bconj->add_option("--tol", bc.tol, "Quadrature absolute tolerance (wedge only)")
      ->check(CLI::PositiveNumber);
  bconj->add_flag("--degrees", bc.degrees, "Angles are given in degrees");
  add_output_options(bconj, bc.out);
  bconj->callback([&] {
    gbm::BConjReport r;
    if (bc.shape == "wedge") {
      if (bc_alpha->count() == 0 || bc_eps->count() == 0) {
        std::cerr << "gbmverify: --shape wedge requires --alpha and --eps\n";
        rc = 1;
        return;
      }
      r = gbm::b_second_derivative_wedge(
          gbm::Wedge(to_radians(bc.alpha, bc.degrees), bc.eps), bc.t0, bc.h,
          gbm::QuadratureConfig::with_tol(bc.tol));
    } else if (bc.shape == "strip") {
      if (bc_c->count() == 0) {
        std::cerr << "gbmverify: --shape strip requires --c\n";
        rc = 1;
        return;
      }
      r = gbm::b_second_derivative_strip(gbm::Strip(bc.c), bc.t0, bc.h);
    } else {
      if (bc_eps->count() == 0) {
        std::cerr << "gbmverify: --shape halfspace1d requires --eps\n";
        rc = 1;
        return;
      }
      r = gbm::b_second_derivative_halfspace1d(bc.eps, bc.t0, bc.h);
    }
    print_bconj(r, bc.out);
  });

  struct {
    double alpha = 0, shift = 0, tol = 1e-10;
    std::int64_t n = 0;
    std::uint64_t seed = 12345;
    bool degrees = false;
    OutputOptions out;
  } orc;
  auto* oracle = app.add_subcommand(
      "oracle", "Cross-check quadrature against Monte Carlo for one wedge");
  oracle->add_option("--alpha", orc.alpha, "Wedge angle")->required();
  oracle->add_option("--shift", orc.shift, "Downward translation")
      ->check(CLI::NonNegativeNumber);
  oracle->add_option("--n", orc.n, "Sample count")
      ->required()
      ->check(CLI::Range(std::int64_t{1000},
                         std::numeric_limits<std::int64_t>::max()));
  oracle->add_option("--seed", orc.seed, "RNG seed");
  oracle->add_option("--tol", orc.tol, "Quadrature absolute tolerance")
      ->check(CLI::PositiveNumber);
  oracle->add_flag("--degrees", orc.degrees, "Angles are given in degrees");
  add_output_options(oracle, orc.out);
  oracle->callback([&] {
    const gbm::Wedge w(to_radians(orc.alpha, orc.degrees), orc.shift);
    const gbm::QuadratureResult quad =
        gbm::wedge_measure(w, gbm::QuadratureConfig::with_tol(orc.tol));
    const gbm::MonteCarloEstimate mc =
        gbm::wedge_measure_montecarlo(w, orc.n, orc.seed);
    double z;
    if (mc.std_error > 0.0)
      z = (mc.mean - quad.value) / mc.std_error;
    else
      z = mc.mean == quad.value ? 0.0 : std::numeric_limits<double>::infinity();
    if (orc.out.format == "csv") {
      std::cout << "alpha,shift,samples,seed,quadrature,quadrature_error_bound,"
                   "mc_mean,mc_std_error,z\n"
                << gbm::format_double(w.alpha, orc.out.precision) << ','
                << gbm::format_double(w.shift, orc.out.precision) << ','
                << mc.samples << ',' << mc.seed << ','
                << gbm::format_double(quad.value, orc.out.precision) << ','
                << gbm::format_double(quad.error_bound, orc.out.precision) << ','
                << gbm::format_double(mc.mean, orc.out.precision) << ','
                << gbm::format_double(mc.std_error, orc.out.precision) << ','
                << gbm::format_double(z, orc.out.precision) << "\n";
    } else {
      ordered_json j;
      j["alpha"] = gbm::round_to_precision(w.alpha, orc.out.precision);
      j["shift"] = gbm::round_to_precision(w.shift, orc.out.precision);
      j["samples"] = mc.samples;
      j["seed"] = mc.seed;
      j["quadrature"] = gbm::round_to_precision(quad.value, orc.out.precision);
      j["quadrature_error_bound"] =
          gbm::round_to_precision(quad.error_bound, orc.out.precision);
      j["mc_mean"] = gbm::round_to_precision(mc.mean, orc.out.precision);
      j["mc_std_error"] = gbm::round_to_precision(mc.std_error, orc.out.precision);
      j["z"] = gbm::round_to_precision(z, orc.out.precision);
      std::cout << j.dump(2) << "\n";
    }
    rc = std::abs(z) <= 5.0 ? 0 : 3;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const gbm::ConvergenceError& e) {
    std::cerr << "gbmverify: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "gbmverify: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
