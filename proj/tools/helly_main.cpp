// Command-line front end: parse an instance, run the selection pipeline or
// the lower-bound experiments, and emit a machine-readable JSON report.
//
// Exit codes: 0 success, 2 parse error, 3 precondition violation,
// 4 certificate/numerical failure.

#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "helly/io.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitCertificate = 4;

void emit(const helly::Json& report, const std::string& out_path) {
  const std::string text = report.dump();
  if (out_path.empty()) {
    std::cout << text;
  } else {
    helly::write_file(out_path, text);
  }
}

helly::CenterMethod parse_center(const std::string& s) {
  if (s == "centroid") return helly::CenterMethod::Centroid;
  if (s == "loewner") return helly::CenterMethod::Loewner;
  throw CLI::ValidationError("--center must be 'centroid' or 'loewner'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified subfamily selection for halfspace intersections"};
  app.require_subcommand(1);

  std::string instance_path, out_path;
  std::string mode = "2d", center = "centroid";
  int opt_d = 2, opt_n = 360, opt_trials = 50;
  std::uint64_t seed = 0;
  bool with_timings = false;

  CLI::App* sel = app.add_subcommand(
      "select", "Select <= 2d (or 2d+1) halfspaces with certified bounds");
  sel->add_option("instance", instance_path, "instance JSON file")->required();
  sel->add_option("--mode", mode, "2d or 2d+1")->default_str("2d");
  sel->add_option("--center", center, "centroid or loewner")
      ->default_str("centroid");
  sel->add_option("--out", out_path, "write the report here");
  sel->add_flag("--timings", with_timings, "append wall-clock timings");

  CLI::App* cen = app.add_subcommand(
      "center", "Compute an interior center and its asymmetry constant");
  cen->add_option("instance", instance_path, "instance JSON file")->required();
  cen->add_option("--center", center, "centroid or loewner")
      ->default_str("centroid");
  cen->add_option("--out", out_path, "write the report here");

  CLI::App* low = app.add_subcommand(
      "lowerbound", "Witness sweep: norms >= d/sqrt(|sigma|) on random sigma");
  low->add_option("--d", opt_d, "dimension")->default_val(2);
  low->add_option("--n", opt_n, "family size")->default_val(360);
  low->add_option("--trials", opt_trials, "number of sigma draws")
      ->default_val(50);
  low->add_option("--seed", seed, "RNG seed")->default_val(0);
  low->add_option("--out", out_path, "write the report here");

  CLI::App* probe = app.add_subcommand(
      "probe-conjecture2", "One-sided max-norm probe on exactly 2d vectors");
  probe->add_option("vectors", instance_path, "unit-vector JSON file")
      ->required();
  probe->add_option("--out", out_path, "write the report here");

  CLI11_PARSE(app, argc, argv);

  try {
    const helly::Tolerance tol = helly::tolerance_from_env();

    if (sel->parsed()) {
      if (mode != "2d" && mode != "2d+1") {
        std::cerr << "error: --mode must be '2d' or '2d+1'\n";
        return kExitPrecondition;
      }
      const std::string raw = helly::read_file(instance_path);
      const helly::Instance inst = helly::parse_instance(raw);
      const auto m = mode == "2d" ? helly::SelectionMode::Mu2d
                                  : helly::SelectionMode::Sigma2dPlus1;
      const auto t0 = std::chrono::steady_clock::now();
      const helly::SelectionResult res =
          helly::run_pipeline(inst.body, m, parse_center(center), tol);
      const auto t1 = std::chrono::steady_clock::now();
      helly::Json rep = helly::selection_report(res, helly::fnv1a_hex(raw));
      if (with_timings) {
        const double ms =
            std::chrono::duration<double, std::milli>(t1 - t0).count();
        helly::Json t = helly::Json::object();
        t.set("pipeline_ms", ms);
        rep.set("timings", std::move(t));
      }
      emit(rep, out_path);
      return 0;
    }

    if (cen->parsed()) {
      const std::string raw = helly::read_file(instance_path);
      const helly::Instance inst = helly::parse_instance(raw);
      const helly::CenterReport rep =
          helly::make_center_report(inst.body, parse_center(center), tol);
      if (rep.lambda > inst.body.dim + 1e-6) {
        emit(helly::center_report_json(rep, inst.body.dim,
                                       helly::fnv1a_hex(raw)),
             out_path);
        std::cerr << "error: lambda exceeds d + 1e-6\n";
        return kExitCertificate;
      }
      emit(helly::center_report_json(rep, inst.body.dim, helly::fnv1a_hex(raw)),
           out_path);
      return 0;
    }

    if (low->parsed()) {
      if (opt_d < 2 || opt_n < 2 * opt_d || opt_trials < 1) {
        std::cerr << "error: need d >= 2, n >= 2d, trials >= 1\n";
        return kExitPrecondition;
      }
      const helly::DiameterGapSummary sum =
          helly::diameter_gap_experiment(opt_d, opt_n, opt_trials, seed, tol);
      emit(helly::lowerbound_report(sum), out_path);
      return 0;
    }

    if (probe->parsed()) {
      const std::string raw = helly::read_file(instance_path);
      const helly::StripFamily fam = helly::parse_vectors(raw);
      const helly::ConjectureProbe p = helly::conjecture2_probe(fam, tol);
      emit(helly::probe_report(p, helly::fnv1a_hex(raw)), out_path);
      return 0;
    }
  } catch (const helly::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const helly::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const helly::CertificateError& e) {
    std::cerr << "certificate failure: " << e.what() << "\n";
    return kExitCertificate;
  } catch (const helly::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitCertificate;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
