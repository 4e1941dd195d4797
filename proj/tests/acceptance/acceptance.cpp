// Acceptance runner: one PASS/FAIL line per criterion. With an argument,
// runs only that criterion; exit status is non-zero when any run fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "ree/css_opt.hpp"
#include "ree/monogamy.hpp"
#include "ree/report.hpp"
#include "ree/sampling.hpp"
#include "ree/xfamily.hpp"

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// Seeds for the sampled criteria.
constexpr std::uint64_t kSeedOracle = 3001;
constexpr std::uint64_t kSeedCss = 4001;
constexpr std::uint64_t kSeedCkw = 6001;
constexpr std::uint64_t kSeedSymmetry = 7001;
constexpr std::uint64_t kSeedProbe = 8001;

struct Outcome {
  bool passed;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;
  std::function<Outcome()> run;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

int run_cli(const std::string& args) {
  const std::string command = std::string(REEMONO_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "reemono_acceptance";
  fs::create_directories(dir);
  return dir;
}

// (1 - l) ln(1 - l) + (l - 2) ln(1 - l/2), evaluated directly.
double vedral_plenio_direct(double l) {
  const double first = l < 1.0 ? (1 - l) * std::log(1 - l) : 0.0;
  return first + (l - 2) * std::log(1 - l / 2);
}

Outcome vedral_plenio_identity() {
  double worst = 0.0;
  for (int k = 1; k <= 19; ++k) {
    const double l = 0.05 * k;
    const double half = l / 2;
    const ree::XState s = ree::XState::make(1 - l, half, l - half);
    worst = std::max(worst, std::abs(ree::ree_closed_form(s) - vedral_plenio_direct(l)));
  }
  return {worst <= 1e-12, "max |closed - VP| = " + fmt(worst) + " (tol 1e-12)"};
}

Outcome bell_limit() {
  const double closed = ree::ree_closed_form(ree::XState::make(0.0, 0.5, 0.5));
  const double general = ree::ree_numeric_general(ree::to_density(ree::XState::make(0.0, 0.5, 0.5))).value;
  const double ln2 = std::numbers::ln2;
  const bool ok = std::abs(closed - ln2) <= 1e-12 && general >= ln2 - 1e-6 && general <= ln2 + 1e-4;
  return {ok, "closed - ln2 = " + fmt(closed - ln2) + ", general - ln2 = " + fmt(general - ln2) +
                  " (tol 1e-12; [-1e-6, 1e-4])"};
}

Outcome closed_form_cross_validation() {
  ree::SplitMix64 rng(kSeedOracle);
  double restricted_worst = 0.0;
  double general_min = ree::kInfinite;
  double general_max = -ree::kInfinite;
  int general_outside = 0;
  for (int i = 0; i < 500; ++i) {
    const ree::XState s = ree::sample_interior_xstate(rng);
    const double closed = ree::ree_closed_form(s);
    restricted_worst = std::max(restricted_worst, std::abs(ree::ree_numeric_restricted(s) - closed));
    const double diff = ree::ree_numeric_general(ree::to_density(s)).value - closed;
    general_min = std::min(general_min, diff);
    general_max = std::max(general_max, diff);
    if (diff < -1e-6 || diff > 1e-4) ++general_outside;
  }
  const bool ok = restricted_worst <= 1e-8 && general_outside == 0;
  return {ok, "restricted max err " + fmt(restricted_worst) + " (tol 1e-8); general - closed in [" + fmt(general_min) +
                  ", " + fmt(general_max) + "], " + std::to_string(general_outside) +
                  "/500 outside [-1e-6, 1e-4]"};
}

Outcome css_boundary() {
  ree::SplitMix64 rng(kSeedCss);
  double ppt_lo = ree::kInfinite;
  double ppt_hi = -ree::kInfinite;
  double s_worst = 0.0;
  int infinite = 0;
  for (int i = 0; i < 100; ++i) {
    const ree::XState s = ree::sample_interior_xstate(rng);
    const ree::CssReport report =
        ree::verify_css(ree::to_density(s), ree::css_from_angles(ree::minimize_g(s).angles));
    ppt_lo = std::min(ppt_lo, report.ppt_min_eigenvalue);
    ppt_hi = std::max(ppt_hi, report.ppt_min_eigenvalue);
    if (ree::is_infinite(report.relative_entropy_value)) {
      ++infinite;
      s_worst = ree::kInfinite;
    } else {
      s_worst = std::max(s_worst, std::abs(report.relative_entropy_value - ree::ree_closed_form(s)));
    }
  }
  const bool ok = ppt_lo >= -1e-9 && ppt_hi <= 1e-7 && s_worst <= 1e-8;
  return {ok, "min eig(sigma^TA) in [" + fmt(ppt_lo) + ", " + fmt(ppt_hi) + "] (want [-1e-9, 1e-7]); max |S - closed| = " +
                  fmt(s_worst) + " (tol 1e-8), " + std::to_string(infinite) + "/100 infinite"};
}

Outcome monogamy_sweep() {
  const fs::path csv = scratch_dir() / "sweep200.csv";
  const int code = run_cli("sweep --resolution 200 --out " + csv.string());
  if (code != 0) return {false, "sweep exited with " + std::to_string(code)};
  const ree::CsvTable table = ree::parse_csv(slurp(csv));
  const std::size_t alpha = table.column("alpha_sq");
  const std::size_t gamma = table.column("gamma_sq");
  const std::size_t d = table.column("delta");
  double min_delta = ree::kInfinite;
  double edge_worst = 0.0;
  for (const auto& row : table.rows) {
    min_delta = std::min(min_delta, row[d]);
    if (row[alpha] == 0.0 || row[gamma] == 0.0) edge_worst = std::max(edge_worst, std::abs(row[d]));
  }
  const double w_delta = ree::delta(ree::WParams::from_squares(1.0 / 3, 1.0 / 3, 1.0 / 3)).delta;
  // binary entropy of 1/3 minus twice the Vedral-Plenio value at 2/3
  const double w_expected = -(1.0 / 3) * std::log(1.0 / 3) - (2.0 / 3) * std::log(2.0 / 3) - 2 * vedral_plenio_direct(2.0 / 3);
  const bool ok = table.rows.size() == 20301 && min_delta >= -1e-9 && edge_worst <= 1e-9 &&
                  std::abs(w_delta - w_expected) <= 1e-6 && std::abs(w_delta - 0.287682) <= 1e-6;
  return {ok, std::to_string(table.rows.size()) + " rows, min delta " + fmt(min_delta) + ", edge max |delta| " +
                  fmt(edge_worst) + ", W-point delta " + std::to_string(w_delta)};
}

Outcome ckw_equality() {
  ree::SplitMix64 rng(kSeedCkw);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) worst = std::max(worst, std::abs(ree::concurrence_ckw_check(ree::sample_wparams(rng)).slack));
  return {worst <= 1e-12, "max |slack| = " + fmt(worst) + " (tol 1e-12)"};
}

Outcome symmetry_suite() {
  ree::SplitMix64 rng(kSeedSymmetry);
  double bc = 0.0;
  double ab = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const ree::XState s = ree::sample_interior_xstate(rng, 0.0);
    bc = std::max(bc, std::abs(ree::ree_closed_form(s) - ree::ree_closed_form(ree::XState::make(s.a(), s.c(), s.b()))));
    const ree::WParams w = ree::sample_wparams(rng);
    const ree::WParams swapped = ree::WParams::from_squares(w.beta_sq(), w.alpha_sq(), w.gamma_sq());
    ab = std::max(ab, std::abs(ree::delta(w).delta - ree::delta(swapped).delta));
  }
  return {bc <= 1e-12 && ab <= 1e-12, "b<->c max " + fmt(bc) + ", alpha<->beta max " + fmt(ab) + " (tol 1e-12)"};
}

Outcome probe_monotonicity() {
  ree::SplitMix64 rng(kSeedProbe);
  int failures = 0;
  for (int i = 0; i < 100; ++i) {
    const ree::XState s = ree::sample_interior_xstate(rng);
    const ree::ProbeReference ref{rng.uniform(0.05, 0.5), rng.uniform(0.0, 0.5), rng.uniform(0.0, 0.5)};
    const double theta = rng.uniform(0.0, 1.5);  // cos(theta) > 0
    std::vector<double> eps;
    for (int k = 0; k <= 20; ++k) eps.push_back(ref.u * ref.v * (k / 20.0));
    const auto values = ree::epsilon_monotonicity_probe(s, theta, ref, eps);
    for (std::size_t k = 1; k < values.size(); ++k) {
      if (values[k] < values[k - 1]) {
        ++failures;
        break;
      }
    }
  }
  return {failures == 0, std::to_string(failures) + "/100 probes decreasing"};
}

Outcome determinism() {
  const fs::path dir = scratch_dir();
  const fs::path first = dir / "det_a.csv";
  const fs::path second = dir / "det_b.csv";
  const int c1 = run_cli("sweep --resolution 50 --seed 7 --engine both --out " + first.string());
  const int c2 = run_cli("sweep --resolution 50 --seed 7 --engine both --out " + second.string());
  if (c1 != 0 || c2 != 0) return {false, "sweep exit codes " + std::to_string(c1) + ", " + std::to_string(c2)};
  const std::string a = slurp(first);
  const std::string b = slurp(second);
  return {!a.empty() && a == b, std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "different")};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "Vedral-Plenio identity", 1.0, vedral_plenio_identity},
      {2, "Bell-state limit", 10.0, bell_limit},
      {3, "closed form vs numerical oracles", 300.0, closed_form_cross_validation},
      {4, "closest separable state certificate", 60.0, css_boundary},
      {5, "monogamy over the simplex grid", 120.0, monogamy_sweep},
      {6, "CKW equality", 5.0, ckw_equality},
      {7, "symmetry suite", 5.0, symmetry_suite},
      {8, "epsilon-probe monotonicity", 5.0, probe_monotonicity},
      {9, "sweep determinism", 120.0, determinism},
  };

  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);

  bool all_passed = true;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = Clock::now();
    Outcome outcome = c.run();
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = seconds <= c.time_limit_s;
    const bool passed = outcome.passed && in_time;
    all_passed = all_passed && passed;
    std::printf("criterion %d %s: %s [%.2f s / limit %.0f s%s] %s\n", c.id, passed ? "PASS" : "FAIL", c.title.c_str(),
                seconds, c.time_limit_s, in_time ? "" : ", too slow", outcome.detail.c_str());
    std::fflush(stdout);
  }
  return all_passed ? 0 : 1;
}
