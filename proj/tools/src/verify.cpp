#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <vector>

#include "commands.hpp"
#include "ree/css_opt.hpp"
#include "ree/monogamy.hpp"
#include "ree/sampling.hpp"

namespace reemono {

namespace {

struct SuiteResult {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = true;
};

// |x| with the infinite sentinel kept infinite.
double err_of(double diff) { return std::isnan(diff) ? ree::kInfinite : std::abs(diff); }

SuiteResult restricted_oracle(int samples, ree::SplitMix64 rng) {
  SuiteResult r{"restricted_oracle", 0.0, 1e-8};
  for (int i = 0; i < samples; ++i) {
    const ree::XState s = ree::sample_interior_xstate(rng);
    r.max_error = std::max(r.max_error, err_of(ree::ree_numeric_restricted(s) - ree::ree_closed_form(s)));
  }
  r.passed = r.max_error <= r.tolerance;
  return r;
}

// One-sided: the product-mixture value may exceed the closed form by up to
// 1e-4 and undershoot it by at most 1e-6. Reported error is the larger
// excursion in either direction.
SuiteResult general_oracle(int samples, ree::SplitMix64 rng, std::uint64_t seed) {
  SuiteResult r{"general_oracle", 0.0, 1e-4};
  double worst_above = 0.0;
  double worst_below = 0.0;
  ree::GeneralOracleConfig cfg;
  cfg.seed = seed;
  for (int i = 0; i < samples; ++i) {
    const ree::XState s = ree::sample_interior_xstate(rng);
    const double diff = ree::ree_numeric_general(ree::to_density(s), cfg).value - ree::ree_closed_form(s);
    worst_above = std::max(worst_above, diff);
    worst_below = std::max(worst_below, -diff);
  }
  r.max_error = std::max(worst_above, worst_below);
  r.passed = worst_above <= 1e-4 && worst_below <= 1e-6;
  return r;
}

SuiteResult css_boundary(int samples, ree::SplitMix64 rng) {
  SuiteResult r{"css_boundary", 0.0, 1e-8};
  bool ppt_ok = true;
  for (int i = 0; i < samples; ++i) {
    const ree::XState s = ree::sample_interior_xstate(rng);
    const ree::CssReport report =
        ree::verify_css(ree::to_density(s), ree::css_from_angles(ree::minimize_g(s).angles));
    ppt_ok = ppt_ok && report.ppt_min_eigenvalue >= -1e-9 && report.ppt_min_eigenvalue <= 1e-7;
    r.max_error = std::max(r.max_error, err_of(report.relative_entropy_value - ree::ree_closed_form(s)));
  }
  r.passed = ppt_ok && r.max_error <= r.tolerance;
  return r;
}

SuiteResult symmetry(int samples, ree::SplitMix64 rng) {
  SuiteResult r{"symmetry", 0.0, 1e-12};
  for (int i = 0; i < samples; ++i) {
    const ree::XState s = ree::sample_interior_xstate(rng, 0.0);
    r.max_error = std::max(r.max_error,
                           err_of(ree::ree_closed_form(s) - ree::ree_closed_form(ree::XState::make(s.a(), s.c(), s.b()))));
    const ree::WParams w = ree::sample_wparams(rng);
    const ree::WParams swapped = ree::WParams::from_squares(w.beta_sq(), w.alpha_sq(), w.gamma_sq());
    r.max_error = std::max(r.max_error, err_of(ree::delta(w).delta - ree::delta(swapped).delta));
  }
  r.passed = r.max_error <= r.tolerance;
  return r;
}

SuiteResult ckw(int samples, ree::SplitMix64 rng) {
  SuiteResult r{"ckw", 0.0, 1e-12};
  for (int i = 0; i < samples; ++i) {
    r.max_error = std::max(r.max_error, err_of(ree::concurrence_ckw_check(ree::sample_wparams(rng)).slack));
  }
  r.passed = r.max_error <= r.tolerance;
  return r;
}

// Error is the largest negative delta seen (0 when all are non-negative).
SuiteResult monogamy(int samples, ree::SplitMix64 rng) {
  SuiteResult r{"monogamy", 0.0, -kMonogamyFloor};
  for (int i = 0; i < samples; ++i) {
    r.max_error = std::max(r.max_error, -ree::delta(ree::sample_wparams(rng)).delta);
  }
  r.passed = r.max_error <= r.tolerance;
  return r;
}

// Error is the largest decrease between consecutive probe values.
SuiteResult epsilon_probe(int samples, ree::SplitMix64 rng) {
  SuiteResult r{"epsilon_probe", 0.0, 0.0};
  for (int i = 0; i < samples; ++i) {
    const ree::XState s = ree::sample_interior_xstate(rng);
    const ree::ProbeReference ref{rng.uniform(0.05, 0.5), rng.uniform(0.0, 0.5), rng.uniform(0.0, 0.5)};
    const double theta = rng.uniform(0.0, 1.5);
    std::vector<double> eps;
    for (int k = 0; k <= 10; ++k) eps.push_back(ref.u * ref.v * (k / 10.0));
    const auto values = ree::epsilon_monotonicity_probe(s, theta, ref, eps);
    for (std::size_t k = 1; k < values.size(); ++k) r.max_error = std::max(r.max_error, values[k - 1] - values[k]);
  }
  r.passed = r.max_error <= r.tolerance;
  return r;
}

}  // namespace

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  if (args.samples < 1) {
    err << "error: --samples must be at least 1\n";
    return kInvalidInput;
  }
  const int n = args.samples;
  const auto stream = [&](std::uint64_t index) { return ree::SplitMix64(ree::SplitMix64::derive(args.seed, index)); };

  const std::vector<std::function<SuiteResult()>> suites{
      [&] { return restricted_oracle(n, stream(0)); },
      [&] { return general_oracle(n, stream(1), args.seed); },
      [&] { return css_boundary(n, stream(2)); },
      [&] { return symmetry(n, stream(3)); },
      [&] { return ckw(n, stream(4)); },
      [&] { return monogamy(n, stream(5)); },
      [&] { return epsilon_probe(n, stream(6)); },
  };

  out << "samples: " << n << '\n';
  out << "seed: " << args.seed << '\n';
  std::string failed;
  for (const auto& run : suites) {
    const SuiteResult r = run();
    char row[160];
    std::snprintf(row, sizeof row, "%-18s max_error=%-12.4g tolerance=%-8.1g %s\n", r.name.c_str(), r.max_error,
                  r.tolerance, r.passed ? "PASS" : "FAIL");
    out << row << std::flush;
    if (!r.passed) failed += (failed.empty() ? "" : ", ") + r.name;
  }
  if (!failed.empty()) {
    err << "failed suites: " << failed << '\n';
    return kVerifyFailed;
  }
  return kOk;
}

}  // namespace reemono
