#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>

#include "ree/css_opt.hpp"
#include "ree/errors.hpp"
#include "ree/monogamy.hpp"
#include "ree/xfamily.hpp"

namespace reemono {

namespace {

void line(std::ostream& out, std::string_view key, double value) { out << key << ": " << fmt(value) << '\n'; }

// Accepts points within kRenormalizeTol of the simplex and projects them onto it.
std::optional<ree::XState> simplex_point(double a, double b, double c, std::ostream& err) {
  const double sum = a + b + c;
  const bool finite = std::isfinite(a) && std::isfinite(b) && std::isfinite(c);
  if (!finite || a < -kRenormalizeTol || b < -kRenormalizeTol || c < -kRenormalizeTol ||
      std::abs(sum - 1.0) > kRenormalizeTol) {
    err << "error: (" << fmt(a) << ", " << fmt(b) << ", " << fmt(c)
        << ") is not a probability vector within " << kRenormalizeTol << '\n';
    return std::nullopt;
  }
  a = std::max(a, 0.0);
  b = std::max(b, 0.0);
  c = std::max(c, 0.0);
  const double total = a + b + c;
  return ree::XState::make(a / total, b / total, c / total);
}

}  // namespace

std::string fmt(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

int cmd_ree(const ReeArgs& args, std::ostream& out, std::ostream& err) {
  const auto state = simplex_point(args.a, args.b, args.c, err);
  if (!state) return kInvalidInput;
  const ree::XState& s = *state;
  const auto conv = [&](double nats) { return ree::to_base(nats, args.log_base); };

  line(out, "a", s.a());
  line(out, "b", s.b());
  line(out, "c", s.c());
  out << "unit: " << ree::unit_name(args.log_base) << '\n';

  const bool closed = args.engine == "closed" || args.engine == "both";
  const bool numeric = args.engine == "numeric" || args.engine == "both";
  const double closed_value = conv(ree::ree_closed_form(s));
  if (closed) {
    line(out, "ree_closed", closed_value);
    if (s.is_interior()) {
      const ree::ClosedFormParts parts = ree::closed_form_parts(s);
      line(out, "delta_disc", parts.delta_disc);
      line(out, "m_param", parts.m_param);
      line(out, "n_param", parts.n_param);
    }
  }
  if (numeric) {
    std::optional<ree::GMinimum> minimum;
    if (s.is_interior()) minimum = ree::minimize_g(s);
    const double numeric_value = conv(minimum ? minimum->value : ree::ree_numeric_restricted(s));
    line(out, "ree_numeric", numeric_value);
    if (minimum) {
      line(out, "theta1", minimum->angles.theta1);
      line(out, "theta2", minimum->angles.theta2);
    }
    if (closed) line(out, "abs_diff", std::abs(closed_value - numeric_value));
  }
  if (args.engine == "general") {
    ree::GeneralOracleConfig cfg;
    cfg.seed = args.seed;
    const ree::GeneralOracleResult result = ree::ree_numeric_general(ree::to_density(s), cfg);
    line(out, "ree_general", conv(result.value));
    out << "general_converged: " << (result.converged ? "true" : "false") << '\n';
    if (!result.converged) err << "warning: product-mixture search had not settled after the last restart\n";
  }
  return kOk;
}

int cmd_vp(double lambda, ree::LogBase base, std::ostream& out, std::ostream& err) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    err << "error: lambda must lie in [0, 1], got " << fmt(lambda) << '\n';
    return kInvalidInput;
  }
  const double half = lambda / 2.0;
  const ree::XState s = ree::XState::make(1.0 - lambda, half, lambda - half);
  line(out, "lambda", lambda);
  out << "unit: " << ree::unit_name(base) << '\n';
  line(out, "ree_vedral_plenio", ree::to_base(ree::ree_vedral_plenio(lambda), base));
  line(out, "ree_closed", ree::to_base(ree::ree_closed_form(s), base));
  return kOk;
}

int cmd_delta(const DeltaArgs& args, std::ostream& out, std::ostream& err) {
  const double norm_sq = args.alpha * args.alpha + args.beta * args.beta + args.gamma * args.gamma;
  if (!std::isfinite(norm_sq) || std::abs(norm_sq - 1.0) > kRenormalizeTol) {
    err << "error: amplitudes have squared norm " << fmt(norm_sq) << ", expected 1 within " << kRenormalizeTol
        << '\n';
    return kInvalidInput;
  }
  const double scale = 1.0 / std::sqrt(norm_sq);
  const ree::WParams w = ree::WParams::make(args.alpha * scale, args.beta * scale, args.gamma * scale);
  const ree::Engine engine = args.engine == "numeric" ? ree::Engine::RestrictedNumeric : ree::Engine::ClosedForm;
  const ree::MonogamyRecord r = ree::delta(w, engine);
  const auto conv = [&](double nats) { return ree::to_base(nats, args.log_base); };

  line(out, "alpha_sq", r.alpha_sq);
  line(out, "beta_sq", r.beta_sq);
  line(out, "gamma_sq", r.gamma_sq);
  out << "unit: " << ree::unit_name(args.log_base) << '\n';
  line(out, "e_ab", conv(r.e_ab));
  line(out, "e_ac", conv(r.e_ac));
  line(out, "e_abc", conv(r.e_abc));
  line(out, "delta", conv(r.e_abc) - conv(r.e_ab) - conv(r.e_ac));
  return kOk;
}

int cmd_sweep(const SweepConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.resolution < 2) {
    err << "error: --resolution must be at least 2\n";
    return kInvalidInput;
  }
  const bool numeric_only = cfg.engine == "numeric";
  const auto records = ree::sweep(cfg.resolution, numeric_only ? ree::Engine::RestrictedNumeric : ree::Engine::ClosedForm);
  std::vector<ree::MonogamyRecord> paired;
  if (cfg.engine == "both") paired = ree::sweep(cfg.resolution, ree::Engine::RestrictedNumeric);

  const ree::CsvMetadata meta{cfg.engine, cfg.resolution, cfg.seed, cfg.log_base};
  const std::string csv = ree::format_csv(records, meta, paired);

  double min_delta = ree::kInfinite;
  for (const auto& r : records) min_delta = std::min(min_delta, r.delta);
  for (const auto& r : paired) min_delta = std::min(min_delta, r.delta);

  try {
    if (cfg.out_csv) {
      ree::write_file_atomic(*cfg.out_csv, csv);
      out << "rows: " << records.size() << '\n';
      line(out, "min_delta", ree::to_base(min_delta, cfg.log_base));
    } else {
      out << csv;
    }
    if (cfg.out_svg) {
      const ree::SvgOptions options{cfg.resolution, cfg.log_base};
      ree::write_file_atomic(*cfg.out_svg, ree::render_svg(records, options));
    }
  } catch (const ree::IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoFailure;
  }

  if (min_delta < kMonogamyFloor) {
    err << "monogamy violated: min delta = " << fmt(min_delta) << " nats\n";
    return kMonogamyViolation;
  }
  return kOk;
}

}  // namespace reemono
