#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "ree/report.hpp"

namespace reemono {

// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 2,
  kIoFailure = 3,
  kMonogamyViolation = 4,
  kVerifyFailed = 5,
};

inline constexpr std::uint64_t kDefaultSeed = 12345;
inline constexpr double kRenormalizeTol = 1e-9;
inline constexpr double kMonogamyFloor = -1e-9;

struct ReeArgs {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  std::string engine = "closed";
  ree::LogBase log_base = ree::LogBase::E;
  std::uint64_t seed = kDefaultSeed;
};

struct DeltaArgs {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  std::string engine = "closed";
  ree::LogBase log_base = ree::LogBase::E;
};

struct SweepConfig {
  int resolution = 200;
  std::string engine = "closed";
  ree::LogBase log_base = ree::LogBase::E;
  std::optional<std::string> out_csv;
  std::optional<std::string> out_svg;
  std::uint64_t seed = kDefaultSeed;
};

struct VerifyArgs {
  int samples = 100;
  std::uint64_t seed = kDefaultSeed;
};

int cmd_ree(const ReeArgs& args, std::ostream& out, std::ostream& err);
int cmd_vp(double lambda, ree::LogBase base, std::ostream& out, std::ostream& err);
int cmd_delta(const DeltaArgs& args, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

/// %.17g
std::string fmt(double value);

}  // namespace reemono
