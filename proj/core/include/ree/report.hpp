#pragma once

// Machine-readable output for monogamy sweeps: CSV tables and a
// self-rendered SVG heatmap of delta over the (beta^2, gamma^2) triangle.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ree/monogamy.hpp"

namespace ree {

enum class LogBase { E, Two };

/// Converts a value in nats to the requested base.
double to_base(double nats, LogBase base) noexcept;
std::string_view log_base_name(LogBase base) noexcept;
std::string_view unit_name(LogBase base) noexcept;

struct CsvMetadata {
  std::string engine;
  int resolution = 0;
  std::uint64_t seed = 0;
  LogBase log_base = LogBase::E;
};

inline constexpr std::string_view kCsvHeader = "alpha_sq,beta_sq,gamma_sq,e_ab,e_ac,e_abc,delta";

/// %.17g decimal floats, LF endings, trailing '#' metadata lines. With
/// `numeric` non-empty (same grid), adds e_ab_numeric, e_ac_numeric and
/// delta_numeric columns plus a max_abs_delta_diff comment line. The delta
/// columns are recomputed from the printed (converted) entropy columns.
std::string format_csv(std::span<const MonogamyRecord> records, const CsvMetadata& meta,
                       std::span<const MonogamyRecord> numeric = {});

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> comments;  // without the leading "# "

  /// Column index by name; throws OutOfRange if absent.
  std::size_t column(std::string_view name) const;
  /// Value of a "key=value" comment line, if present.
  std::optional<std::string> comment_value(std::string_view key) const;
};

/// Parses the format written by format_csv. Throws InvalidState on malformed input.
CsvTable parse_csv(std::string_view text);

struct SvgOptions {
  int resolution = 0;
  LogBase log_base = LogBase::E;
  std::string title = "Monogamy gap of generalized W states";
};

inline constexpr int kSvgWidth = 800;
inline constexpr int kSvgHeight = 700;

/// Triangular heatmap, one cell per grid triangle coloured by the mean
/// delta of its corners. Colour runs linearly from delta = 0 (dark) to the
/// grid maximum (bright), with a 5-tick legend. Throws InvalidState if the
/// record count does not match the resolution.
std::string render_svg(std::span<const MonogamyRecord> records, const SvgOptions& options);

/// Writes through a temporary sibling file and renames it into place.
/// Throws IoError.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace ree
