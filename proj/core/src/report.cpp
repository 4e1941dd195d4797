#include "ree/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "ree/errors.hpp"

namespace ree {

namespace {

std::string fmt17(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string fmt_short(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", value);
  return buf;
}

struct Rgb {
  double r, g, b;
};

// Perceptually ordered dark-to-bright ramp (viridis anchors).
constexpr std::array<Rgb, 5> kRamp{{{68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}}};

std::string colour(double t) {
  t = std::clamp(std::isfinite(t) ? t : 0.0, 0.0, 1.0);
  const double pos = t * (kRamp.size() - 1);
  const std::size_t lo = std::min<std::size_t>(static_cast<std::size_t>(pos), kRamp.size() - 2);
  const double f = pos - lo;
  const auto mix = [&](double a, double b) { return static_cast<int>(std::lround(a + (b - a) * f)); };
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", mix(kRamp[lo].r, kRamp[lo + 1].r),
                mix(kRamp[lo].g, kRamp[lo + 1].g), mix(kRamp[lo].b, kRamp[lo + 1].b));
  return buf;
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.emplace_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_double(std::string_view token) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw InvalidState("malformed CSV number '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

double to_base(double nats, LogBase base) noexcept {
  return base == LogBase::E ? nats : nats / std::numbers::ln2;
}

std::string_view log_base_name(LogBase base) noexcept { return base == LogBase::E ? "e" : "2"; }

std::string_view unit_name(LogBase base) noexcept { return base == LogBase::E ? "nats" : "bits"; }

std::string format_csv(std::span<const MonogamyRecord> records, const CsvMetadata& meta,
                       std::span<const MonogamyRecord> numeric) {
  const bool paired = !numeric.empty();
  if (paired && numeric.size() != records.size()) {
    throw DimensionMismatch("closed-form and numeric sweeps have different lengths");
  }
  std::ostringstream out;
  out << kCsvHeader;
  if (paired) out << ",e_ab_numeric,e_ac_numeric,delta_numeric";
  out << '\n';

  double max_diff = 0.0;
  double min_delta = kInfinite;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const MonogamyRecord& r = records[i];
    const double e_ab = to_base(r.e_ab, meta.log_base);
    const double e_ac = to_base(r.e_ac, meta.log_base);
    const double e_abc = to_base(r.e_abc, meta.log_base);
    const double d = e_abc - e_ab - e_ac;
    min_delta = std::min(min_delta, d);
    out << fmt17(r.alpha_sq) << ',' << fmt17(r.beta_sq) << ',' << fmt17(r.gamma_sq) << ',' << fmt17(e_ab) << ','
        << fmt17(e_ac) << ',' << fmt17(e_abc) << ',' << fmt17(d);
    if (paired) {
      const double n_ab = to_base(numeric[i].e_ab, meta.log_base);
      const double n_ac = to_base(numeric[i].e_ac, meta.log_base);
      const double nd = e_abc - n_ab - n_ac;
      max_diff = std::max(max_diff, std::abs(nd - d));
      min_delta = std::min(min_delta, nd);
      out << ',' << fmt17(n_ab) << ',' << fmt17(n_ac) << ',' << fmt17(nd);
    }
    out << '\n';
  }

  out << "# engine=" << meta.engine << '\n';
  out << "# resolution=" << meta.resolution << '\n';
  out << "# seed=" << meta.seed << '\n';
  out << "# log_base=" << log_base_name(meta.log_base) << '\n';
  out << "# rows=" << records.size() << '\n';
  if (!records.empty()) out << "# min_delta=" << fmt17(min_delta) << '\n';
  if (paired) out << "# max_abs_delta_diff=" << fmt17(max_diff) << '\n';
  return out.str();
}

std::size_t CsvTable::column(std::string_view name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw OutOfRange("no CSV column named '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - header.begin());
}

std::optional<std::string> CsvTable::comment_value(std::string_view key) const {
  for (const std::string& c : comments) {
    const std::size_t eq = c.find('=');
    if (eq != std::string::npos && std::string_view(c).substr(0, eq) == key) return c.substr(eq + 1);
  }
  return std::nullopt;
}

CsvTable parse_csv(std::string_view text) {
  CsvTable table;
  std::size_t start = 0;
  bool have_header = false;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::string_view body = line.substr(1);
      if (!body.empty() && body.front() == ' ') body.remove_prefix(1);
      table.comments.emplace_back(body);
      continue;
    }
    if (!have_header) {
      table.header = split(line, ',');
      have_header = true;
      continue;
    }
    const auto tokens = split(line, ',');
    if (tokens.size() != table.header.size()) throw InvalidState("CSV row width does not match the header");
    std::vector<double> row;
    row.reserve(tokens.size());
    for (const auto& t : tokens) row.push_back(parse_double(t));
    table.rows.push_back(std::move(row));
  }
  if (!have_header) throw InvalidState("CSV has no header line");
  return table;
}

std::string render_svg(std::span<const MonogamyRecord> records, const SvgOptions& options) {
  const int n = options.resolution;
  if (n < 1 || records.size() != sweep_size(n)) {
    throw InvalidState("record count does not match the triangular grid resolution");
  }
  // Row-major (i, j) with i + j <= n.
  const auto index = [n](int i, int j) {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n + 1) -
           static_cast<std::size_t>(i) * static_cast<std::size_t>(i - 1) / 2 + static_cast<std::size_t>(j);
  };
  const auto value = [&](int i, int j) { return to_base(records[index(i, j)].delta, options.log_base); };

  double max_delta = 0.0;
  for (const auto& r : records) max_delta = std::max(max_delta, to_base(r.delta, options.log_base));
  const double scale = max_delta > 0.0 ? max_delta : 1.0;

  // Triangle: alpha^2 = 1 bottom-left, beta^2 = 1 bottom-right, gamma^2 = 1 top.
  constexpr double kLeft = 60.0;
  constexpr double kBase = 620.0;
  constexpr double kSide = 560.0;
  const double height = kSide * std::sqrt(3.0) / 2.0;
  const auto px = [&](double beta_sq, double gamma_sq) { return kLeft + (beta_sq + 0.5 * gamma_sq) * kSide; };
  const auto py = [&](double gamma_sq) { return kBase - gamma_sq * height; };
  const auto point = [&](int i, int j) {
    const double b = static_cast<double>(i) / n;
    const double g = static_cast<double>(j) / n;
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2f,%.2f", px(b, g), py(g));
    return std::string(buf);
  };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSvgWidth << "\" height=\"" << kSvgHeight
      << "\" viewBox=\"0 0 " << kSvgWidth << ' ' << kSvgHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"400\" y=\"32\" font-family=\"sans-serif\" font-size=\"20\" text-anchor=\"middle\">"
      << options.title << "</text>\n";
  out << "<g id=\"cells\" stroke-width=\"0.3\">\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; i + j < n; ++j) {
      const double up = (value(i, j) + value(i + 1, j) + value(i, j + 1)) / 3.0;
      const std::string fill = colour(up / scale);
      out << "<polygon points=\"" << point(i, j) << ' ' << point(i + 1, j) << ' ' << point(i, j + 1)
          << "\" fill=\"" << fill << "\" stroke=\"" << fill << "\"/>\n";
      if (i + j + 2 <= n) {
        const double down = (value(i + 1, j) + value(i, j + 1) + value(i + 1, j + 1)) / 3.0;
        const std::string fill_down = colour(down / scale);
        out << "<polygon points=\"" << point(i + 1, j) << ' ' << point(i + 1, j + 1) << ' ' << point(i, j + 1)
            << "\" fill=\"" << fill_down << "\" stroke=\"" << fill_down << "\"/>\n";
      }
    }
  }
  out << "</g>\n";
  out << "<polygon points=\"" << point(0, 0) << ' ' << point(n, 0) << ' ' << point(0, n)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  out << "<g font-family=\"sans-serif\" font-size=\"15\">\n";
  out << "<text x=\"" << px(0, 0) - 10 << "\" y=\"" << kBase + 24 << "\" text-anchor=\"middle\">&#945;&#178;=1</text>\n";
  out << "<text x=\"" << px(1, 0) + 10 << "\" y=\"" << kBase + 24 << "\" text-anchor=\"middle\">&#946;&#178;=1</text>\n";
  out << "<text x=\"" << px(0, 1) << "\" y=\"" << py(1) - 10 << "\" text-anchor=\"middle\">&#947;&#178;=1</text>\n";
  out << "</g>\n";

  // Legend: vertical ramp with five ticks from 0 to the grid maximum.
  constexpr double kBarX = 690.0;
  constexpr double kBarTop = 120.0;
  constexpr double kBarHeight = 400.0;
  constexpr int kBarSteps = 64;
  out << "<g id=\"legend\">\n";
  for (int s = 0; s < kBarSteps; ++s) {
    const double t = 1.0 - (s + 0.5) / kBarSteps;
    out << "<rect x=\"" << kBarX << "\" y=\"" << kBarTop + s * kBarHeight / kBarSteps << "\" width=\"24\" height=\""
        << kBarHeight / kBarSteps + 0.5 << "\" fill=\"" << colour(t) << "\"/>\n";
  }
  out << "<rect x=\"" << kBarX << "\" y=\"" << kBarTop << "\" width=\"24\" height=\"" << kBarHeight
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int tick = 0; tick < 5; ++tick) {
    const double frac = tick / 4.0;
    const double y = kBarTop + kBarHeight * (1.0 - frac);
    out << "<line class=\"tick\" x1=\"" << kBarX + 24 << "\" y1=\"" << y << "\" x2=\"" << kBarX + 30 << "\" y2=\""
        << y << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << kBarX + 34 << "\" y=\"" << y + 4
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << fmt_short(frac * max_delta) << "</text>\n";
  }
  out << "<text x=\"" << kBarX + 12 << "\" y=\"" << kBarTop - 14
      << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">&#948; (" << unit_name(options.log_base)
      << ")</text>\n";
  out << "</g>\n";
  out << "</svg>\n";
  return out.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + tmp.string() + "' for writing");
    file.write(content.data(), static_cast<std::streamsize>(content.size()));
    file.flush();
    if (!file) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw IoError("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw IoError("cannot move output into '" + path.string() + "': " + ec.message());
  }
}

}  // namespace ree
