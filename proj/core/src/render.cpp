#include "parenbraid/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>

#include "parenbraid/errors.hpp"

namespace parenbraid {

namespace {

constexpr double kWidth = 800.0;
constexpr double kMargin = 40.0;
constexpr double kRowHeight = 40.0;
constexpr double kGap = 6.0;

double to_double(const Dyadic& d) { return std::ldexp(static_cast<double>(d.numerator()), -d.exponent()); }

double svg_x(const Dyadic& d) { return kMargin + (kWidth - 2 * kMargin) * to_double(d); }
double svg_y(std::size_t row) { return kMargin + kRowHeight * static_cast<double>(row); }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// Parameter in [0, 1] along the row where the two strands meet.
double meeting_point(const DiagramLayout& l, const Crossing& c) {
  const double a0 = to_double(l.x[c.row][c.over]);
  const double a1 = to_double(l.x[c.row + 1][c.over]);
  const double b0 = to_double(l.x[c.row][c.under]);
  const double b1 = to_double(l.x[c.row + 1][c.under]);
  const double denom = (a1 - a0) - (b1 - b0);
  return denom == 0.0 ? 0.5 : std::clamp((b0 - a0) / denom, 0.0, 1.0);
}

void line(std::string& out, double x1, double y1, double x2, double y2, const std::string& style) {
  out += "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" + num(y2) + "\" " +
         style + "/>\n";
}

}  // namespace

DiagramLayout layout_diagram(const Tree& t, const Word& w) {
  static_cast<void>(act_tree(t, w));  // reports the offending letter
  DiagramLayout out;
  out.word = w;
  out.trees.push_back(t);
  std::vector<Position> strands = tree_positions(t).positions;
  auto abscissae = [&] {
    std::vector<Dyadic> row;
    for (const Position& p : strands) row.push_back(position_to_dyadic(p));
    return row;
  };
  out.x.push_back(abscissae());
  for (std::size_t r = 0; r < w.size(); ++r) {
    const Letter x = w[r];
    if (x.is_sigma()) {
      const int over_block = x.inverse ? x.index + 1 : x.index;
      const int under_block = x.inverse ? x.index : x.index + 1;
      for (std::size_t o = 0; o < strands.size(); ++o) {
        if (strands[o].first() != over_block) continue;
        for (std::size_t u = 0; u < strands.size(); ++u) {
          if (strands[u].first() == under_block) out.crossings.push_back({r, o, u});
        }
      }
    }
    for (Position& p : strands) p = move_position(p, x);
    out.trees.push_back(act_tree(out.trees.back(), Word{x}));
    out.x.push_back(abscissae());
  }
  return out;
}

std::string render_svg(const DiagramLayout& l) {
  const std::size_t rows = l.word.size();
  const double height = kRowHeight * static_cast<double>(rows) + 2 * kMargin;
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" + num(height) +
                    "\" viewBox=\"0 0 " + num(kWidth) + " " + num(height) + "\">\n";
  out += "<rect x=\"0.500\" y=\"0.500\" width=\"" + num(kWidth - 1) + "\" height=\"" + num(height - 1) +
         "\" fill=\"white\" stroke=\"black\"/>\n";
  for (std::size_t r = 0; r < rows; ++r) {
    const double mid = svg_y(r) + kRowHeight / 2;
    if (l.word[r].is_a()) line(out, kMargin / 2, mid, kWidth - kMargin / 2, mid, "stroke=\"#bbbbbb\" stroke-dasharray=\"4 4\"");
    out += "<text x=\"4.000\" y=\"" + num(mid + 4) + "\" font-size=\"10\" fill=\"#888888\">" + letter_name(l.word[r]) +
           "</text>\n";
  }
  // Gaps in under-strands, as parameter intervals per (row, strand).
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<double, double>>> gaps;
  for (const Crossing& c : l.crossings) {
    const double x0 = svg_x(l.x[c.row][c.under]);
    const double x1 = svg_x(l.x[c.row + 1][c.under]);
    const double length = std::hypot(x1 - x0, kRowHeight);
    const double t = meeting_point(l, c);
    const double half = kGap / 2 / length;
    gaps[{c.row, c.under}].push_back({t - half, t + half});
  }
  const std::string strand_style = "stroke=\"black\" stroke-width=\"2\"";
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t k = 0; k < l.x[r].size(); ++k) {
      const double x0 = svg_x(l.x[r][k]);
      const double x1 = svg_x(l.x[r + 1][k]);
      const double y0 = svg_y(r);
      auto piece = [&](double from, double to) {
        if (to <= from) return;
        line(out, x0 + (x1 - x0) * from, y0 + kRowHeight * from, x0 + (x1 - x0) * to, y0 + kRowHeight * to,
             strand_style);
      };
      auto it = gaps.find({r, k});
      if (it == gaps.end()) {
        piece(0.0, 1.0);
        continue;
      }
      std::vector<std::pair<double, double>> g = it->second;
      std::sort(g.begin(), g.end());
      double at = 0.0;
      for (const auto& [from, to] : g) {
        piece(at, std::max(at, from));
        at = std::max(at, to);
      }
      piece(at, 1.0);
    }
  }
  out += "</svg>\n";
  return out;
}

std::string render_ascii(const DiagramLayout& l) {
  std::vector<Dyadic> values;
  for (const auto& row : l.x) values.insert(values.end(), row.begin(), row.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  auto column = [&](const Dyadic& d) {
    return 2 + 3 * static_cast<int>(std::lower_bound(values.begin(), values.end(), d) - values.begin());
  };
  const int inner = 3 * static_cast<int>(std::max<std::size_t>(values.size(), 1)) + 1;
  const std::string border = "+" + std::string(static_cast<std::size_t>(inner), '-') + "+\n";
  std::string out = border;
  auto emit = [&](const std::string& body, const std::string& label) {
    out += "|" + body + "|";
    if (!label.empty()) out += " " + label;
    out += "\n";
  };
  auto position_line = [&](std::size_t r) {
    std::string body(static_cast<std::size_t>(inner), ' ');
    for (const Dyadic& d : l.x[r]) body[static_cast<std::size_t>(column(d) - 1)] = '|';
    return body;
  };
  emit(position_line(0), "");
  for (std::size_t r = 0; r < l.word.size(); ++r) {
    std::vector<bool> over(l.x[r].size(), false);
    std::vector<bool> under(l.x[r].size(), false);
    for (const Crossing& c : l.crossings) {
      if (c.row != r) continue;
      over[c.over] = true;
      under[c.under] = true;
    }
    for (int step = 1; step <= 3; ++step) {
      std::string body(static_cast<std::size_t>(inner), ' ');
      if (l.word[r].is_a()) std::replace(body.begin(), body.end(), ' ', '.');
      // Under-strands first so that over-strands overwrite them at a crossing.
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t k = 0; k < l.x[r].size(); ++k) {
          if ((pass == 0) != (under[k] && !over[k])) continue;
          const int c0 = column(l.x[r][k]);
          const int c1 = column(l.x[r + 1][k]);
          const double at = c0 + (c1 - c0) * step / 4.0;
          const char glyph = c1 > c0 ? '\\' : (c1 < c0 ? '/' : '|');
          body[static_cast<std::size_t>(std::lround(at) - 1)] = glyph;
        }
      }
      emit(body, step == 2 ? letter_name(l.word[r]) : "");
    }
    emit(position_line(r + 1), "");
  }
  out += border;
  return out;
}

std::string render_diagram(const Tree& t, const Word& w, DiagramFormat format) {
  const DiagramLayout l = layout_diagram(t, w);
  return format == DiagramFormat::svg ? render_svg(l) : render_ascii(l);
}

void write_atomically(const std::filesystem::path& path, std::string_view bytes) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string());
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace parenbraid
