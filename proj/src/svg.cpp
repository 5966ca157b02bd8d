#include "signorini/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "signorini/csv.hpp"
#include "signorini/error.hpp"

namespace signorini::svg {

namespace {

// Diverging palette: (59,76,192) at -1, white at 0, (180,4,38) at +1.
std::string color(double t) {
  t = std::clamp(t, -1.0, 1.0);
  const double lo[3] = {59, 76, 192};
  const double hi[3] = {180, 4, 38};
  const double* end = t < 0 ? lo : hi;
  const double s = std::abs(t);
  char buf[8];
  int c[3];
  for (int i = 0; i < 3; ++i) c[i] = static_cast<int>(std::lround(255.0 + s * (end[i] - 255.0)));
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c[0], c[1], c[2]);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string heatmap(const ScalarField& u, const std::string& title) {
  const Grid& g = *u.grid;
  const int n = g.n();
  const double cell = std::max(1.0, 512.0 / n);
  const double size = cell * n;
  double amp = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (u.valid(k)) amp = std::max(amp, std::abs(u[k]));
  }
  if (amp == 0.0) amp = 1.0;

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(size + 80) << "\" height=\"" << num(size + 40)
    << "\">\n";
  s << "<text x=\"4\" y=\"16\" font-family=\"sans-serif\" font-size=\"13\">" << escape(title) << "</text>\n";
  s << "<g transform=\"translate(4,28)\" shape-rendering=\"crispEdges\">\n";
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const std::size_t k = g.index(i, j);
      if (!u.valid(k)) continue;
      // x2 grows upwards on screen
      s << "<rect x=\"" << num(i * cell) << "\" y=\"" << num((n - 1 - j) * cell) << "\" width=\"" << num(cell)
        << "\" height=\"" << num(cell) << "\" fill=\"" << color(u[k] / amp) << "\"/>\n";
    }
  }
  s << "</g>\n";
  for (int t = 0; t <= 10; ++t) {
    const double v = 1.0 - 0.2 * t;
    s << "<rect x=\"" << num(size + 12) << "\" y=\"" << num(28 + t * size / 11) << "\" width=\"14\" height=\""
      << num(size / 11) << "\" fill=\"" << color(v) << "\"/>\n";
  }
  s << "<text x=\"" << num(size + 30) << "\" y=\"40\" font-family=\"sans-serif\" font-size=\"10\">"
    << format_real(amp) << "</text>\n";
  s << "<text x=\"" << num(size + 30) << "\" y=\"" << num(28 + size) << "\" font-family=\"sans-serif\" "
    << "font-size=\"10\">-" << format_real(amp) << "</text>\n";
  s << "</svg>\n";
  return s.str();
}

std::string curves(const std::string& title, const std::string& xlabel, const std::vector<Series>& series,
                   bool log_x, bool log_y) {
  const double W = 560, H = 360, L = 60, T = 30, PW = 470, PH = 280;
  auto tx = [&](double v) { return log_x ? std::log10(v) : v; };
  auto ty = [&](double v) { return log_y ? std::log10(v) : v; };
  auto ok = [&](double x, double y) {
    return std::isfinite(x) && std::isfinite(y) && (!log_x || x > 0) && (!log_y || y > 0);
  };
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& sr : series) {
    for (std::size_t i = 0; i < sr.x.size(); ++i) {
      if (!ok(sr.x[i], sr.y[i])) continue;
      x0 = std::min(x0, tx(sr.x[i]));
      x1 = std::max(x1, tx(sr.x[i]));
      y0 = std::min(y0, ty(sr.y[i]));
      y1 = std::max(y1, ty(sr.y[i]));
    }
  }
  if (!(x1 > x0)) { x0 -= 0.5; x1 += 0.5; }
  if (!(y1 > y0)) { y0 -= 0.5; y1 += 0.5; }
  const double pad = 0.05 * (y1 - y0);
  y0 -= pad;
  y1 += pad;
  auto px = [&](double v) { return L + (tx(v) - x0) / (x1 - x0) * PW; };
  auto py = [&](double v) { return T + PH - (ty(v) - y0) / (y1 - y0) * PH; };

  static const char* palette[] = {"#1f5fa8", "#c0392b", "#2e8b57", "#8e44ad", "#d35400", "#555555"};
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
  s << "<text x=\"" << L << "\" y=\"18\" font-family=\"sans-serif\" font-size=\"13\">" << escape(title)
    << "</text>\n";
  s << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << PW << "\" height=\"" << PH
    << "\" fill=\"none\" stroke=\"#000\"/>\n";
  auto label = [&](double v, bool log) { return format_real(log ? std::pow(10.0, v) : v); };
  s << "<g font-family=\"sans-serif\" font-size=\"10\">\n";
  s << "<text x=\"" << L << "\" y=\"" << T + PH + 14 << "\">" << label(x0, log_x) << "</text>\n";
  s << "<text x=\"" << L + PW << "\" y=\"" << T + PH + 14 << "\" text-anchor=\"end\">" << label(x1, log_x)
    << "</text>\n";
  s << "<text x=\"" << L + PW / 2 << "\" y=\"" << T + PH + 26 << "\" text-anchor=\"middle\">" << escape(xlabel)
    << "</text>\n";
  s << "<text x=\"" << L - 4 << "\" y=\"" << T + PH << "\" text-anchor=\"end\">" << label(y0, log_y)
    << "</text>\n";
  s << "<text x=\"" << L - 4 << "\" y=\"" << T + 8 << "\" text-anchor=\"end\">" << label(y1, log_y) << "</text>\n";
  s << "</g>\n";
  for (std::size_t c = 0; c < series.size(); ++c) {
    const auto& sr = series[c];
    const char* col = palette[c % 6];
    std::string path;
    bool pen = false;
    for (std::size_t i = 0; i < sr.x.size(); ++i) {
      if (!ok(sr.x[i], sr.y[i])) {
        pen = false;
        continue;
      }
      path += (pen ? " L" : " M") + num(px(sr.x[i])) + "," + num(py(sr.y[i]));
      pen = true;
    }
    s << "<path d=\"" << path << "\" fill=\"none\" stroke=\"" << col << "\" stroke-width=\"1.5\"/>\n";
    s << "<text x=\"" << L + 8 << "\" y=\"" << T + 14 + 13 * c << "\" font-family=\"sans-serif\" font-size=\"11\" "
      << "fill=\"" << col << "\">" << escape(sr.label) << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

void write(const std::filesystem::path& path, const std::string& document) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + path.string());
  f << document;
}

}  // namespace signorini::svg
