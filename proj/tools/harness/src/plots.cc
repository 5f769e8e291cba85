// Copyright 2026 The mtpls Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     https://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mtpls/harness/plots.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mtpls/harness/results_csv.h"

namespace mtpls::harness {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c",
                                    "#d62728", "#9467bd", "#8c564b",
                                    "#e377c2", "#7f7f7f", "#bcbd22",
                                    "#17becf"};

std::string Escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string Num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", x);
  return buf;
}

std::string Tick(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", x);
  return buf;
}

std::string TauTag(double tau) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.0e", tau);
  return buf;
}

struct Series {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

struct Axis {
  bool log = false;
  double lo = 0.0, hi = 1.0;

  double Map(double v) const { return log ? std::log10(v) : v; }
  double Frac(double v) const {
    const double a = Map(lo), b = Map(hi);
    return b == a ? 0.5 : (Map(v) - a) / (b - a);
  }
  std::vector<double> Ticks() const {
    std::vector<double> t;
    if (log) {
      for (int e = static_cast<int>(std::floor(std::log10(lo)));
           e <= static_cast<int>(std::ceil(std::log10(hi))); ++e) {
        const double v = std::pow(10.0, e);
        if (v >= lo * (1 - 1e-9) && v <= hi * (1 + 1e-9)) t.push_back(v);
      }
      if (t.empty()) t = {lo, hi};
    } else {
      const int n = 5;
      for (int i = 0; i <= n; ++i) t.push_back(lo + (hi - lo) * i / n);
    }
    return t;
  }
};

Axis FitAxis(const std::vector<double>& values, bool log, bool from_zero) {
  Axis a;
  a.log = log;
  double lo = INFINITY, hi = -INFINITY;
  for (double v : values) {
    if (!std::isfinite(v) || (log && v <= 0.0)) continue;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (!std::isfinite(lo)) {
    lo = log ? 1.0 : 0.0;
    hi = log ? 10.0 : 1.0;
  }
  if (from_zero && !log) lo = std::min(lo, 0.0);
  if (lo == hi) {
    if (log) {
      lo /= 2.0;
      hi *= 2.0;
    } else {
      lo -= 0.5;
      hi += 0.5;
    }
  }
  a.lo = lo;
  a.hi = hi;
  return a;
}

constexpr double kWidth = 720, kHeight = 480;
constexpr double kLeft = 80, kRight = 170, kTop = 50, kBottom = 60;

std::string LinePlot(const std::string& title, const std::string& xlabel,
                     const std::string& ylabel, const std::vector<Series>& s,
                     bool log_x, bool log_y) {
  std::vector<double> xs, ys;
  for (const Series& ser : s) {
    for (const auto& [x, y] : ser.points) {
      xs.push_back(x);
      ys.push_back(y);
    }
  }
  const Axis ax = FitAxis(xs, log_x, false);
  const Axis ay = FitAxis(ys, log_y, true);
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + ax.Frac(x) * pw; };
  auto py = [&](double y) { return kTop + (1.0 - ay.Frac(y)) * ph; };

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
    << "\" height=\"" << kHeight << "\" font-family=\"sans-serif\" "
    << "font-size=\"12\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "<text x=\"" << Num(kWidth / 2) << "\" y=\"24\" text-anchor=\"middle\" "
    << "font-size=\"15\">" << Escape(title) << "</text>\n"
    << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw
    << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (double t : ax.Ticks()) {
    o << "<line x1=\"" << Num(px(t)) << "\" y1=\"" << kTop << "\" x2=\""
      << Num(px(t)) << "\" y2=\"" << kTop + ph
      << "\" stroke=\"#ddd\"/>\n<text x=\"" << Num(px(t)) << "\" y=\""
      << kTop + ph + 18 << "\" text-anchor=\"middle\">" << Tick(t)
      << "</text>\n";
  }
  for (double t : ay.Ticks()) {
    o << "<line x1=\"" << kLeft << "\" y1=\"" << Num(py(t)) << "\" x2=\""
      << kLeft + pw << "\" y2=\"" << Num(py(t))
      << "\" stroke=\"#ddd\"/>\n<text x=\"" << kLeft - 6 << "\" y=\""
      << Num(py(t) + 4) << "\" text-anchor=\"end\">" << Tick(t)
      << "</text>\n";
  }
  o << "<text x=\"" << Num(kLeft + pw / 2) << "\" y=\"" << kHeight - 14
    << "\" text-anchor=\"middle\">" << Escape(xlabel) << "</text>\n"
    << "<text transform=\"translate(18," << Num(kTop + ph / 2)
    << ") rotate(-90)\" text-anchor=\"middle\">" << Escape(ylabel)
    << "</text>\n";
  for (size_t i = 0; i < s.size(); ++i) {
    const char* color = kPalette[i % std::size(kPalette)];
    std::string pts;
    for (const auto& [x, y] : s[i].points) {
      if ((log_x && x <= 0.0) || (log_y && y <= 0.0) || !std::isfinite(y)) {
        continue;
      }
      pts += Num(px(x)) + "," + Num(py(y)) + " ";
      o << "<circle cx=\"" << Num(px(x)) << "\" cy=\"" << Num(py(y))
        << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
    }
    if (!pts.empty()) pts.pop_back();
    o << "<polyline fill=\"none\" stroke=\"" << color
      << "\" stroke-width=\"1.5\" points=\"" << pts << "\"/>\n";
    const double ly = kTop + 14 + 18 * static_cast<double>(i);
    o << "<line x1=\"" << kWidth - kRight + 14 << "\" y1=\"" << Num(ly)
      << "\" x2=\"" << kWidth - kRight + 36 << "\" y2=\"" << Num(ly)
      << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n<text x=\""
      << kWidth - kRight + 42 << "\" y=\"" << Num(ly + 4) << "\">"
      << Escape(s[i].name) << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

std::string Heatmap(const std::string& title,
                    const std::vector<std::string>& labels,
                    const std::vector<std::vector<double>>& cells) {
  const double cell = 56, left = 90, top = 70;
  const double n = static_cast<double>(labels.size());
  const double width = left + cell * n + 20, height = top + cell * n + 20;
  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << Num(width)
    << "\" height=\"" << Num(height)
    << "\" font-family=\"sans-serif\" font-size=\"11\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "<text x=\"" << Num(width / 2) << "\" y=\"22\" text-anchor=\"middle\" "
    << "font-size=\"14\">" << Escape(title) << "</text>\n";
  for (size_t j = 0; j < labels.size(); ++j) {
    o << "<text x=\"" << Num(left + cell * (j + 0.5)) << "\" y=\""
      << Num(top - 8) << "\" text-anchor=\"middle\">" << Escape(labels[j])
      << "</text>\n";
  }
  for (size_t i = 0; i < labels.size(); ++i) {
    o << "<text x=\"" << Num(left - 8) << "\" y=\""
      << Num(top + cell * (i + 0.5) + 4) << "\" text-anchor=\"end\">"
      << Escape(labels[i]) << "</text>\n";
    for (size_t j = 0; j < labels.size(); ++j) {
      const double v = cells[i][j];
      const int shade = static_cast<int>(255 - 2.0 * std::clamp(v, 0.0, 100.0));
      char fill[16];
      std::snprintf(fill, sizeof(fill), "#%02x%02xff", shade, shade);
      o << "<rect x=\"" << Num(left + cell * j) << "\" y=\""
        << Num(top + cell * i) << "\" width=\"" << cell << "\" height=\""
        << cell << "\" fill=\"" << fill << "\" stroke=\"white\"/>\n"
        << "<text x=\"" << Num(left + cell * (j + 0.5)) << "\" y=\""
        << Num(top + cell * (i + 0.5) + 4) << "\" text-anchor=\"middle\">"
        << Num(v) << "</text>\n";
    }
  }
  o << "</svg>\n";
  return o.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  f << body;
  if (!f) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace

std::vector<std::filesystem::path> EmitPlots(const Aggregates& a,
                                             const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  for (double tau : a.taus) {
    const std::string tag = TauTag(tau);
    std::vector<Series> rates;
    for (const std::string& v : a.variants) {
      Series s{v, {}};
      for (double eps : a.epsilons) {
        if (const FailureRate* r = a.FindRate(tau, eps, v)) {
          s.points.push_back({eps, 100.0 * r->rate()});
        }
      }
      rates.push_back(std::move(s));
    }
    const auto rate_path = dir / ("failure_rate_tau" + tag + ".svg");
    WriteFile(rate_path, LinePlot("Failure rate, tau = " + tag, "epsilon",
                                  "failure rate (%)", rates, true, false));
    written.push_back(rate_path);

    const char* types[] = {"a", "b", "c"};
    for (int k = 0; k < 3; ++k) {
      std::vector<Series> series;
      for (const std::string& v : a.variants) {
        Series s{v, {}};
        for (double eps : a.epsilons) {
          const ComplexityAverage* c = a.FindComplexity(tau, eps, v);
          if (c == nullptr || c->samples == 0) continue;
          const double value = k == 0 ? c->cx_a : k == 1 ? c->cx_b : c->cx_c;
          s.points.push_back({eps, value});
        }
        series.push_back(std::move(s));
      }
      const std::string type = types[k];
      const auto path = dir / ("complexity_" + type + "_tau" + tag + ".svg");
      WriteFile(path, LinePlot("Type " + std::string(1, 'A' + k) +
                                   " complexity, tau = " + tag,
                               "epsilon", "average complexity", series, true,
                               true));
      written.push_back(path);
    }

    // Heatmap at the smallest epsilon that still has common samples.
    double heat_eps = a.epsilons.empty() ? 0.0 : a.epsilons.front();
    for (double eps : a.epsilons) {
      for (const SuperiorityCell& c : a.superiority) {
        if (c.tau == tau && c.eps == eps && c.samples > 0) heat_eps = eps;
      }
    }
    std::vector<std::vector<double>> cells(
        a.variants.size(), std::vector<double>(a.variants.size(), 0.0));
    for (const SuperiorityCell& c : a.superiority) {
      if (c.tau != tau || c.eps != heat_eps) continue;
      const auto i = std::find(a.variants.begin(), a.variants.end(), c.row) -
                     a.variants.begin();
      const auto j = std::find(a.variants.begin(), a.variants.end(), c.col) -
                     a.variants.begin();
      cells[i][j] = c.percent;
    }
    const auto heat_path = dir / ("superiority_tau" + tag + ".svg");
    WriteFile(heat_path, Heatmap("Type B superiority (%), tau = " + tag +
                                     ", epsilon = " + Tick(heat_eps),
                                 a.variants, cells));
    written.push_back(heat_path);
  }
  return written;
}

std::vector<std::filesystem::path> EmitPlots(
    const std::filesystem::path& csv, const std::filesystem::path& dir) {
  std::ifstream in(csv);
  if (!in) throw std::runtime_error("cannot read " + csv.string());
  return EmitPlots(Aggregate(ReadRunsCsv(in)), dir);
}

}  // namespace mtpls::harness
