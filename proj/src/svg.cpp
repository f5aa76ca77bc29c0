#include "mowa/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "mowa/problems.hpp"

namespace mowa {

namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kPlotReferenceSeed = 13572468;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  }
  out << content;
  if (!out) {
    throw std::runtime_error("write failed for '" + path.string() + "'");
  }
}

/// Maps a data rectangle onto a pixel viewport (SVG y grows downward).
struct Frame {
  double px, py, pw, ph;  // viewport in pixels
  double x0, x1, y0, y1;  // data range

  double map_x(double x) const { return px + (x - x0) / (x1 - x0) * pw; }
  double map_y(double y) const { return py + ph - (y - y0) / (y1 - y0) * ph; }
};

std::string svg_open(double width, double height) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width)
      << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width)
      << " " << fmt(height) << "\">\n"
      << "<rect width=\"" << fmt(width) << "\" height=\"" << fmt(height)
      << "\" fill=\"white\"/>\n";
  return out.str();
}

void add_circle(std::ostringstream& out, const std::string& cls, double cx,
                double cy, double r, const std::string& fill) {
  out << "<circle class=\"" << cls << "\" cx=\"" << fmt(cx) << "\" cy=\""
      << fmt(cy) << "\" r=\"" << fmt(r) << "\" fill=\"" << fill
      << "\" fill-opacity=\"0.85\"/>\n";
}

void add_text(std::ostringstream& out, const std::string& cls, double x, double y,
              const std::string& anchor, const std::string& content) {
  out << "<text class=\"" << cls << "\" x=\"" << fmt(x) << "\" y=\"" << fmt(y)
      << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\""
      << anchor << "\">" << content << "</text>\n";
}

void add_line(std::ostringstream& out, double x1, double y1, double x2, double y2,
              const std::string& stroke, double width = 1.0) {
  out << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\""
      << fmt(x2) << "\" y2=\"" << fmt(y2) << "\" stroke=\"" << stroke
      << "\" stroke-width=\"" << fmt(width) << "\"/>\n";
}

void add_polyline(std::ostringstream& out, const std::string& cls,
                  const std::vector<std::pair<double, double>>& pts,
                  const std::string& stroke, double width = 1.5) {
  out << "<polyline class=\"" << cls << "\" fill=\"none\" stroke=\"" << stroke
      << "\" stroke-width=\"" << fmt(width) << "\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i > 0) out << " ";
    out << fmt(pts[i].first) << "," << fmt(pts[i].second);
  }
  out << "\"/>\n";
}

/// Axis box with ~5 linear ticks per side.
void add_axes(std::ostringstream& out, const Frame& f, const std::string& xlabel,
              const std::string& ylabel) {
  add_line(out, f.px, f.py + f.ph, f.px + f.pw, f.py + f.ph, "black");
  add_line(out, f.px, f.py, f.px, f.py + f.ph, "black");
  const int ticks = 4;
  for (int t = 0; t <= ticks; ++t) {
    const double xv = f.x0 + (f.x1 - f.x0) * t / ticks;
    const double yv = f.y0 + (f.y1 - f.y0) * t / ticks;
    const double xp = f.map_x(xv);
    const double yp = f.map_y(yv);
    add_line(out, xp, f.py + f.ph, xp, f.py + f.ph + 4, "black");
    add_text(out, "xtick", xp, f.py + f.ph + 16, "middle", fmt(xv));
    add_line(out, f.px - 4, yp, f.px, yp, "black");
    add_text(out, "ytick", f.px - 6, yp + 4, "end", fmt(yv));
  }
  add_text(out, "xlabel", f.px + f.pw / 2, f.py + f.ph + 32, "middle", xlabel);
  add_text(out, "ylabel", f.px - 42, f.py - 6, "start", ylabel);
}

void expand_range(double& lo, double& hi) {
  if (hi - lo < 1e-12) {
    lo -= 0.5;
    hi += 0.5;
  } else {
    const double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;
  }
}

std::string render_front_2d(const RunRecord& record, const Problem& problem) {
  std::ostringstream out;
  out << svg_open(480, 480);
  const auto curve = problem.front_sweep(257);
  double lo_x = 0.0, hi_x = 0.0, lo_y = 0.0, hi_y = 0.0;
  for (const Vec& p : curve) {
    hi_x = std::max(hi_x, p(0));
    hi_y = std::max(hi_y, p(1));
  }
  for (const Vec& p : record.final_front) {
    hi_x = std::max(hi_x, p(0));
    hi_y = std::max(hi_y, p(1));
  }
  expand_range(lo_x, hi_x);
  expand_range(lo_y, hi_y);
  const Frame f{60, 20, 390, 390, lo_x, hi_x, lo_y, hi_y};
  add_axes(out, f, "f1", "f2");
  std::vector<std::pair<double, double>> pts;
  pts.reserve(curve.size());
  for (const Vec& p : curve) pts.emplace_back(f.map_x(p(0)), f.map_y(p(1)));
  add_polyline(out, "front", pts, "#bbbbbb");
  for (const Vec& p : record.final_front) {
    add_circle(out, "pt", f.map_x(p(0)), f.map_y(p(1)), 4, "#3465a4");
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_front_3d(const RunRecord& record, const Problem& problem) {
  Rng rng(kPlotReferenceSeed);
  const auto reference = problem.sample_front(1200, rng);
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};

  std::ostringstream out;
  out << svg_open(1160, 420);
  for (int panel = 0; panel < 3; ++panel) {
    const int a = pairs[panel][0], b = pairs[panel][1];
    double lo_x = 0.0, hi_x = 0.0, lo_y = 0.0, hi_y = 0.0;
    for (const Vec& p : reference) {
      hi_x = std::max(hi_x, p(a));
      hi_y = std::max(hi_y, p(b));
    }
    for (const Vec& p : record.final_front) {
      hi_x = std::max(hi_x, p(a));
      hi_y = std::max(hi_y, p(b));
    }
    expand_range(lo_x, hi_x);
    expand_range(lo_y, hi_y);
    const Frame f{60.0 + 380.0 * panel, 20, 330, 330, lo_x, hi_x, lo_y, hi_y};
    add_axes(out, f, "f" + std::to_string(a + 1), "f" + std::to_string(b + 1));
    for (const Vec& p : reference) {
      add_circle(out, "ref", f.map_x(p(a)), f.map_y(p(b)), 1.2, "#cccccc");
    }
    for (const Vec& p : record.final_front) {
      add_circle(out, "pt", f.map_x(p(a)), f.map_y(p(b)), 3.5, "#3465a4");
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_simplex(const RunRecord& record) {
  const int m = record.final_weights.front().dim();
  std::ostringstream out;
  if (m == 2) {
    out << svg_open(480, 160);
    const double x0 = 60, x1 = 420, y = 80;
    add_line(out, x0, y, x1, y, "black", 1.5);
    for (int t = 0; t <= 2; ++t) {
      const double x = x0 + (x1 - x0) * t / 2.0;
      add_line(out, x, y - 4, x, y + 4, "black");
      add_text(out, "xtick", x, y + 22, "middle", fmt(0.5 * t));
    }
    add_text(out, "xlabel", (x0 + x1) / 2, y + 44, "middle", "w1");
    for (const Weight& w : record.final_weights) {
      add_circle(out, "pt", x0 + (x1 - x0) * w[0], y, 4, "#cc3333");
    }
    out << "</svg>\n";
    return out.str();
  }
  // Barycentric triangle: vertex l is where w_l = 1.
  out << svg_open(480, 440);
  const double vx[3] = {60, 420, 240};
  const double vy[3] = {400, 400, 48};
  add_polyline(out, "triangle",
               {{vx[0], vy[0]}, {vx[1], vy[1]}, {vx[2], vy[2]}, {vx[0], vy[0]}},
               "black", 1.0);
  const char* labels[3] = {"w1", "w2", "w3"};
  const double label_dy[3] = {18, 18, -10};
  for (int l = 0; l < 3; ++l) {
    add_text(out, "vertex", vx[l], vy[l] + label_dy[l], "middle", labels[l]);
  }
  for (const Weight& w : record.final_weights) {
    const double cx = w[0] * vx[0] + w[1] * vx[1] + w[2] * vx[2];
    const double cy = w[0] * vy[0] + w[1] * vy[1] + w[2] * vy[2];
    add_circle(out, "pt", cx, cy, 4, "#cc3333");
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_metrics(const RunRecord& record) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const StepSample& s : record.steps) {
    for (double v : {s.energy, s.igd}) {
      const double clamped = std::max(v, 1e-300);
      lo = std::min(lo, clamped);
      hi = std::max(hi, clamped);
    }
  }
  int dec_lo = static_cast<int>(std::floor(std::log10(lo)));
  int dec_hi = static_cast<int>(std::ceil(std::log10(hi)));
  if (dec_hi <= dec_lo) dec_hi = dec_lo + 1;

  const double k_max = std::max<double>(1.0, static_cast<double>(record.steps.back().k));
  const Frame f{70, 20, 540, 330, 0.0, k_max,
                static_cast<double>(dec_lo), static_cast<double>(dec_hi)};

  std::ostringstream out;
  out << svg_open(640, 400);
  add_line(out, f.px, f.py + f.ph, f.px + f.pw, f.py + f.ph, "black");
  add_line(out, f.px, f.py, f.px, f.py + f.ph, "black");
  for (int t = 0; t <= 4; ++t) {
    const double kv = k_max * t / 4.0;
    const double xp = f.map_x(kv);
    add_line(out, xp, f.py + f.ph, xp, f.py + f.ph + 4, "black");
    add_text(out, "xtick", xp, f.py + f.ph + 16, "middle", fmt(std::round(kv)));
  }
  for (int dec = dec_lo; dec <= dec_hi; ++dec) {
    const double yp = f.map_y(dec);
    add_line(out, f.px - 4, yp, f.px + f.pw, yp, dec == dec_lo ? "black" : "#eeeeee");
    char label[24];
    std::snprintf(label, sizeof label, "1e%d", dec);
    add_text(out, "ytick", f.px - 6, yp + 4, "end", label);
  }
  add_text(out, "xlabel", f.px + f.pw / 2, f.py + f.ph + 32, "middle", "k");

  const auto series = [&](double StepSample::* member) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(record.steps.size());
    for (const StepSample& s : record.steps) {
      const double v = std::max(s.*member, 1e-300);
      pts.emplace_back(f.map_x(static_cast<double>(s.k)), f.map_y(std::log10(v)));
    }
    return pts;
  };
  add_polyline(out, "series energy", series(&StepSample::energy), "#cc3333");
  add_polyline(out, "series igd", series(&StepSample::igd), "#3465a4");
  add_line(out, f.px + f.pw - 130, 40, f.px + f.pw - 100, 40, "#cc3333", 2.0);
  add_text(out, "legend", f.px + f.pw - 94, 44, "start", "energy");
  add_line(out, f.px + f.pw - 130, 60, f.px + f.pw - 100, 60, "#3465a4", 2.0);
  add_text(out, "legend", f.px + f.pw - 94, 64, "start", "IGD");
  out << "</svg>\n";
  return out.str();
}

}  // namespace

void plot_svg(const RunRecord& record, const fs::path& dir) {
  if (record.final_front.empty() || record.steps.empty()) {
    throw std::invalid_argument("plot_svg: record has no data");
  }
  const int m = static_cast<int>(record.final_front.front().size());
  if (m > 3) {
    throw std::invalid_argument("plot_svg: only m in {2, 3} is supported");
  }
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw std::runtime_error("cannot create directory '" + dir.string() +
                             "': " + ec.message());
  }
  const Problem problem = Problem::from_id(record.config.problem_id);
  write_file(dir / "front.svg", m == 2 ? render_front_2d(record, problem)
                                       : render_front_3d(record, problem));
  write_file(dir / "simplex.svg", render_simplex(record));
  write_file(dir / "metrics.svg", render_metrics(record));
}

}  // namespace mowa
