#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace knotclasp::cli {

namespace {

constexpr double kWidth = 720, kHeight = 360, kMargin = 48;
constexpr std::size_t kMaxTicks = 16;

struct Frame {
  double x_lo, x_hi, y_lo, y_hi;

  double x(double t) const { return kMargin + (t - x_lo) / (x_hi - x_lo) * (kWidth - 2 * kMargin); }
  double y(double v) const { return kHeight - kMargin - (v - y_lo) / (y_hi - y_lo) * (kHeight - 2 * kMargin); }
};

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

// Keep at most kMaxTicks labels, always including both ends.
std::vector<Rational> thin(const std::vector<Rational>& ticks) {
  if (ticks.size() <= kMaxTicks) return ticks;
  std::vector<Rational> out;
  const double stride = static_cast<double>(ticks.size() - 1) / static_cast<double>(kMaxTicks - 1);
  for (std::size_t k = 0; k < kMaxTicks; ++k) {
    out.push_back(ticks[static_cast<std::size_t>(std::lround(static_cast<double>(k) * stride))]);
  }
  return out;
}

void open(std::ostringstream& os, const Frame& fr, const std::string& title, const std::vector<Rational>& xticks,
          const std::vector<Rational>& yticks) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << kWidth / 2 << "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
     << escape(title) << "</text>\n";
  os << "<g stroke=\"#999\" stroke-width=\"1\">\n";
  os << "<line x1=\"" << fr.x(fr.x_lo) << "\" y1=\"" << fr.y(0) << "\" x2=\"" << fr.x(fr.x_hi) << "\" y2=\"" << fr.y(0)
     << "\"/>\n";
  os << "<line x1=\"" << fr.x(fr.x_lo) << "\" y1=\"" << fr.y(fr.y_lo) << "\" x2=\"" << fr.x(fr.x_lo) << "\" y2=\""
     << fr.y(fr.y_hi) << "\"/>\n</g>\n";
  os << "<g font-family=\"sans-serif\" font-size=\"9\" fill=\"#333\">\n";
  for (const auto& t : thin(xticks)) {
    os << "<text x=\"" << fr.x(t.to_double()) << "\" y=\"" << kHeight - kMargin + 14
       << "\" text-anchor=\"middle\">" << t.str() << "</text>\n";
  }
  for (const auto& v : thin(yticks)) {
    os << "<text x=\"" << kMargin - 6 << "\" y=\"" << fr.y(v.to_double()) + 3 << "\" text-anchor=\"end\">" << v.str()
       << "</text>\n";
  }
  os << "</g>\n";
}

std::vector<Rational> sorted_unique(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Frame frame_for(double x_lo, double x_hi, double y_lo, double y_hi) {
  if (y_hi - y_lo < 1) {
    y_lo -= 1;
    y_hi += 1;
  }
  const double pad = 0.05 * (y_hi - y_lo);
  return {x_lo, x_hi, y_lo - pad, y_hi + pad};
}

}  // namespace

std::string svg_step_plot(const StepFunction& f, const std::string& title) {
  const auto ext_values = f.values();
  const long lo = std::min(0L, *std::min_element(ext_values.begin(), ext_values.end()));
  const long hi = std::max(0L, *std::max_element(ext_values.begin(), ext_values.end()));
  const Frame fr = frame_for(0, 1, static_cast<double>(lo), static_cast<double>(hi));

  std::vector<Rational> xticks{Rational(0)};
  xticks.insert(xticks.end(), f.breakpoints().begin(), f.breakpoints().end());
  xticks.push_back(Rational(1));
  std::vector<Rational> yticks;
  for (long v : ext_values) yticks.emplace_back(v);
  yticks.emplace_back(0);

  std::ostringstream os;
  open(os, fr, title, xticks, sorted_unique(yticks));
  os << "<g stroke=\"#1f5fa8\" stroke-width=\"2\">\n";
  for (const auto& in : f.intervals()) {
    const double v = static_cast<double>(in.value);
    os << "<line x1=\"" << fr.x(in.lo.to_double()) << "\" y1=\"" << fr.y(v) << "\" x2=\"" << fr.x(in.hi.to_double())
       << "\" y2=\"" << fr.y(v) << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string svg_pl_plot(const PLFunction& u, const std::string& title) {
  std::vector<double> ys;
  for (const auto& v : u.values()) ys.push_back(v.to_double());
  const double lo = std::min(0.0, *std::min_element(ys.begin(), ys.end()));
  const double hi = std::max(0.0, *std::max_element(ys.begin(), ys.end()));
  const Frame fr = frame_for(0, 2, lo, hi);

  std::ostringstream os;
  open(os, fr, title, u.breakpoints(), sorted_unique(u.values()));
  os << "<polyline fill=\"none\" stroke=\"#b0401a\" stroke-width=\"2\" points=\"";
  for (std::size_t k = 0; k < u.breakpoints().size(); ++k) {
    if (k) os << ' ';
    os << fr.x(u.breakpoints()[k].to_double()) << ',' << fr.y(ys[k]);
  }
  os << "\"/>\n</svg>\n";
  return os.str();
}

}  // namespace knotclasp::cli
