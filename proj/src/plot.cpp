#include "sharklab/plot.hpp"

#include <map>
#include <sstream>

namespace sharklab {

namespace {

constexpr double kSize = 400.0;
constexpr double kMargin = 20.0;

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace

std::string plot(const PLMap& f, PlotFormat format, unsigned samples) {
  const Interval& dom = f.domain();
  std::ostringstream os;
  if (format == PlotFormat::csv) {
    std::map<Rational, Rational> rows;
    for (const auto& p : f.points()) rows.emplace(p.x, p.y);
    if (samples == 1) rows.emplace(dom.lo, f(dom.lo));
    for (unsigned k = 0; samples > 1 && k < samples; ++k) {
      Rational x = dom.lo + dom.length() * k / (samples - 1);
      rows.emplace(x, f(x));
    }
    os << "x,y\n";
    for (const auto& [x, y] : rows) os << to_decimal(x) << "," << to_decimal(y) << "\n";
    return os.str();
  }
  const double lo = to_double(dom.lo);
  const double span = to_double(dom.length());
  auto px = [&](const Rational& x) { return kMargin + (to_double(x) - lo) / span * kSize; };
  auto py = [&](const Rational& y) { return kMargin + kSize - (to_double(y) - lo) / span * kSize; };
  const double total = kSize + 2 * kMargin;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total << "\" height=\"" << total
     << "\" viewBox=\"0 0 " << total << " " << total << "\">\n";
  os << "  <rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kSize << "\" height=\"" << kSize
     << "\" fill=\"none\" stroke=\"#999\"/>\n";
  os << "  <line x1=\"" << kMargin << "\" y1=\"" << kMargin + kSize << "\" x2=\"" << kMargin + kSize
     << "\" y2=\"" << kMargin << "\" stroke=\"#ccc\" stroke-dasharray=\"4 4\"/>\n";
  os << "  <polyline fill=\"none\" stroke=\"black\" data-exact=\"";
  bool first = true;
  for (const auto& p : f.points()) {
    os << (first ? "" : " ") << to_string(p.x) << "," << to_string(p.y);
    first = false;
  }
  os << "\" points=\"";
  first = true;
  os.precision(12);
  for (const auto& p : f.points()) {
    os << (first ? "" : " ") << px(p.x) << "," << py(p.y);
    first = false;
  }
  os << "\"/>\n</svg>\n";
  return os.str();
}

}  // namespace sharklab
