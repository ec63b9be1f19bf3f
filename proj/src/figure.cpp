#include "picardlab/figure.hpp"

#include <iomanip>
#include <sstream>

#include "picardlab/errors.hpp"

namespace picardlab {

namespace {

constexpr double kPanelSize = 320.0;
constexpr double kMargin = 56.0;
constexpr double kGap = 40.0;
constexpr double kLegendHeight = 40.0;

std::string num(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << v;
  return out.str();
}

const char* set_color(SetId id) {
  switch (id) {
    case SetId::A1: return "#1b9e77";
    case SetId::A2: return "#d95f02";
    case SetId::A3: return "#7570b3";
    case SetId::B: return "#e7298a";
    case SetId::T: return "#444444";
  }
  return "#000000";
}

// Shape centered at (x, y); circle, square, triangle, diamond, cross by set.
std::string shape(SetId id, double x, double y, const std::string& cls) {
  const double r = 3.0;
  const std::string attrs = " class=\"" + cls + " " + set_name(id) + "\" fill=\"" + set_color(id) + "\"";
  std::ostringstream out;
  switch (id) {
    case SetId::A1:
      out << "<circle" << attrs << " cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"" << num(r) << "\"/>";
      break;
    case SetId::A2:
      out << "<rect" << attrs << " x=\"" << num(x - r) << "\" y=\"" << num(y - r) << "\" width=\"" << num(2 * r)
          << "\" height=\"" << num(2 * r) << "\"/>";
      break;
    case SetId::A3:
      out << "<polygon" << attrs << " points=\"" << num(x) << "," << num(y - r) << " " << num(x - r) << ","
          << num(y + r) << " " << num(x + r) << "," << num(y + r) << "\"/>";
      break;
    case SetId::B:
      out << "<polygon" << attrs << " points=\"" << num(x) << "," << num(y - r) << " " << num(x + r) << "," << num(y)
          << " " << num(x) << "," << num(y + r) << " " << num(x - r) << "," << num(y) << "\"/>";
      break;
    case SetId::T:
      out << "<path" << attrs << " stroke=\"" << set_color(id) << "\" stroke-width=\"1.5\" d=\"M" << num(x - r) << ","
          << num(y - r) << "L" << num(x + r) << "," << num(y + r) << "M" << num(x - r) << "," << num(y + r) << "L"
          << num(x + r) << "," << num(y - r) << "\"/>";
      break;
  }
  return out.str();
}

struct Panel {
  Integer low;   // exclusive, except 0
  Integer high;  // inclusive
  double x0 = 0;
  double y0 = 0;

  double px(const Rational& chi) const { return x0 + kPanelSize * Rational(chi / high).get_d(); }
  double py(const Rational& k2) const { return y0 + kPanelSize - kPanelSize * Rational(k2 / (9 * high)).get_d(); }
};

void draw_line(std::ostringstream& out, const Panel& p, const std::string& cls, const Rational& slope,
               const Rational& offset, const Rational& chi_from, const std::string& label) {
  if (chi_from >= p.high) return;
  const Rational chi_to = p.high;
  out << "    <line class=\"" << cls << "\" x1=\"" << num(p.px(chi_from)) << "\" y1=\""
      << num(p.py(slope * chi_from + offset)) << "\" x2=\"" << num(p.px(chi_to)) << "\" y2=\""
      << num(p.py(slope * chi_to + offset)) << "\" stroke=\"#888888\" stroke-dasharray=\"4 3\"/>\n";
  out << "    <text class=\"line-label\" x=\"" << num(p.px(chi_to) - 4) << "\" y=\"" << num(p.py(slope * chi_to + offset) - 4)
      << "\" font-size=\"10\" text-anchor=\"end\">" << label << "</text>\n";
}

std::string params_field(const GeoPair& p) {
  if (p.params.size() == 2) return "m=" + std::to_string(p.params[0]) + ";n=" + std::to_string(p.params[1]);
  return std::string(p.set == SetId::T ? "t=" : "n=") + std::to_string(p.params[0]);
}

}  // namespace

FigureFormat parse_figure_format(const std::string& name) {
  if (name == "svg") return FigureFormat::Svg;
  if (name == "csv") return FigureFormat::Csv;
  throw ParameterError("unknown figure format '" + name + "' (expected svg or csv)");
}

std::vector<Integer> panel_bounds(const Integer& chi_max) {
  std::vector<Integer> out;
  if (chi_max >= 1000) out.push_back(Integer(chi_max / 100));
  Integer tenth = chi_max / 10;
  if (tenth < 1) tenth = 1;
  out.push_back(tenth);
  out.push_back(chi_max);
  return out;
}

std::string emit_svg(const std::vector<SetId>& sets, const Integer& chi_max) {
  const auto pairs = enumerate_sets(sets, chi_max);
  const auto bounds = panel_bounds(chi_max);
  std::vector<Panel> panels;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    Panel p;
    p.low = i == 0 ? Integer(0) : bounds[i - 1];
    p.high = bounds[i];
    p.x0 = kMargin + static_cast<double>(i) * (kPanelSize + kMargin + kGap);
    p.y0 = kMargin;
    panels.push_back(p);
  }
  const double width = static_cast<double>(panels.size()) * (kPanelSize + kMargin + kGap) + kMargin - kGap;
  const double height = kMargin + kPanelSize + kMargin + kLegendHeight;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\" font-family=\"sans-serif\">\n";
  out << "  <title>Invariant pairs (chi, K2) at " << panels.size() << " scales, chi &lt;= " << chi_max << "</title>\n";
  for (std::size_t i = 0; i < panels.size(); ++i) {
    const Panel& p = panels[i];
    out << "  <g class=\"panel\" id=\"panel-" << i + 1 << "\">\n";
    out << "    <rect class=\"frame\" x=\"" << num(p.x0) << "\" y=\"" << num(p.y0) << "\" width=\"" << num(kPanelSize)
        << "\" height=\"" << num(kPanelSize) << "\" fill=\"none\" stroke=\"#000000\"/>\n";
    out << "    <text class=\"axis-label\" x=\"" << num(p.x0 + kPanelSize / 2) << "\" y=\""
        << num(p.y0 + kPanelSize + 28) << "\" font-size=\"12\" text-anchor=\"middle\">chi (" << p.low
        << " &lt; chi &lt;= " << p.high << ")</text>\n";
    out << "    <text class=\"axis-label\" x=\"" << num(p.x0 - 8) << "\" y=\"" << num(p.y0 + kPanelSize / 2)
        << "\" font-size=\"12\" text-anchor=\"end\">K2</text>\n";
    out << "    <text class=\"tick\" x=\"" << num(p.x0 + kPanelSize) << "\" y=\"" << num(p.y0 + kPanelSize + 14)
        << "\" font-size=\"10\" text-anchor=\"end\">" << p.high << "</text>\n";
    out << "    <text class=\"tick\" x=\"" << num(p.x0 - 4) << "\" y=\"" << num(p.y0 + 10)
        << "\" font-size=\"10\" text-anchor=\"end\">" << 9 * p.high << "</text>\n";
    draw_line(out, p, "noether", 2, -6, 3, "Noether");
    draw_line(out, p, "severi", 4, 0, 0, "Severi");
    draw_line(out, p, "bmy", 9, 0, 0, "BMY");
    for (const auto& pair : pairs) {
      if (pair.chi <= p.low || pair.chi > p.high) continue;
      out << "    " << shape(pair.set, p.px(pair.chi), p.py(pair.K2), "marker") << "\n";
    }
    out << "  </g>\n";
  }
  out << "  <g class=\"legend\">\n";
  double lx = kMargin;
  const double ly = kMargin + kPanelSize + kMargin + kLegendHeight / 2;
  for (SetId id : sets) {
    out << "    " << shape(id, lx, ly, "legend-marker") << "\n";
    out << "    <text x=\"" << num(lx + 8) << "\" y=\"" << num(ly + 4) << "\" font-size=\"12\">" << set_name(id)
        << "</text>\n";
    lx += 60;
  }
  out << "    <text x=\"" << num(lx) << "\" y=\"" << num(ly + 4)
      << "\" font-size=\"12\">dashed: Noether K2=2chi-6, Severi K2=4chi, BMY K2=9chi</text>\n";
  out << "  </g>\n";
  out << "</svg>\n";
  return out.str();
}

std::string emit_csv(const std::vector<SetId>& sets, const Integer& chi_max) {
  std::ostringstream out;
  out << "set_label,params,K2,chi,slope_num,slope_den\n";
  for (const auto& p : enumerate_sets(sets, chi_max)) {
    const Rational mu = slope(p);
    out << set_name(p.set) << "," << params_field(p) << "," << p.K2 << "," << p.chi << "," << mu.get_num() << ","
        << mu.get_den() << "\n";
  }
  return out.str();
}

std::string emit_figure(const std::vector<SetId>& sets, const Integer& chi_max, FigureFormat format) {
  return format == FigureFormat::Svg ? emit_svg(sets, chi_max) : emit_csv(sets, chi_max);
}

}  // namespace picardlab
