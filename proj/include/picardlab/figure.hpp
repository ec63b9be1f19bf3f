#pragma once

#include <string>
#include <vector>

#include "picardlab/geography.hpp"

namespace picardlab {

enum class FigureFormat { Svg, Csv };

FigureFormat parse_figure_format(const std::string& name);  // "svg" / "csv", else ParameterError

// Upper chi bound of each panel: chi_max/100, chi_max/10, chi_max (the first
// dropped below chi_max = 1000). A pair is drawn once, in the first panel whose
// bound reaches its chi.
std::vector<Integer> panel_bounds(const Integer& chi_max);

// Static SVG, one panel per chi scale. Every pair is a shape with class
// "marker <set>"; legend swatches use "legend-marker". Lines: Noether
// K2 = 2chi - 6, Severi K2 = 4chi, BMY K2 = 9chi.
std::string emit_svg(const std::vector<SetId>& sets, const Integer& chi_max);

// Columns set_label,params,K2,chi,slope_num,slope_den; params are "m=3;n=2".
std::string emit_csv(const std::vector<SetId>& sets, const Integer& chi_max);

std::string emit_figure(const std::vector<SetId>& sets, const Integer& chi_max, FigureFormat format);

}  // namespace picardlab
