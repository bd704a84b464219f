#ifndef CHI2REFINE_GRIDSPEC_HPP_
#define CHI2REFINE_GRIDSPEC_HPP_

#include <string>
#include <vector>

// Grid mini-language and number formatting for the command-line front end.
//
// A grid spec is either a plain number or "lo:hi:steps[:log|:lin]"; steps is
// the point count, endpoints included. ":log" selects geometric spacing,
// ":lin" linear; without a modifier the caller's default applies (r grids
// default to log since the headline plots are log-log, everything else to
// linear). Malformed specs throw std::invalid_argument (a usage error at
// the CLI).

namespace chi2refine {

enum class GridSpacing { linear, log };

std::vector<double> parse_grid(const std::string& spec,
                               GridSpacing default_spacing = GridSpacing::linear);

// Shortest-of-%g with the given number of significant digits ("%.12g" by
// default); used for every numeric field in table and CSV output.
std::string format_sig(double v, int digits = 12);

}  // namespace chi2refine

#endif  // CHI2REFINE_GRIDSPEC_HPP_
