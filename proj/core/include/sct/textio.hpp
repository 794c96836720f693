#ifndef SCT_TEXTIO_HPP
#define SCT_TEXTIO_HPP

#include "sct/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sct {

// Renders a linear combination from (body, coefficient) pairs, already in
// display order.  Integer coefficients are juxtaposed ("2S[2,1]"), other
// rationals use "p/q*"; a multi-term combination whose coefficients are all
// negative is wrapped as "-(. + .)".
std::string format_linear(const std::vector<std::pair<std::string, Rat>>& terms);

// "a < b < c" style chunk comparison: digit runs compare numerically
bool natural_less(const std::string& a, const std::string& b);

} // namespace sct

#endif
