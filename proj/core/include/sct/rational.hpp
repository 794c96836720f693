#ifndef SCT_RATIONAL_HPP
#define SCT_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace sct {

// exact rational scalar used for every coefficient in the library
using Rat = mpq_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

// "7", "-3/2"
inline std::string rat_string(const Rat& x) { return x.get_str(); }

} // namespace sct

#endif
