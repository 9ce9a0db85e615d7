#ifndef CGEO_RAT_HPP
#define CGEO_RAT_HPP

#include <gmpxx.h>
#include <string>

namespace cgeo {

/// Exact rational number. All engine arithmetic is exact; no floating point.
using Rat = mpq_class;

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

/// Parses "p" or "p/q" with optional leading '-'. Throws std::invalid_argument on junk.
Rat rat_from_string(const std::string& s);

} // namespace cgeo

#endif
