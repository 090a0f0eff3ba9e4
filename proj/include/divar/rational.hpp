#pragma once

#include <gmpxx.h>

#include <string>

namespace divar {

// Exact arbitrary-precision rational coefficient.
using Rat = mpq_class;

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_of(long num, long den = 1) { Rat r(num, den); r.canonicalize(); return r; }

}  // namespace divar
