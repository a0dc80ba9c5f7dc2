#pragma once

// Binary128 helpers for polynomial expressions of the CM entries that cancel
// catastrophically in double precision near pure or product states.

#include <quadmath.h>

namespace cvs::quad {

using real = __float128;

inline real sqrt(real x) { return ::sqrtq(x); }
inline real log(real x) { return ::logq(x); }
inline real abs(real x) { return x < 0 ? -x : x; }
inline real max(real x, real y) { return x < y ? y : x; }
inline double to_double(real x) { return static_cast<double>(x); }

}  // namespace cvs::quad
