#pragma once

#include <gmpxx.h>

#include <string>

namespace sptlab {

// Exact integer type for partition counts and series coefficients.
using Bigint = mpz_class;

inline std::string to_string(const Bigint& v) { return v.get_str(); }

inline Bigint bigint_from_string(const std::string& s) {
    return Bigint(s, 10);
}

// gmpxx has no long long overloads; long is 64-bit on every target we build
inline Bigint to_bigint(long long v) {
    static_assert(sizeof(long) == sizeof(long long));
    return Bigint(static_cast<long>(v));
}

}  // namespace sptlab
