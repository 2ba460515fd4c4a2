#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace dw {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Rat rat_pow(const Rat& base, long e) {
    if (e < 0) return Rat(1) / rat_pow(base, -e);
    Rat acc(1), b = base;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) acc *= b;
        b *= b;
    }
    return acc;
}

// Canonical "p/q" (or "p" when q = 1) rendering; stable for golden files.
inline std::string rat_str(const Rat& r) {
    Int n = rat_num(r), d = rat_den(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

}  // namespace dw
