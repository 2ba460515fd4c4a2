#pragma once

#include <map>
#include <vector>

#include "dwcalc/errors.hpp"
#include "dwcalc/rational.hpp"

namespace dw {

// Dense integer polynomials, coefficient of x^i at index i.
// Only what the cyclotomic tower needs: multiply and exact division.
using IntPoly = std::vector<Int>;

inline IntPoly poly_trim(IntPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return poly_trim(std::move(out));
}

// Exact division by a monic divisor; throws if a remainder is left.
inline IntPoly poly_div_exact(IntPoly num, const IntPoly& den) {
    if (den.empty() || den.back() != 1)
        throw Error("poly_div_exact: divisor must be monic");
    num = poly_trim(std::move(num));
    if (num.size() < den.size()) {
        if (!num.empty()) throw Error("poly_div_exact: remainder");
        return {};
    }
    IntPoly q(num.size() - den.size() + 1);
    for (std::size_t i = q.size(); i-- > 0;) {
        Int c = num[i + den.size() - 1];
        q[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (const Int& c : num)
        if (c != 0) throw Error("poly_div_exact: remainder");
    return poly_trim(std::move(q));
}

inline unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

// Phi_N as exact division of x^N - 1 by the product of Phi_d over proper
// divisors d | N. Levels are capped at desk scale.
inline constexpr unsigned long kMaxCyclotomicLevel = 10000;

inline const IntPoly& cyclotomic_polynomial(unsigned long n) {
    if (n < 1 || n > kMaxCyclotomicLevel)
        throw Error("cyclotomic_polynomial: level out of range");
    thread_local std::map<unsigned long, IntPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    IntPoly xn_minus_1(n + 1);
    xn_minus_1[0] = -1;
    xn_minus_1[n] = 1;
    IntPoly divisor{1};
    for (unsigned long d = 1; d < n; ++d)
        if (n % d == 0) divisor = poly_mul(divisor, cyclotomic_polynomial(d));
    return cache.emplace(n, poly_div_exact(std::move(xn_minus_1), divisor)).first->second;
}

}  // namespace dw
