#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "dwcalc/errors.hpp"
#include "dwcalc/polynomial.hpp"
#include "dwcalc/rational.hpp"

namespace dw {

// An element of Q(zeta_N), stored as a residue modulo Phi_N with exactly
// phi(N) rational coefficients. Reducing modulo Phi_N (rather than x^N - 1)
// makes equality literal coefficient comparison, so partition values can be
// matched against closed-form constants with zero tolerance.
//
// Values are immutable after construction and safe to share across threads.
class CyclotomicScalar {
  public:
    CyclotomicScalar() : level_(1), coeffs_{Rat(0)} {}

    static CyclotomicScalar from_rational(const Rat& r) {
        CyclotomicScalar s;
        s.coeffs_[0] = r;
        return s;
    }

    // zeta_N^k, k taken mod N.
    static CyclotomicScalar root_of_unity(unsigned long n, long long k) {
        if (n < 1 || n > kMaxCyclotomicLevel)
            throw Error("root_of_unity: level out of range");
        long long kk = k % static_cast<long long>(n);
        if (kk < 0) kk += static_cast<long long>(n);
        std::vector<Rat> poly(static_cast<std::size_t>(kk) + 1, Rat(0));
        poly.back() = 1;
        return CyclotomicScalar(n, reduce(std::move(poly), n));
    }

    unsigned long level() const { return level_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const Rat& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    // Rational part if the value lies in Q, otherwise nullptr-like flag.
    bool is_rational() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }
    Rat rational_part() const {
        if (!is_rational()) throw Error("rational_part: value not rational");
        return coeffs_[0];
    }

    // Exponent-scaling map Q(zeta_M) -> Q(zeta_L) for M | L.
    CyclotomicScalar raised_to_level(unsigned long target) const {
        if (target == level_) return *this;
        if (target % level_ != 0 || target > kMaxCyclotomicLevel)
            throw Error("raised_to_level: target must be a multiple within bound");
        unsigned long scale = target / level_;
        std::vector<Rat> poly((coeffs_.size() - 1) * scale + 1, Rat(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[i * scale] = coeffs_[i];
        return CyclotomicScalar(target, reduce(std::move(poly), target));
    }

    friend CyclotomicScalar operator+(const CyclotomicScalar& a, const CyclotomicScalar& b) {
        auto [x, y] = coerced(a, b);
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
        return x;
    }
    friend CyclotomicScalar operator-(const CyclotomicScalar& a, const CyclotomicScalar& b) {
        auto [x, y] = coerced(a, b);
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
        return x;
    }
    friend CyclotomicScalar operator*(const CyclotomicScalar& a, const CyclotomicScalar& b) {
        auto [x, y] = coerced(a, b);
        std::vector<Rat> prod(2 * x.coeffs_.size(), Rat(0));
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
            if (x.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < y.coeffs_.size(); ++j)
                if (y.coeffs_[j] != 0) prod[i + j] += x.coeffs_[i] * y.coeffs_[j];
        }
        return CyclotomicScalar(x.level_, reduce(std::move(prod), x.level_));
    }
    friend CyclotomicScalar operator*(const CyclotomicScalar& a, const Rat& r) {
        CyclotomicScalar x = a;
        for (Rat& c : x.coeffs_) c *= r;
        return x;
    }
    friend CyclotomicScalar operator/(const CyclotomicScalar& a, const Rat& r) {
        if (r == 0) throw Error("division by zero");
        return a * (Rat(1) / r);
    }
    CyclotomicScalar& operator+=(const CyclotomicScalar& b) { return *this = *this + b; }
    CyclotomicScalar& operator*=(const CyclotomicScalar& b) { return *this = *this * b; }

    friend bool operator==(const CyclotomicScalar& a, const CyclotomicScalar& b) {
        auto [x, y] = coerced(a, b);
        return x.coeffs_ == y.coeffs_;
    }
    friend bool operator!=(const CyclotomicScalar& a, const CyclotomicScalar& b) {
        return !(a == b);
    }
    friend bool operator==(const CyclotomicScalar& a, const Rat& r) {
        return a == from_rational(r);
    }

    // Display-only floating approximation; never used in comparisons.
    std::complex<double> approx() const {
        std::complex<double> acc(0.0, 0.0);
        const double tau = 6.283185307179586476925287;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            double c = rat_num(coeffs_[i]).convert_to<double>() /
                       rat_den(coeffs_[i]).convert_to<double>();
            double ang = tau * static_cast<double>(i) / static_cast<double>(level_);
            acc += c * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        return acc;
    }

  private:
    CyclotomicScalar(unsigned long level, std::vector<Rat> coeffs)
        : level_(level), coeffs_(std::move(coeffs)) {}

    static std::vector<Rat> reduce(std::vector<Rat> poly, unsigned long n) {
        const IntPoly& phi = cyclotomic_polynomial(n);
        const std::size_t deg = phi.size() - 1;  // = euler_phi(n)
        if (poly.size() < deg) poly.resize(deg, Rat(0));
        for (std::size_t i = poly.size(); i-- > deg;) {
            Rat c = poly[i];
            if (c != 0)
                for (std::size_t j = 0; j < deg; ++j) poly[i - deg + j] -= c * Rat(phi[j]);
            poly[i] = 0;
        }
        poly.resize(deg);
        return poly;
    }

    static std::pair<CyclotomicScalar, CyclotomicScalar> coerced(const CyclotomicScalar& a,
                                                                 const CyclotomicScalar& b) {
        if (a.level_ == b.level_) return {a, b};
        unsigned long l = std::lcm(a.level_, b.level_);
        if (l > kMaxCyclotomicLevel) throw Error("level coercion exceeds bound");
        return {a.raised_to_level(l), b.raised_to_level(l)};
    }

    unsigned long level_;
    std::vector<Rat> coeffs_;
};

using Scalar = CyclotomicScalar;

}  // namespace dw
