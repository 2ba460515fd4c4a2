#pragma once

#include <string>
#include <vector>

#include "dwcalc/delta_complex.hpp"
#include "dwcalc/errors.hpp"
#include "dwcalc/gf2.hpp"

namespace dw {

// Mod-2 cochain of fixed degree on a complex: one bit per k-simplex.
struct CochainMod2 {
    int degree = 0;
    Gf2Vec bits;
};

// delta: C^k -> C^{k+1}, (dv)(s) = sum of v over the faces of s.
inline Gf2Matrix mod2_coboundary_matrix(const DeltaComplex& k, int degree) {
    Gf2Matrix m(k.count(degree + 1), k.count(degree));
    for (std::size_t s = 0; s < k.count(degree + 1); ++s)
        for (int f : k.faces(degree + 1, s)) m.row(s).flip(static_cast<std::size_t>(f));
    return m;
}

inline bool is_mod2_cocycle(const DeltaComplex& k, const CochainMod2& v) {
    if (v.degree >= k.dimension()) return true;
    return mod2_coboundary_matrix(k, v.degree).apply(v.bits).is_zero();
}

struct Mod2Cohomology {
    std::vector<std::size_t> betti;   // beta_0 .. beta_n over Z/2
    std::vector<Gf2Vec> h1_basis;     // degree-1 cocycles spanning H^1
    Gf2Span h1_coboundaries{0};       // span of B^1, for class comparisons
};

inline Mod2Cohomology mod2_cohomology(const DeltaComplex& k) {
    Mod2Cohomology out;
    const int n = k.dimension();
    std::vector<std::size_t> rank(n + 1, 0);  // rank of delta: C^k -> C^{k+1}
    for (int deg = 0; deg < n; ++deg) rank[deg] = mod2_coboundary_matrix(k, deg).rank();
    out.betti.resize(n + 1);
    for (int deg = 0; deg <= n; ++deg) {
        std::size_t cycles = k.count(deg) - (deg < n ? rank[deg] : 0);
        out.betti[deg] = cycles - (deg > 0 ? rank[deg - 1] : 0);
    }
    if (n >= 1) {
        Gf2Span span(k.count(1));
        Gf2Matrix d0(k.count(1), k.count(0));
        for (std::size_t e = 0; e < k.count(1); ++e) {
            int t = k.edge_tail(static_cast<int>(e)), h = k.edge_head(static_cast<int>(e));
            if (t != h) {
                d0.row(e).flip(t);
                d0.row(e).flip(h);
            }
        }
        for (std::size_t v = 0; v < k.count(0); ++v) {
            Gf2Vec column(k.count(1));
            for (std::size_t e = 0; e < k.count(1); ++e) column.set(e, d0.get(e, v));
            span.add(std::move(column));
        }
        out.h1_coboundaries = span;
        if (n >= 2) {
            for (Gf2Vec& z : mod2_coboundary_matrix(k, 1).kernel_basis())
                if (span.add(z)) out.h1_basis.push_back(std::move(z));
        } else {
            for (std::size_t e = 0; e < k.count(1); ++e) {
                Gf2Vec z(k.count(1));
                z.set(e, true);
                if (span.add(z)) out.h1_basis.push_back(std::move(z));
            }
        }
    }
    return out;
}

// Alexander-Whitney cup power of a degree-1 cocycle, paired with the mod-2
// fundamental class: sum over top simplices of the product of v along the
// consecutive-vertex edges.
inline int cup_power_pairing(const DeltaComplex& k, const CochainMod2& v) {
    if (v.degree != 1 || v.bits.size() != k.count(1))
        throw ValidationError("cup_power_pairing: expected a degree-1 cochain on the complex");
    if (!k.is_closed_pseudomanifold())
        throw ValidationError("cup_power_pairing: complex is not closed");
    if (!is_mod2_cocycle(k, v)) throw ValidationError("cup_power_pairing: v is not a cocycle");
    const int n = k.dimension();
    int total = 0;
    for (std::size_t s = 0; s < k.count(n); ++s) {
        int prod = 1;
        for (int i = 1; i <= n && prod; ++i)
            prod &= v.bits.get(k.sub_edge(n, static_cast<int>(s), i - 1, i)) ? 1 : 0;
        total ^= prod;
    }
    return total;
}

// The mod-2 fundamental cycle (all top coefficients 1) must have zero
// boundary; true for every validated closed complex, checked directly.
inline bool fundamental_class_is_cycle(const DeltaComplex& k) {
    const int n = k.dimension();
    if (n == 0 || !k.is_closed_pseudomanifold()) return false;
    std::vector<int> cnt(k.count(n - 1), 0);
    for (std::size_t s = 0; s < k.count(n); ++s)
        for (int f : k.faces(n, s)) cnt[f] ^= 1;
    for (int c : cnt)
        if (c) return false;
    return true;
}

// Object admissibility of a closed (n-1)-manifold for an n-dimensional
// theory: the relevant top homology in degree n vanishes for dimension
// reasons, for both integral and mod-2 coefficients. Reported, not assumed.
struct ObjectConditionReport {
    std::string spectrum;
    bool satisfied = false;
    std::string reason;
};

inline std::vector<ObjectConditionReport> object_condition(const DeltaComplex& y) {
    std::vector<ObjectConditionReport> reports;
    const int above = y.dimension() + 1;
    const bool no_cells = (y.count(above) == 0);
    for (const char* spec : {"HZ", "HZ/2"}) {
        ObjectConditionReport r;
        r.spectrum = spec;
        r.satisfied = no_cells;
        r.reason = no_cells ? "no simplices above dimension " + std::to_string(y.dimension())
                            : "unexpected cells above top dimension";
        reports.push_back(std::move(r));
    }
    return reports;
}

}  // namespace dw
