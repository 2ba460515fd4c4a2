#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "dwcalc/cochain.hpp"
#include "dwcalc/errors.hpp"
#include "dwcalc/rational.hpp"

namespace dw {

// --- normalized-cochain coordinates -----------------------------------------
//
// A normalized n-cochain is determined by its values on tuples of non-identity
// elements, giving (order-1)^n integer coordinates. The bar differential
// preserves the normalized subcomplex, so all linear algebra happens there.

struct NormCoords {
    const FiniteGroup* group;
    int degree;
    std::size_t dim;

    NormCoords(const FiniteGroup& g, int degree_)
        : group(&g), degree(degree_), dim(1) {
        for (int i = 0; i < degree; ++i) dim *= static_cast<std::size_t>(g.order() - 1);
    }

    // tuple of non-identity elements <-> coordinate index
    std::vector<int> tuple(std::size_t idx) const {
        std::vector<int> t(degree);
        const int base = group->order() - 1;
        for (int i = degree - 1; i >= 0; --i) {
            t[i] = static_cast<int>(idx % base) + 1;
            idx /= base;
        }
        return t;
    }
    std::size_t index(const std::vector<int>& t) const {
        std::size_t idx = 0;
        for (int g : t) idx = idx * static_cast<std::size_t>(group->order() - 1) +
                              static_cast<std::size_t>(g - 1);
        return idx;
    }

    Cochain to_cochain(const std::vector<int>& coords, int modulus) const {
        Cochain c = Cochain::zero(*group, degree, modulus);
        for (std::size_t i = 0; i < dim; ++i)
            if (coords[i]) c.set(tuple(i), coords[i]);
        return c;
    }
    std::vector<int> from_cochain(const Cochain& c) const {
        std::vector<int> coords(dim);
        for (std::size_t i = 0; i < dim; ++i) coords[i] = c(tuple(i));
        return coords;
    }
};

// Bar differential as an integer matrix on normalized coordinates
// (rows: degree+1 tuples, cols: degree tuples).
inline std::vector<std::vector<Int>> delta_matrix(const FiniteGroup& g, int degree) {
    NormCoords dom(g, degree), cod(g, degree + 1);
    std::vector<std::vector<Int>> a(cod.dim, std::vector<Int>(dom.dim, Int(0)));
    std::vector<int> face(degree);
    for (std::size_t r = 0; r < cod.dim; ++r) {
        std::vector<int> args = cod.tuple(r);
        for (int i = 0; i <= degree + 1; ++i) {
            if (i == 0) {
                face.assign(args.begin() + 1, args.end());
            } else if (i == degree + 1) {
                face.assign(args.begin(), args.end() - 1);
            } else {
                face.clear();
                face.insert(face.end(), args.begin(), args.begin() + (i - 1));
                face.push_back(g.mul(args[i - 1], args[i]));
                face.insert(face.end(), args.begin() + i + 1, args.end());
            }
            bool normalized_away = false;
            for (int x : face) normalized_away |= (x == 0);
            if (normalized_away) continue;
            a[r][dom.index(face)] += (i % 2 == 0) ? 1 : -1;
        }
    }
    return a;
}

// --- diagonal form over Z ----------------------------------------------------
//
// L * A * R = D with L, R unimodular and D diagonal (no divisibility chain;
// per-row gcd conditions are all the solvers below need).

struct DiagonalForm {
    std::vector<std::vector<Int>> left;   // rows x rows
    std::vector<std::vector<Int>> right;  // cols x cols
    std::vector<Int> diag;                // length min(rows, cols)
    std::size_t rows = 0, cols = 0;
};

inline DiagonalForm diagonalize(std::vector<std::vector<Int>> a) {
    DiagonalForm f;
    f.rows = a.size();
    f.cols = f.rows ? a[0].size() : 0;
    f.left.assign(f.rows, std::vector<Int>(f.rows, Int(0)));
    for (std::size_t i = 0; i < f.rows; ++i) f.left[i][i] = 1;
    f.right.assign(f.cols, std::vector<Int>(f.cols, Int(0)));
    for (std::size_t i = 0; i < f.cols; ++i) f.right[i][i] = 1;

    const std::size_t steps = std::min(f.rows, f.cols);
    for (std::size_t t = 0; t < steps; ++t) {
        while (true) {
            // pick the entry of smallest absolute value in the working block
            std::size_t pr = t, pc = t;
            Int best(0);
            for (std::size_t i = t; i < f.rows; ++i)
                for (std::size_t j = t; j < f.cols; ++j)
                    if (a[i][j] != 0 && (best == 0 || abs(a[i][j]) < abs(best))) {
                        best = a[i][j];
                        pr = i;
                        pc = j;
                    }
            if (best == 0) break;
            std::swap(a[t], a[pr]);
            std::swap(f.left[t], f.left[pr]);
            if (pc != t)
                for (std::size_t i = 0; i < f.rows; ++i) std::swap(a[i][t], a[i][pc]);
            if (pc != t) std::swap(f.right[t], f.right[pc]);

            bool clean = true;
            for (std::size_t i = t + 1; i < f.rows; ++i) {
                Int q = a[i][t] / a[t][t];
                if (q != 0) {
                    for (std::size_t j = t; j < f.cols; ++j) a[i][j] -= q * a[t][j];
                    for (std::size_t j = 0; j < f.rows; ++j)
                        f.left[i][j] -= q * f.left[t][j];
                }
                clean &= (a[i][t] == 0);
            }
            for (std::size_t j = t + 1; j < f.cols; ++j) {
                Int q = a[t][j] / a[t][t];
                if (q != 0) {
                    for (std::size_t i = 0; i < f.rows; ++i) a[i][j] -= q * a[i][t];
                    for (std::size_t i = 0; i < f.cols; ++i)
                        f.right[i][j] -= q * f.right[i][t];
                }
                clean &= (a[t][j] == 0);
            }
            if (clean) break;
        }
    }
    f.diag.resize(steps);
    for (std::size_t t = 0; t < steps; ++t) f.diag[t] = a[t][t];
    return f;
}

// Solvability of A w == x (mod modulus), using a precomputed diagonal form.
inline bool in_image_mod(const DiagonalForm& f, const std::vector<Int>& x, const Int& modulus) {
    std::vector<Int> lx(f.rows, Int(0));
    for (std::size_t i = 0; i < f.rows; ++i) {
        for (std::size_t j = 0; j < f.rows; ++j)
            if (f.left[i][j] != 0 && x[j] != 0) lx[i] += f.left[i][j] * x[j];
        lx[i] %= modulus;
        if (lx[i] < 0) lx[i] += modulus;
    }
    for (std::size_t i = 0; i < f.rows; ++i) {
        Int d = (i < f.diag.size()) ? f.diag[i] : Int(0);
        Int g = gcd(d, modulus);
        if (g == 0) {
            if (lx[i] != 0) return false;
        } else if (lx[i] % g != 0) {
            return false;
        }
    }
    return true;
}

// Generators (with their orders) of ker(A mod modulus).
inline std::vector<std::pair<std::vector<Int>, Int>> kernel_generators_mod(
    const DiagonalForm& f, const Int& modulus) {
    std::vector<std::pair<std::vector<Int>, Int>> gens;
    for (std::size_t i = 0; i < f.cols; ++i) {
        Int d = (i < f.diag.size()) ? f.diag[i] : Int(0);
        Int g = gcd(abs(d), modulus);
        if (g == 0) g = modulus;  // zero column: fully free
        if (g == 1) continue;     // unit: forced zero
        Int scale = modulus / g;
        std::vector<Int> v(f.cols, Int(0));
        for (std::size_t r = 0; r < f.cols; ++r) {
            v[r] = (f.right[r][i] * scale) % modulus;
            if (v[r] < 0) v[r] += modulus;
        }
        gens.emplace_back(std::move(v), g);  // generator of order g
    }
    return gens;
}

// --- class enumeration -------------------------------------------------------

enum class ClassEnumMode { kAuto, kExhaustive, kLinear };

struct CocycleClasses {
    std::vector<Cochain> reps;       // one per theory-distinct class, zero first
    Int cocycle_count = 0;           // |Z^n(G; Z/N)|
    Int strict_class_count = 0;      // |H^n(G; Z/N)|
};

namespace detail {

// Two cocycles induce the same pairing with every cycle (hence the same
// theory) iff their difference, scaled by |G|, becomes a coboundary at
// modulus N*|G|. This quotients out classes that die under mu_N -> circle.
class TrivialityTester {
  public:
    TrivialityTester(const FiniteGroup& g, int degree, int modulus)
        : coords_(g, degree),
          modulus_(modulus),
          big_modulus_(Int(modulus) * g.order()),
          scale_(g.order()),
          boundary_form_(diagonalize(delta_matrix(g, degree - 1))) {}

    bool coboundary_mod_n(const std::vector<int>& v) const {
        std::vector<Int> x(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) x[i] = v[i];
        return in_image_mod(boundary_form_, x, Int(modulus_));
    }

    bool theory_trivial(const std::vector<int>& v) const {
        std::vector<Int> x(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) x[i] = Int(v[i]) * scale_;
        return in_image_mod(boundary_form_, x, big_modulus_);
    }

    std::vector<int> difference(const std::vector<int>& a, const std::vector<int>& b) const {
        std::vector<int> d(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            d[i] = ((a[i] - b[i]) % modulus_ + modulus_) % modulus_;
        return d;
    }

    const DiagonalForm& boundary_form() const { return boundary_form_; }

  private:
    NormCoords coords_;
    int modulus_;
    Int big_modulus_;
    Int scale_;
    DiagonalForm boundary_form_;
};

}  // namespace detail

// One representative per class of n-cocycles that yield distinct theories,
// zero class first. Exhaustive mode walks every normalized value table and is
// gated by the desk budget |G|^n * log2(N) <= 24; linear mode solves dw = 0 as
// an integer linear system and walks the kernel by generators.
inline CocycleClasses cocycle_classes(const FiniteGroup& g, int degree, int modulus,
                                      ClassEnumMode mode = ClassEnumMode::kAuto) {
    if (degree < 1 || degree > 3) throw UnsupportedError("cocycle_classes: degree must be 1..3");
    if (modulus < 2) throw UnsupportedError("cocycle_classes: modulus must be >= 2");

    const double budget =
        std::pow(static_cast<double>(g.order()), degree) * std::log2(static_cast<double>(modulus));
    if (mode == ClassEnumMode::kAuto)
        mode = (budget <= 24.0) ? ClassEnumMode::kExhaustive : ClassEnumMode::kLinear;
    if (mode == ClassEnumMode::kExhaustive && budget > 24.0)
        throw BudgetError(
            "cocycle_classes: exhaustive enumeration budget |G|^n*log2(N) <= 24 exceeded "
            "(got " +
            std::to_string(budget) + "); use linear-system mode");

    NormCoords coords(g, degree);
    detail::TrivialityTester tester(g, degree, modulus);
    CocycleClasses out;

    std::vector<std::vector<int>> reps;  // coordinate vectors of class reps
    Int strict_classes = 0;
    std::vector<std::vector<int>> strict_reps;

    auto try_add = [&](const std::vector<int>& v) {
        bool strict_new = true;
        for (const auto& r : strict_reps)
            if (tester.coboundary_mod_n(tester.difference(v, r))) {
                strict_new = false;
                break;
            }
        if (strict_new) strict_reps.push_back(v);
        for (const auto& r : reps)
            if (tester.theory_trivial(tester.difference(v, r))) return;
        reps.push_back(v);
    };

    if (mode == ClassEnumMode::kExhaustive) {
        std::vector<int> v(coords.dim, 0);
        Int count = 0;
        while (true) {
            Cochain c = coords.to_cochain(v, modulus);
            if (check_cocycle(c).cocycle) {
                ++count;
                try_add(v);
            }
            std::size_t i = coords.dim;
            while (i > 0 && ++v[i - 1] == modulus) v[--i] = 0;
            if (i == 0) break;
        }
        out.cocycle_count = count;
        out.strict_class_count = static_cast<Int>(strict_reps.size());
    } else {
        DiagonalForm cocycle_form = diagonalize(delta_matrix(g, degree));
        auto gens = kernel_generators_mod(cocycle_form, Int(modulus));
        out.cocycle_count = 1;
        for (const auto& [v, order] : gens) out.cocycle_count *= order;

        // |H^n| = |ker| / |im|, with |im| = N^dim(C^{n-1}) / |ker(delta_{n-1})|
        Int lower_kernel = 1;
        for (const auto& [v, order] :
             kernel_generators_mod(tester.boundary_form(), Int(modulus)))
            lower_kernel *= order;
        NormCoords lower(g, degree - 1);
        Int chains = 1;
        for (std::size_t i = 0; i < lower.dim; ++i) chains *= modulus;
        out.strict_class_count = out.cocycle_count * lower_kernel / chains;

        // walk the kernel subgroup class by class
        reps.push_back(std::vector<int>(coords.dim, 0));
        std::size_t frontier = 0;
        while (frontier < reps.size()) {
            std::vector<int> base = reps[frontier++];
            for (const auto& [gen, order] : gens) {
                std::vector<int> v = base;
                for (std::size_t i = 0; i < v.size(); ++i)
                    v[i] = (v[i] + static_cast<int>(gen[i] % modulus)) % modulus;
                bool known = false;
                for (const auto& r : reps)
                    if (tester.theory_trivial(tester.difference(v, r))) {
                        known = true;
                        break;
                    }
                if (!known) reps.push_back(v);
            }
        }
    }

    // zero class first, then lexicographic on the representative tables
    std::vector<int> zero(coords.dim, 0);
    std::sort(reps.begin(), reps.end(), [&](const auto& a, const auto& b) {
        bool az = (a == zero), bz = (b == zero);
        if (az != bz) return az;
        return a < b;
    });
    for (const auto& v : reps) out.reps.push_back(coords.to_cochain(v, modulus));
    return out;
}

}  // namespace dw
