#pragma once

#include <optional>
#include <vector>

#include "dwcalc/algebraic_model.hpp"
#include "dwcalc/cochain.hpp"
#include "dwcalc/cyclotomic.hpp"
#include "dwcalc/delta_complex.hpp"
#include "dwcalc/errors.hpp"
#include "dwcalc/finite_group.hpp"
#include "dwcalc/gauge_fields.hpp"
#include "dwcalc/mod2_cohomology.hpp"

namespace dw {

// k -> zeta_N^k, the embedding of the additive coefficient group into the
// nonzero scalars.
struct CoefficientEmbedding {
    int modulus = 1;
    Scalar operator()(long long exponent) const {
        return Scalar::root_of_unity(static_cast<unsigned long>(modulus), exponent);
    }
};

// The data a partition function actually consumes: which action to evaluate,
// for which gauge group, with which coefficient embedding.
//   untwisted      - action identically zero, any group
//   w1_power(n)    - Z/2 gauge theory with the n-th cup power of the
//                    orientation class, in dimension n
//   cocycle(omega) - state-sum theory for a degree-n group cocycle, n in {2,3}
class Theory {
  public:
    enum class Kind { kUntwisted, kW1Power, kCocycle };

    static Theory untwisted(const FiniteGroup& g) {
        Theory t;
        t.kind_ = Kind::kUntwisted;
        t.group_ = &g;
        return t;
    }

    static Theory w1_power(const FiniteGroup& z2, int power) {
        if (z2.order() != 2) throw ValidationError("w1_power: gauge group must be Z/2");
        if (power < 1) throw ValidationError("w1_power: power must be >= 1");
        Theory t;
        t.kind_ = Kind::kW1Power;
        t.group_ = &z2;
        t.power_ = power;
        return t;
    }

    static Theory with_cocycle(GroupCocycle omega) {
        Theory t;
        t.kind_ = Kind::kCocycle;
        t.group_ = &omega.group();
        t.power_ = omega.degree();
        t.cocycle_ = std::move(omega);
        return t;
    }

    Kind kind() const { return kind_; }
    const FiniteGroup& group() const { return *group_; }
    int power() const { return power_; }
    const GroupCocycle& cocycle() const { return *cocycle_; }

    int modulus() const {
        switch (kind_) {
            case Kind::kUntwisted: return 1;
            case Kind::kW1Power: return 2;
            case Kind::kCocycle: return cocycle_->modulus();
        }
        return 1;
    }
    CoefficientEmbedding phi() const { return CoefficientEmbedding{modulus()}; }

  private:
    Kind kind_ = Kind::kUntwisted;
    const FiniteGroup* group_ = nullptr;
    int power_ = 0;
    std::optional<GroupCocycle> cocycle_;
};

// Action exponent in Z/N together with its embedded scalar.
struct ActionValue {
    int exponent = 0;
    int modulus = 1;
    Scalar scalar() const {
        return Scalar::root_of_unity(static_cast<unsigned long>(modulus), exponent);
    }
};

// Topological action of a gauge field on a closed complex.
//  - untwisted: zero.
//  - w1_power(n): the cup power pairing of the field's mod-2 class.
//  - cocycle(omega): state sum of omega over top simplices read through the
//    edge holonomies in vertex order; for modulus 2 the simplex signs are
//    immaterial, for larger moduli the complex must be orientable and the
//    propagated orientation supplies them.
inline ActionValue action_value(const Theory& t, const DeltaComplex& k,
                                const GaugeField& field) {
    if (field.size() != k.count(1))
        throw ValidationError("action_value: field is not an edge coloring of the complex");
    switch (t.kind()) {
        case Theory::Kind::kUntwisted:
            return {0, 1};
        case Theory::Kind::kW1Power: {
            if (t.power() != k.dimension())
                throw ValidationError("action_value: cup power must match the dimension");
            CochainMod2 v = field_class_mod2(k, t.group(), field);
            return {cup_power_pairing(k, v), 2};
        }
        case Theory::Kind::kCocycle: {
            const GroupCocycle& w = t.cocycle();
            if (w.degree() != k.dimension())
                throw ValidationError("action_value: cocycle degree must match the dimension");
            if (&w.group() != &t.group())
                throw ValidationError("action_value: cocycle group mismatch");
            const int n = k.dimension();
            const int mod = w.modulus();
            if (mod > 2 && !k.is_orientable())
                throw UnsupportedError(
                    "action_value: modulus > 2 needs an orientable complex for signs");
            long long acc = 0;
            std::vector<int> args(n);
            for (std::size_t s = 0; s < k.count(n); ++s) {
                for (int i = 1; i <= n; ++i)
                    args[i - 1] = field[k.sub_edge(n, static_cast<int>(s), i - 1, i)];
                int sign = (mod > 2) ? k.orientation()[s] : 1;
                acc += sign * w(args);
            }
            int e = static_cast<int>(((acc % mod) + mod) % mod);
            return {e, mod};
        }
    }
    throw Error("unreachable");
}

// Action on an algebraic model; only the w1-power theories make sense here
// (a state sum needs simplices). The field, a homomorphism assignment on the
// model's pi_1 generators, is converted to its H^1 class first.
inline ActionValue action_value(const Theory& t, const AlgebraicModel& m,
                                const GaugeField& field) {
    switch (t.kind()) {
        case Theory::Kind::kUntwisted:
            return {0, 1};
        case Theory::Kind::kW1Power: {
            if (t.power() != m.dimension)
                throw ValidationError("action_value: cup power must match the dimension");
            if (static_cast<int>(field.size()) != m.pi1.total_generators())
                throw ValidationError("action_value: field width mismatch");
            std::vector<std::uint8_t> v(m.generator_count, 0);
            for (std::size_t i = 0; i < field.size(); ++i)
                if (field[i] % 2)
                    for (int j = 0; j < m.generator_count; ++j) v[j] ^= m.gen_to_h1[i][j];
            return {cup_power_pairing(m, v), 2};
        }
        case Theory::Kind::kCocycle:
            throw UnsupportedError("action_value: cocycle state sums need a complex");
    }
    throw Error("unreachable");
}

// Replace omega by omega * d(eta); closed-manifold partition functions must
// not change (tested, not assumed).
inline Theory coboundary_shift(const Theory& t, const Cochain& eta) {
    if (t.kind() != Theory::Kind::kCocycle)
        throw UnsupportedError("coboundary_shift: theory has no cocycle");
    if (eta.group != &t.group() || eta.degree != t.cocycle().degree() - 1 ||
        eta.modulus != t.cocycle().modulus())
        throw ValidationError("coboundary_shift: eta has the wrong shape");
    if (!eta.is_normalized())
        throw ValidationError("coboundary_shift: eta must be normalized");
    return Theory::with_cocycle(GroupCocycle(multiply(t.cocycle().table(), coboundary(eta))));
}

}  // namespace dw
