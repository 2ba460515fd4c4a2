#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "dwcalc/algebraic_model.hpp"
#include "dwcalc/cyclotomic.hpp"
#include "dwcalc/delta_complex.hpp"
#include "dwcalc/errors.hpp"
#include "dwcalc/gauge_fields.hpp"
#include "dwcalc/mod2_cohomology.hpp"
#include "dwcalc/presentation.hpp"
#include "dwcalc/theory.hpp"

namespace dw {

// --- closed-manifold partition functions -------------------------------------
//
// Z = sum over gauge fields of phi(action) / |G| per connected component,
// multiplied across components. Equivalently (and tested as) the groupoid
// cardinality sum over conjugation orbits weighted by 1/#stabilizer.

inline Scalar partition_closed(const Theory& t, const DeltaComplex& k) {
    Scalar total = Scalar::from_rational(1);
    const FiniteGroup& g = t.group();
    for (const DeltaComplex& comp : k.components()) {
        Scalar sum = Scalar::from_rational(0);
        for (const GaugeField& f : flat_fields_on_complex(comp, g))
            sum += action_value(t, comp, f).scalar();
        total = total * (sum / Rat(g.order()));
    }
    return total;
}

// Same value through conjugation orbits: sum of phi(action)/#stabilizer.
inline Scalar partition_closed_orbit_route(const Theory& t, const DeltaComplex& k) {
    Scalar total = Scalar::from_rational(1);
    const FiniteGroup& g = t.group();
    for (const DeltaComplex& comp : k.components()) {
        std::vector<GaugeField> fields = flat_fields_on_complex(comp, g);
        std::vector<int> widths{static_cast<int>(comp.count(1))};
        Scalar sum = Scalar::from_rational(0);
        for (const FieldOrbit& orbit : orbit_decomposition(fields, g, widths))
            sum += action_value(t, comp, orbit.representative).scalar() /
                   Rat(orbit.stabilizer_order);
        total = total * sum;
    }
    return total;
}

inline Scalar partition_closed(const Theory& t, const Presentation& p) {
    if (t.kind() != Theory::Kind::kUntwisted)
        throw UnsupportedError("partition_closed: presentations carry no action data; "
                               "only the untwisted theory applies");
    const FiniteGroup& g = t.group();
    Scalar total = Scalar::from_rational(1);
    for (const PresComponent& comp : p.components) {
        Presentation single{{comp}};
        Rat count(static_cast<long>(enumerate_homs(single, g).size()));
        total = total * Scalar::from_rational(count / Rat(g.order()));
    }
    return total;
}

inline Scalar partition_closed(const Theory& t, const AlgebraicModel& m) {
    if (t.kind() == Theory::Kind::kCocycle)
        throw UnsupportedError("partition_closed: cocycle state sums need a complex");
    if (t.kind() == Theory::Kind::kUntwisted) return partition_closed(t, m.pi1);
    const FiniteGroup& g = t.group();
    Scalar sum = Scalar::from_rational(0);
    for (const GaugeField& f : enumerate_homs(m.pi1, g))
        sum += action_value(t, m, f).scalar();
    return sum / Rat(g.order());
}

// --- the half-product closed form --------------------------------------------
//
// Z_{w1^n}(X) = 1/2 * prod_k (1 + phi(<[X], v_k^n>)) over an H^1 basis,
// valid when beta_1 = 1 or n is a power of two; refused otherwise.

namespace detail {
inline Scalar half_product_from_taus(const std::vector<int>& taus, int n) {
    const bool power_of_two = n >= 1 && (n & (n - 1)) == 0;
    if (!(taus.size() == 1 || power_of_two))
        throw UnsupportedError(
            "partition_product_formula: needs beta_1 = 1 or a power-of-two exponent");
    Scalar prod = Scalar::from_rational(Rat(1, 2));
    for (int tau : taus) {
        Scalar factor = Scalar::from_rational(1) + Scalar::root_of_unity(2, tau);
        prod = prod * factor;
    }
    return prod;
}
}  // namespace detail

inline Scalar partition_product_formula(const DeltaComplex& k, int n) {
    if (!k.is_connected() || !k.is_closed_pseudomanifold())
        throw ValidationError("partition_product_formula: need a closed connected complex");
    if (n != k.dimension())
        throw ValidationError("partition_product_formula: exponent must match dimension");
    Mod2Cohomology h = mod2_cohomology(k);
    std::vector<int> taus;
    for (const Gf2Vec& v : h.h1_basis)
        taus.push_back(cup_power_pairing(k, CochainMod2{1, v}));
    if (h.h1_basis.empty()) {
        // beta_1 = 0: empty product, allowed exactly when n is a power of two
        const bool power_of_two = n >= 1 && (n & (n - 1)) == 0;
        if (!power_of_two)
            throw UnsupportedError(
                "partition_product_formula: needs beta_1 = 1 or a power-of-two exponent");
        return Scalar::from_rational(Rat(1, 2));
    }
    return detail::half_product_from_taus(taus, n);
}

inline Scalar partition_product_formula(const AlgebraicModel& m, int n) {
    if (n != m.dimension)
        throw ValidationError("partition_product_formula: exponent must match dimension");
    std::vector<int> taus;
    for (int i = 0; i < m.generator_count; ++i) {
        std::vector<std::uint8_t> v(m.generator_count, 0);
        v[i] = 1;
        taus.push_back(cup_power_pairing(m, v));
    }
    if (taus.empty()) {
        const bool power_of_two = n >= 1 && (n & (n - 1)) == 0;
        if (!power_of_two)
            throw UnsupportedError(
                "partition_product_formula: needs beta_1 = 1 or a power-of-two exponent");
        return Scalar::from_rational(Rat(1, 2));
    }
    return detail::half_product_from_taus(taus, n);
}

// --- state spaces -------------------------------------------------------------

// Basis of the space a theory assigns to a closed (n-1)-manifold given by a
// presentation: conjugation orbits of gauge fields. Untwisted theories keep
// every orbit; a degree-2 twisted theory on circles keeps the orbits whose
// transgressed character is trivial on the centralizer.
struct StateSpace {
    std::vector<FieldOrbit> basis;
    std::vector<bool> survives;
    long dimension = 0;
};

namespace detail {

inline GroupCocycle product_cocycle_z2(const FiniteGroup& z2) {
    Cochain c = Cochain::zero(z2, 2, 2);
    c.set({1, 1}, 1);
    return GroupCocycle(std::move(c));
}

// omega(g,h) - omega(h, h^-1 g h) as a function of h, restricted to the
// centralizer of g; trivial iff it vanishes there.
inline bool transgression_trivial(const GroupCocycle& w, int g) {
    const FiniteGroup& grp = w.group();
    for (int h = 0; h < grp.order(); ++h) {
        if (grp.mul(g, h) != grp.mul(h, g)) continue;
        int conj = grp.mul(grp.inv(h), grp.mul(g, h));
        int tau = w({g, h}) - w({h, conj});
        if (((tau % w.modulus()) + w.modulus()) % w.modulus() != 0) return false;
    }
    return true;
}

}  // namespace detail

inline StateSpace state_space(const Theory& t, const Presentation& y) {
    const FiniteGroup& g = t.group();
    std::vector<int> widths;
    for (const auto& c : y.components) widths.push_back(c.generators);
    StateSpace out;
    std::vector<GaugeField> fields = enumerate_homs(y, g);
    out.basis = orbit_decomposition(fields, g, widths);

    if (t.kind() == Theory::Kind::kUntwisted) {
        out.survives.assign(out.basis.size(), true);
        out.dimension = static_cast<long>(out.basis.size());
        return out;
    }

    // twisted: degree-2 data on disjoint circles only
    for (const auto& c : y.components)
        if (c.generators != 1 || !c.relators.empty())
            throw UnsupportedError(
                "state_space: twisted state spaces are supported for disjoint circles only");
    GroupCocycle omega = (t.kind() == Theory::Kind::kW1Power)
                             ? detail::product_cocycle_z2(g)
                             : t.cocycle();
    if (omega.degree() != 2)
        throw UnsupportedError("state_space: twisted circles need a degree-2 cocycle");
    if (t.kind() == Theory::Kind::kW1Power && t.power() != 2)
        throw UnsupportedError("state_space: w1-power circles arise from 2d theories only");

    out.dimension = 0;
    for (const FieldOrbit& orbit : out.basis) {
        bool ok = true;
        for (int entry : orbit.representative)
            ok &= detail::transgression_trivial(omega, entry);
        out.survives.push_back(ok);
        if (ok) ++out.dimension;
    }
    return out;
}

// dim as a partition function: untwisted theories compute Z(Y x S^1) by
// adjoining a central circle generator; 2d twisted circles use the torus
// state sum. Must agree with state_space(...).dimension.
inline Scalar dim_via_torus(const Theory& t, const Presentation& y) {
    if (t.kind() == Theory::Kind::kUntwisted)
        return partition_closed(t, y.times_circle());
    if (y.components.size() != 1 || y.components[0].generators != 1 ||
        !y.components[0].relators.empty())
        throw UnsupportedError("dim_via_torus: twisted route needs a single circle");
    return partition_closed(t, DeltaComplex::torus());
}

// --- bordism linear maps -------------------------------------------------------

// A bordism at the fundamental-group level: presentations of both boundaries
// and of the total space, with generator images. attach0/attach1 name the
// component of the total space each boundary component lands in (derived from
// the words when possible).
struct Bordism {
    Presentation y0, y1, x;
    std::vector<Word> i0, i1;     // one word per global boundary generator
    std::vector<int> attach0, attach1;  // per boundary component

    void validate() const {
        y0.validate();
        y1.validate();
        x.validate();
        if (static_cast<int>(i0.size()) != y0.total_generators() ||
            static_cast<int>(i1.size()) != y1.total_generators())
            throw ValidationError("bordism: need one image word per boundary generator");
        for (const Word& w : i0)
            for (int letter : w)
                if (letter == 0 || std::abs(letter) > x.total_generators())
                    throw ValidationError("bordism: image word letter out of range");
        for (const Word& w : i1)
            for (int letter : w)
                if (letter == 0 || std::abs(letter) > x.total_generators())
                    throw ValidationError("bordism: image word letter out of range");
        if (attach0.size() != y0.components.size() || attach1.size() != y1.components.size())
            throw ValidationError("bordism: attachment data incomplete");
        for (int a : attach0)
            if (a < 0 || a >= static_cast<int>(x.components.size()))
                throw ValidationError("bordism: attachment out of range");
        for (int a : attach1)
            if (a < 0 || a >= static_cast<int>(x.components.size()))
                throw ValidationError("bordism: attachment out of range");
    }

    static Bordism cylinder(const Presentation& y) {
        Bordism b;
        b.y0 = b.y1 = b.x = y;
        int gens = y.total_generators();
        for (int i = 1; i <= gens; ++i) {
            b.i0.push_back({i});
            b.i1.push_back({i});
        }
        for (std::size_t c = 0; c < y.components.size(); ++c) {
            b.attach0.push_back(static_cast<int>(c));
            b.attach1.push_back(static_cast<int>(c));
        }
        return b;
    }

    // disk: empty -> circle
    static Bordism disk_to_circle() {
        Bordism b;
        b.y0 = Presentation::empty();
        b.y1 = Presentation::circle();
        b.x = Presentation::trivial();
        b.i1 = {Word{}};
        b.attach1 = {0};
        return b;
    }

    // disk: circle -> empty
    static Bordism circle_to_disk() {
        Bordism b;
        b.y0 = Presentation::circle();
        b.y1 = Presentation::empty();
        b.x = Presentation::trivial();
        b.i0 = {Word{}};
        b.attach0 = {0};
        return b;
    }

    // pair of pants: two circles -> one circle, pi_1(X) free on a, b
    static Bordism pants() {
        Bordism b;
        b.y0 = Presentation::disjoint({Presentation::circle(), Presentation::circle()});
        b.y1 = Presentation::circle();
        b.x = Presentation::free_group(2);
        b.i0 = {Word{1}, Word{2}};
        b.i1 = {Word{1, 2}};
        b.attach0 = {0, 0};
        b.attach1 = {0};
        return b;
    }

    // reversed pair of pants: one circle -> two circles
    static Bordism copants() {
        Bordism b;
        b.y0 = Presentation::circle();
        b.y1 = Presentation::disjoint({Presentation::circle(), Presentation::circle()});
        b.x = Presentation::free_group(2);
        b.i0 = {Word{1, 2}};
        b.i1 = {Word{1}, Word{2}};
        b.attach0 = {0};
        b.attach1 = {0, 0};
        return b;
    }
};

struct BordismMatrix {
    StateSpace domain, codomain;
    std::vector<std::vector<Rat>> entries;  // [codomain index][domain index]
};

namespace detail {

inline std::vector<int> component_widths(const Presentation& p) {
    std::vector<int> w;
    for (const auto& c : p.components) w.push_back(c.generators);
    return w;
}

inline bool conjugate_fields(const FiniteGroup& g, const GaugeField& a, const GaugeField& b,
                             const std::vector<int>& widths) {
    std::size_t at = 0;
    for (int w : widths) {
        bool found = false;
        for (int c = 0; c < g.order() && !found; ++c) {
            bool all = true;
            for (int i = 0; i < w && all; ++i) all &= (g.conjugate(c, a[at + i]) == b[at + i]);
            found = all;
        }
        if (!found) return false;
        at += w;
    }
    return true;
}

inline std::size_t class_index(const std::vector<FieldOrbit>& basis, const GaugeField& f,
                               const FiniteGroup& g, const std::vector<int>& widths) {
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (conjugate_fields(g, basis[i].representative, f, widths)) return i;
    throw Error("class_index: field matches no basis class");
}

inline GaugeField restrict_field(const FiniteGroup& g, const std::vector<Word>& words,
                                 const GaugeField& total) {
    GaugeField out;
    out.reserve(words.size());
    for (const Word& w : words) out.push_back(eval_word(g, w, total));
    return out;
}

inline void check_relators_land(const FiniteGroup& g, const Presentation& y,
                                const GaugeField& restricted) {
    std::size_t at = 0;
    for (const auto& comp : y.components) {
        std::vector<int> img(restricted.begin() + at, restricted.begin() + at + comp.generators);
        for (const Word& r : comp.relators)
            if (eval_word(g, r, img) != g.identity())
                throw ValidationError(
                    "bordism: generator images do not kill a boundary relator");
        at += comp.generators;
    }
}

}  // namespace detail

// Finite path integral matrix in the orbit bases:
//   M[b][a] = stab(a) * sum over X-field orbits restricting to (a, b) of
//             phi(S(sigma)) / stab(sigma).
// Untwisted only; the weights are exactly the ones that make the cylinder the
// identity and composition the matrix product (both are test obligations).
inline BordismMatrix bordism_matrix(const Theory& t, const Bordism& b) {
    if (t.kind() != Theory::Kind::kUntwisted)
        throw UnsupportedError("bordism_matrix: untwisted theories only");
    b.validate();
    const FiniteGroup& g = t.group();

    BordismMatrix m;
    m.domain = state_space(t, b.y0);
    m.codomain = state_space(t, b.y1);
    m.entries.assign(m.codomain.basis.size(),
                     std::vector<Rat>(m.domain.basis.size(), Rat(0)));

    std::vector<int> widths0 = detail::component_widths(b.y0);
    std::vector<int> widths1 = detail::component_widths(b.y1);
    std::vector<int> widthsX = detail::component_widths(b.x);

    std::vector<GaugeField> fieldsX = enumerate_homs(b.x, g);
    for (const GaugeField& f : fieldsX) {
        detail::check_relators_land(g, b.y0, detail::restrict_field(g, b.i0, f));
        detail::check_relators_land(g, b.y1, detail::restrict_field(g, b.i1, f));
    }
    for (const FieldOrbit& orbit : orbit_decomposition(fieldsX, g, widthsX)) {
        GaugeField r0 = detail::restrict_field(g, b.i0, orbit.representative);
        GaugeField r1 = detail::restrict_field(g, b.i1, orbit.representative);
        std::size_t a = detail::class_index(m.domain.basis, r0, g, widths0);
        std::size_t bb = detail::class_index(m.codomain.basis, r1, g, widths1);
        m.entries[bb][a] += Rat(1, orbit.stabilizer_order);
    }
    for (std::size_t a = 0; a < m.domain.basis.size(); ++a)
        for (auto& row : m.entries) row[a] *= Rat(m.domain.basis[a].stabilizer_order);
    return m;
}

// --- composition and disjoint union at the presentation level ------------------

namespace detail {

inline Word shift_word(const Word& w, const std::vector<int>& gen_map) {
    Word out;
    out.reserve(w.size());
    for (int letter : w) {
        int idx = std::abs(letter) - 1;
        out.push_back(letter > 0 ? gen_map[idx] : -gen_map[idx]);
    }
    return out;
}

inline Word inverse_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

inline bool same_presentation(const Presentation& a, const Presentation& b) {
    if (a.components.size() != b.components.size()) return false;
    for (std::size_t i = 0; i < a.components.size(); ++i) {
        if (a.components[i].generators != b.components[i].generators) return false;
        if (a.components[i].relators != b.components[i].relators) return false;
    }
    return true;
}

}  // namespace detail

// Glue second after first along the middle boundary. The fundamental group of
// the composite is assembled as a graph of groups: boundary circles whose
// gluing merges already-connected pieces contribute a stable letter t with
// t^-1 i1(g) t = i0'(g); the others amalgamate directly.
inline Bordism compose_bordism(const Bordism& second, const Bordism& first) {
    first.validate();
    second.validate();
    if (!detail::same_presentation(first.y1, second.y0))
        throw ValidationError("compose_bordism: middle boundaries differ");

    const int nb = static_cast<int>(first.x.components.size());
    const int nc = static_cast<int>(second.x.components.size());

    // union-find over total-space components of both bordisms
    std::vector<int> parent(nb + nc);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    const std::size_t n_middle = first.y1.components.size();
    std::vector<bool> is_tree(n_middle, false);
    for (std::size_t c = 0; c < n_middle; ++c) {
        int u = find(first.attach1[c]), v = find(nb + second.attach0[c]);
        if (u != v) {
            parent[u] = v;
            is_tree[c] = true;
        }
    }

    // group merged parts, ordered by smallest member vertex
    std::vector<std::vector<int>> parts;
    std::vector<int> part_of(nb + nc, -1);
    for (int v = 0; v < nb + nc; ++v) {
        int r = find(v);
        if (part_of[r] == -1) {
            part_of[r] = static_cast<int>(parts.size());
            parts.push_back({});
        }
        part_of[v] = part_of[r];
        parts[part_of[v]].push_back(v);
    }

    // global generator maps into the composite presentation
    auto component_gens = [](const Presentation& p, int c) { return p.components[c].generators; };
    std::vector<int> first_gen_base(nb, 0), second_gen_base(nc, 0);
    {
        int at = 0;
        for (int c = 0; c < nb; ++c) {
            first_gen_base[c] = at;
            at += component_gens(first.x, c);
        }
        at = 0;
        for (int c = 0; c < nc; ++c) {
            second_gen_base[c] = at;
            at += component_gens(second.x, c);
        }
    }

    Presentation comp;
    comp.components.resize(parts.size());
    std::vector<int> map_first(first.x.total_generators(), 0);
    std::vector<int> map_second(second.x.total_generators(), 0);
    std::vector<int> stable_letter(n_middle, 0);  // global letters of HNN generators

    // lay out generators: members in order, then stable letters per part
    std::vector<int> part_gen_count(parts.size(), 0);
    for (std::size_t pi = 0; pi < parts.size(); ++pi)
        for (int v : parts[pi])
            part_gen_count[pi] += (v < nb) ? component_gens(first.x, v)
                                           : component_gens(second.x, v - nb);
    for (std::size_t c = 0; c < n_middle; ++c)
        if (!is_tree[c]) ++part_gen_count[part_of[find(first.attach1[c])]];

    std::vector<int> part_base(parts.size(), 0);
    {
        int at = 0;
        for (std::size_t pi = 0; pi < parts.size(); ++pi) {
            part_base[pi] = at;
            comp.components[pi].generators = part_gen_count[pi];
            at += part_gen_count[pi];
        }
    }
    {
        std::vector<int> cursor = part_base;
        for (std::size_t pi = 0; pi < parts.size(); ++pi)
            for (int v : parts[pi]) {
                int gens = (v < nb) ? component_gens(first.x, v)
                                    : component_gens(second.x, v - nb);
                for (int i = 0; i < gens; ++i) {
                    int global = cursor[pi] + i + 1;
                    if (v < nb)
                        map_first[first_gen_base[v] + i] = global;
                    else
                        map_second[second_gen_base[v - nb] + i] = global;
                }
                cursor[pi] += gens;
            }
        for (std::size_t c = 0; c < n_middle; ++c)
            if (!is_tree[c]) {
                int pi = part_of[find(first.attach1[c])];
                stable_letter[c] = ++cursor[pi];
            }
    }

    // translate relators into part-local words (letters are global; relators
    // live in the right component because generators were laid out per part)
    auto add_relator = [&](int pi, Word w) {
        // letters arrive globally indexed; make them local to the component
        for (int& letter : w) {
            int idx = std::abs(letter) - part_base[pi];
            letter = (letter > 0) ? idx : -idx;
        }
        comp.components[pi].relators.push_back(std::move(w));
    };
    for (int v = 0; v < nb; ++v)
        for (const Word& r : first.x.components[v].relators) {
            Word local(r);
            for (int& letter : local) {
                int g = first_gen_base[v] + std::abs(letter) - 1;
                letter = (letter > 0) ? map_first[g] : -map_first[g];
            }
            add_relator(part_of[v], std::move(local));
        }
    for (int v = 0; v < nc; ++v)
        for (const Word& r : second.x.components[v].relators) {
            Word local(r);
            for (int& letter : local) {
                int g = second_gen_base[v] + std::abs(letter) - 1;
                letter = (letter > 0) ? map_second[g] : -map_second[g];
            }
            add_relator(part_of[nb + v], std::move(local));
        }

    // gluing relators along each middle component
    {
        int gen_at = 0;
        for (std::size_t c = 0; c < n_middle; ++c) {
            int pi = part_of[find(first.attach1[c])];
            int gens = first.y1.components[c].generators;
            for (int i = 0; i < gens; ++i) {
                Word w1 = detail::shift_word(first.i1[gen_at + i], map_first);
                Word w0 = detail::shift_word(second.i0[gen_at + i], map_second);
                Word rel;
                if (!is_tree[c]) {
                    rel.push_back(-stable_letter[c]);
                    rel.insert(rel.end(), w1.begin(), w1.end());
                    rel.push_back(stable_letter[c]);
                } else {
                    rel = w1;
                }
                Word w0_inv = detail::inverse_word(w0);
                rel.insert(rel.end(), w0_inv.begin(), w0_inv.end());
                add_relator(pi, std::move(rel));
            }
            gen_at += gens;
        }
    }

    Bordism out;
    out.y0 = first.y0;
    out.y1 = second.y1;
    out.x = comp;
    for (const Word& w : first.i0) out.i0.push_back(detail::shift_word(w, map_first));
    for (const Word& w : second.i1) out.i1.push_back(detail::shift_word(w, map_second));
    for (std::size_t c = 0; c < first.y0.components.size(); ++c)
        out.attach0.push_back(part_of[find(first.attach0[c])]);
    for (std::size_t c = 0; c < second.y1.components.size(); ++c)
        out.attach1.push_back(part_of[find(nb + second.attach1[c])]);
    out.validate();
    return out;
}

// Disjoint union of bordisms; bases order domain-major, matching the
// Kronecker product of the matrices.
inline Bordism bordism_tensor(const Bordism& a, const Bordism& b) {
    a.validate();
    b.validate();
    Bordism out;
    out.y0 = Presentation::disjoint({a.y0, b.y0});
    out.y1 = Presentation::disjoint({a.y1, b.y1});
    out.x = Presentation::disjoint({a.x, b.x});
    const int shift = a.x.total_generators();
    std::vector<int> shift_map(b.x.total_generators());
    std::iota(shift_map.begin(), shift_map.end(), shift + 1);
    out.i0 = a.i0;
    for (const Word& w : b.i0) out.i0.push_back(detail::shift_word(w, shift_map));
    out.i1 = a.i1;
    for (const Word& w : b.i1) out.i1.push_back(detail::shift_word(w, shift_map));
    out.attach0 = a.attach0;
    out.attach1 = a.attach1;
    const int comp_shift = static_cast<int>(a.x.components.size());
    for (int c : b.attach0) out.attach0.push_back(c + comp_shift);
    for (int c : b.attach1) out.attach1.push_back(c + comp_shift);
    return out;
}

// --- small exact-matrix helpers -------------------------------------------------

using RatMatrix = std::vector<std::vector<Rat>>;

inline RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    if (a.empty() || b.empty()) return {};
    RatMatrix out(a.size(), std::vector<Rat>(b[0].size(), Rat(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

inline RatMatrix mat_kron(const RatMatrix& a, const RatMatrix& b) {
    if (a.empty() || b.empty()) return {};
    std::size_t ar = a.size(), ac = a[0].size(), br = b.size(), bc = b[0].size();
    RatMatrix out(ar * br, std::vector<Rat>(ac * bc, Rat(0)));
    for (std::size_t i = 0; i < ar; ++i)
        for (std::size_t j = 0; j < ac; ++j)
            for (std::size_t k = 0; k < br; ++k)
                for (std::size_t l = 0; l < bc; ++l)
                    out[i * br + k][j * bc + l] = a[i][j] * b[k][l];
    return out;
}

inline Rat mat_trace(const RatMatrix& a) {
    Rat t(0);
    for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

}  // namespace dw
