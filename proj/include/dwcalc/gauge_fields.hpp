#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "dwcalc/delta_complex.hpp"
#include "dwcalc/errors.hpp"
#include "dwcalc/finite_group.hpp"
#include "dwcalc/gf2.hpp"
#include "dwcalc/mod2_cohomology.hpp"
#include "dwcalc/presentation.hpp"

namespace dw {

inline constexpr double kHomBudget = 1e7;

// A gauge field is a flat assignment: per presentation generator, or per edge
// of a complex (tree edges gauge-fixed to the identity). Plain index vectors;
// the producing routine fixes the interpretation.
using GaugeField = std::vector<int>;

// All homomorphisms pi_1 -> G as generator assignments, lexicographically
// ordered, concatenated across components. Prefix-pruned DFS: a relator is
// checked as soon as its highest generator has been assigned.
inline std::vector<GaugeField> enumerate_homs(const Presentation& p, const FiniteGroup& g) {
    p.validate();
    double budget = 1.0;
    for (int i = 0; i < p.total_generators(); ++i) {
        budget *= g.order();
        if (budget > kHomBudget)
            throw BudgetError("enumerate_homs: |G|^generators exceeds " +
                              std::to_string(static_cast<long long>(kHomBudget)));
    }

    std::vector<std::vector<GaugeField>> per_component;
    for (const auto& comp : p.components) {
        std::vector<std::vector<const Word*>> check_at(comp.generators + 1);
        for (const Word& r : comp.relators) {
            int top = 0;
            for (int x : r) top = std::max(top, std::abs(x));
            check_at[top].push_back(&r);
        }
        std::vector<GaugeField> homs;
        GaugeField img(comp.generators, 0);
        std::function<void(int)> dfs = [&](int depth) {
            for (const Word* r : check_at[depth])
                if (eval_word(g, *r, img) != g.identity()) return;
            if (depth == comp.generators) {
                homs.push_back(img);
                return;
            }
            for (int x = 0; x < g.order(); ++x) {
                img[depth] = x;
                dfs(depth + 1);
            }
            img[depth] = 0;
        };
        dfs(0);
        per_component.push_back(std::move(homs));
    }

    // cartesian product, lexicographic overall
    std::vector<GaugeField> out{GaugeField{}};
    for (const auto& homs : per_component) {
        std::vector<GaugeField> next;
        next.reserve(out.size() * homs.size());
        for (const auto& prefix : out)
            for (const auto& h : homs) {
                GaugeField f = prefix;
                f.insert(f.end(), h.begin(), h.end());
                next.push_back(std::move(f));
            }
        out = std::move(next);
    }
    return out;
}

// Conjugation orbit of a field with the given per-component widths; each
// component is conjugated independently.
struct FieldOrbit {
    GaugeField representative;
    long orbit_size = 0;
    long stabilizer_order = 0;  // product of component centralizer orders
};

inline long field_stabilizer_order(const FiniteGroup& g, const GaugeField& f,
                                   const std::vector<int>& widths) {
    long stab = 1;
    std::size_t at = 0;
    for (int w : widths) {
        std::vector<int> image(f.begin() + at, f.begin() + at + w);
        stab *= centralizer_order(g, image);
        at += w;
    }
    return stab;
}

inline std::vector<FieldOrbit> orbit_decomposition(const std::vector<GaugeField>& fields,
                                                   const FiniteGroup& g,
                                                   const std::vector<int>& widths) {
    std::map<GaugeField, std::size_t> index;
    for (std::size_t i = 0; i < fields.size(); ++i) index[fields[i]] = i;
    std::vector<bool> visited(fields.size(), false);
    std::vector<FieldOrbit> orbits;

    std::function<void(std::size_t, const GaugeField&, std::vector<GaugeField>&)> spin =
        [&](std::size_t comp, const GaugeField& f, std::vector<GaugeField>& members) {
            if (comp == widths.size()) {
                members.push_back(f);
                return;
            }
            std::size_t at = 0;
            for (std::size_t c = 0; c < comp; ++c) at += widths[c];
            for (int c = 0; c < g.order(); ++c) {
                GaugeField h = f;
                for (int i = 0; i < widths[comp]; ++i)
                    h[at + i] = g.conjugate(c, f[at + i]);
                spin(comp + 1, h, members);
            }
        };

    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (visited[i]) continue;
        std::vector<GaugeField> members;
        spin(0, fields[i], members);
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        FieldOrbit orbit;
        orbit.representative = fields[i];  // least unvisited = least member
        orbit.orbit_size = static_cast<long>(members.size());
        orbit.stabilizer_order = field_stabilizer_order(g, fields[i], widths);
        for (const auto& m : members) {
            auto it = index.find(m);
            if (it == index.end())
                throw Error("orbit_decomposition: orbit leaves the field list");
            visited[it->second] = true;
        }
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

// Flat G-colorings of the edges of a connected complex, spanning tree fixed
// to the identity, flatness g01 g12 = g02 on every triangle. Lexicographic in
// the edge-coloring vector. The count equals #Hom(pi_1, G).
inline std::vector<GaugeField> flat_fields_on_complex(const DeltaComplex& k,
                                                      const FiniteGroup& g) {
    if (!k.is_connected())
        throw ValidationError(
            "flat_fields_on_complex: complex is disconnected; enumerate per component");
    std::vector<bool> tree = spanning_tree(k);
    struct Tri {
        int e01, e12, e02;
    };
    std::vector<Tri> tris;
    for (std::size_t s = 0; s < k.count(2); ++s)
        tris.push_back({k.sub_edge(2, static_cast<int>(s), 0, 1),
                        k.sub_edge(2, static_cast<int>(s), 1, 2),
                        k.sub_edge(2, static_cast<int>(s), 0, 2)});

    // -1 = unknown
    std::vector<int> base(k.count(1), -1);
    for (std::size_t e = 0; e < k.count(1); ++e)
        if (tree[e]) base[e] = g.identity();

    auto propagate = [&](std::vector<int>& a) -> bool {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const Tri& t : tris) {
                int x = a[t.e01], y = a[t.e12], z = a[t.e02];
                int known = (x >= 0) + (y >= 0) + (z >= 0);
                if (known < 2) continue;
                if (known == 3) {
                    if (g.mul(x, y) != z) return false;
                    continue;
                }
                if (x < 0)
                    a[t.e01] = g.mul(z, g.inv(y));
                else if (y < 0)
                    a[t.e12] = g.mul(g.inv(x), z);
                else
                    a[t.e02] = g.mul(x, y);
                changed = true;
            }
        }
        return true;
    };

    // budget: count the branch points propagation cannot resolve
    {
        std::vector<int> probe = base;
        for (int& v : probe)
            if (v >= 0) v = 0;
        long branches = 0;
        auto probe_propagate = [&]() {
            bool changed = true;
            while (changed) {
                changed = false;
                for (const Tri& t : tris) {
                    int known = (probe[t.e01] >= 0) + (probe[t.e12] >= 0) + (probe[t.e02] >= 0);
                    if (known == 2) {
                        if (probe[t.e01] < 0) probe[t.e01] = 0;
                        if (probe[t.e12] < 0) probe[t.e12] = 0;
                        if (probe[t.e02] < 0) probe[t.e02] = 0;
                        changed = true;
                    }
                }
            }
        };
        probe_propagate();
        double budget = 1.0;
        for (std::size_t e = 0; e < probe.size(); ++e)
            if (probe[e] < 0) {
                ++branches;
                probe[e] = 0;
                probe_propagate();
                budget *= g.order();
                if (budget > kHomBudget)
                    throw BudgetError("flat_fields_on_complex: enumeration budget exceeded");
            }
        (void)branches;
    }

    std::vector<GaugeField> fields;
    std::function<void(std::vector<int>)> dfs = [&](std::vector<int> a) {
        if (!propagate(a)) return;
        std::size_t branch = a.size();
        for (std::size_t e = 0; e < a.size(); ++e)
            if (a[e] < 0) {
                branch = e;
                break;
            }
        if (branch == a.size()) {
            fields.push_back(std::move(a));
            return;
        }
        for (int x = 0; x < g.order(); ++x) {
            std::vector<int> b = a;
            b[branch] = x;
            dfs(std::move(b));
        }
    };
    dfs(base);
    std::sort(fields.begin(), fields.end());
    return fields;
}

// Read a Z/2 edge coloring as the mod-2 1-cocycle it represents (the
// pullback of the generator of H^1 of the classifying space).
inline CochainMod2 field_class_mod2(const DeltaComplex& k, const FiniteGroup& g,
                                    const GaugeField& field) {
    if (g.order() != 2)
        throw UnsupportedError("field_class_mod2: gauge group must be Z/2");
    if (field.size() != k.count(1))
        throw ValidationError("field_class_mod2: expected an edge coloring");
    CochainMod2 v;
    v.degree = 1;
    v.bits = Gf2Vec(k.count(1));
    for (std::size_t e = 0; e < field.size(); ++e) v.bits.set(e, field[e] == 1);
    return v;
}

}  // namespace dw
