#pragma once

#include <string>
#include <vector>

#include "dwcalc/delta_complex.hpp"
#include "dwcalc/errors.hpp"
#include "dwcalc/finite_group.hpp"

namespace dw {

// Word in free generators: letter +g means generator g-1, -g its inverse.
using Word = std::vector<int>;

inline Word parse_word(const std::string& s) {
    Word w;
    for (char c : s) {
        if (c >= 'a' && c <= 'z')
            w.push_back(c - 'a' + 1);
        else if (c >= 'A' && c <= 'Z')
            w.push_back(-(c - 'A' + 1));
        else if (c == ' ' || c == '.')
            continue;
        else
            throw ValidationError(std::string("word letter out of range: ") + c);
    }
    return w;
}

inline std::string format_word(const Word& w) {
    std::string s;
    for (int x : w) s += static_cast<char>(x > 0 ? 'a' + x - 1 : 'A' - x - 1);
    return s.empty() ? "." : s;
}

inline int eval_word(const FiniteGroup& g, const Word& w, const std::vector<int>& images) {
    int acc = g.identity();
    for (int x : w)
        acc = g.mul(acc, x > 0 ? images[x - 1] : g.inv(images[-x - 1]));
    return acc;
}

// One connected piece: generator count plus relator words.
struct PresComponent {
    int generators = 0;
    std::vector<Word> relators;

    void validate() const {
        if (generators < 0 || generators > 26)
            throw ValidationError("component generator count out of range");
        for (const Word& r : relators)
            for (int x : r)
                if (x == 0 || std::abs(x) > generators)
                    throw ValidationError("relator references a missing generator");
    }
};

// Fundamental group data of a possibly disconnected closed manifold; the
// empty manifold is the presentation with no components.
struct Presentation {
    std::vector<PresComponent> components;

    int total_generators() const {
        int n = 0;
        for (const auto& c : components) n += c.generators;
        return n;
    }
    void validate() const {
        for (const auto& c : components) c.validate();
    }

    static Presentation empty() { return {}; }
    static Presentation free_group(int n) { return {{PresComponent{n, {}}}}; }
    static Presentation trivial() { return free_group(0); }
    static Presentation circle() { return free_group(1); }

    static Presentation surface(int genus) {
        if (genus == 0) return trivial();
        Word rel;
        for (int k = 0; k < genus; ++k) {
            int a = 2 * k + 1, b = 2 * k + 2;
            rel.insert(rel.end(), {a, b, -a, -b});
        }
        return {{PresComponent{2 * genus, {rel}}}};
    }

    static Presentation klein_bottle() {
        return {{PresComponent{2, {parse_word("abaB")}}}};
    }

    static Presentation projective_plane() {
        return {{PresComponent{1, {parse_word("aa")}}}};
    }

    static Presentation cyclic(int order) {
        Word rel(order, 1);
        return {{PresComponent{1, {rel}}}};
    }

    static Presentation disjoint(const std::vector<Presentation>& parts) {
        Presentation p;
        for (const auto& q : parts)
            p.components.insert(p.components.end(), q.components.begin(), q.components.end());
        return p;
    }

    // pi_1(Y x S^1) componentwise: adjoin one central generator.
    Presentation times_circle() const {
        Presentation out;
        for (const auto& c : components) {
            PresComponent pc;
            pc.generators = c.generators + 1;
            pc.relators = c.relators;
            int z = c.generators + 1;
            for (int g = 1; g <= c.generators; ++g)
                pc.relators.push_back({g, z, -g, -z});
            out.components.push_back(std::move(pc));
        }
        if (out.components.empty()) out.components.push_back(PresComponent{1, {}});
        return out;
    }

    static Presentation builtin(const std::string& name) {
        if (name == "empty") return empty();
        if (name == "point" || name == "trivial") return trivial();
        if (name == "circle") return circle();
        if (name == "sphere2" || name == "sigma0") return trivial();
        if (name == "torus" || name == "torus_alt" || name == "sigma1") return surface(1);
        if (name == "sigma2") return surface(2);
        if (name == "sigma3") return surface(3);
        if (name == "klein") return klein_bottle();
        if (name == "rp2") return projective_plane();
        throw ValidationError("unknown builtin presentation: " + name);
    }
};

// Edge-path presentation: spanning-tree edges die, the remaining edges
// generate, and every triangle imposes g01 g12 = g02.
inline std::vector<bool> spanning_tree(const DeltaComplex& k) {
    std::vector<bool> in_tree(k.count(1), false);
    std::vector<bool> seen(k.count(0), false);
    seen[0] = true;
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t e = 0; e < k.count(1); ++e) {
            int t = k.edge_tail(static_cast<int>(e)), h = k.edge_head(static_cast<int>(e));
            if (seen[t] == seen[h]) continue;
            in_tree[e] = true;
            seen[t] = seen[h] = true;
            grew = true;
        }
    }
    for (bool s : seen)
        if (!s) throw ValidationError("spanning_tree: complex is not connected");
    return in_tree;
}

inline Presentation presentation_from_complex(const DeltaComplex& k) {
    if (!k.is_connected()) {
        std::vector<Presentation> parts;
        for (const DeltaComplex& c : k.components())
            parts.push_back(presentation_from_complex(c));
        return Presentation::disjoint(parts);
    }
    std::vector<bool> tree = spanning_tree(k);
    std::vector<int> gen_of_edge(k.count(1), 0);
    int next = 1;
    for (std::size_t e = 0; e < k.count(1); ++e)
        if (!tree[e]) gen_of_edge[e] = next++;
    PresComponent comp;
    comp.generators = next - 1;
    for (std::size_t s = 0; s < k.count(2); ++s) {
        int e01 = k.sub_edge(2, static_cast<int>(s), 0, 1);
        int e12 = k.sub_edge(2, static_cast<int>(s), 1, 2);
        int e02 = k.sub_edge(2, static_cast<int>(s), 0, 2);
        Word rel;
        if (gen_of_edge[e01]) rel.push_back(gen_of_edge[e01]);
        if (gen_of_edge[e12]) rel.push_back(gen_of_edge[e12]);
        if (gen_of_edge[e02]) rel.push_back(-gen_of_edge[e02]);
        if (!rel.empty()) comp.relators.push_back(std::move(rel));
    }
    return {{std::move(comp)}};
}

}  // namespace dw
