#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dwcalc/errors.hpp"
#include "dwcalc/presentation.hpp"

namespace dw {

// Monomial in the degree-1 generators, as an exponent vector.
using Monomial = std::vector<int>;

inline int monomial_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

// lhs -> rhs with rhs strictly smaller (lower degree, or same degree and
// lexicographically below), or -> 0 when rhs is absent. This makes every
// rewrite sequence terminate.
struct RewriteRule {
    Monomial lhs;
    std::optional<Monomial> rhs;
};

// Presented mod-2 cohomology ring data of a closed n-manifold: the degree-1
// generators, truncation/substitution rules, and the list of degree-n normal
// forms that pair to 1 against the fundamental class. Carries the pi_1
// presentation and the correspondence between its generators and H^1, so
// gauge fields on the model can be read as cohomology classes.
struct AlgebraicModel {
    std::string label;
    int dimension = 0;
    int generator_count = 0;
    std::vector<RewriteRule> rules;
    std::map<Monomial, int> pairing;  // degree-n normal forms -> bit
    Presentation pi1;
    std::vector<std::vector<std::uint8_t>> gen_to_h1;  // pi_1 generator -> H^1 bits

    void validate() const {
        if (dimension < 1) throw ValidationError("model dimension must be >= 1");
        if (generator_count < 0) throw ValidationError("bad generator count");
        for (const auto& r : rules) {
            if (static_cast<int>(r.lhs.size()) != generator_count)
                throw ValidationError("rule arity mismatch");
            if (!r.rhs) continue;
            if (static_cast<int>(r.rhs->size()) != generator_count)
                throw ValidationError("rule arity mismatch");
            int dl = monomial_degree(r.lhs), dr = monomial_degree(*r.rhs);
            if (dr > dl || (dr == dl && !(*r.rhs < r.lhs)))
                throw ValidationError("rewrite rule does not decrease (degree, lex) order");
        }
        pi1.validate();
        if (static_cast<int>(gen_to_h1.size()) != pi1.total_generators())
            throw ValidationError("gen_to_h1 must cover every pi_1 generator");
        for (const auto& row : gen_to_h1)
            if (static_cast<int>(row.size()) != generator_count)
                throw ValidationError("gen_to_h1 width mismatch");
    }

    static AlgebraicModel real_projective(int n) {
        if (n < 1) throw ValidationError("real_projective: n >= 1");
        AlgebraicModel m;
        m.label = "rp" + std::to_string(n);
        m.dimension = n;
        m.generator_count = 1;
        m.rules.push_back({Monomial{n + 1}, std::nullopt});
        m.pairing[Monomial{n}] = 1;
        m.pi1 = (n == 1) ? Presentation::circle() : Presentation::cyclic(2);
        m.gen_to_h1 = {{1}};
        m.validate();
        return m;
    }

    // Dold manifold P(m,l): ring F2[c,d]/(c^{m+1}, d^{l+1}) with deg d = 2,
    // top class c^m d^l. Only powers of the degree-1 generator c are needed
    // here, and c^{m+1} already truncates to zero.
    static AlgebraicModel dold(int m, int l) {
        if (m < 1 || l < 1) throw ValidationError("dold: need m,l >= 1");
        AlgebraicModel a;
        a.label = "dold(" + std::to_string(m) + "," + std::to_string(l) + ")";
        a.dimension = m + 2 * l;
        a.generator_count = 1;
        a.rules.push_back({Monomial{m + 1}, std::nullopt});
        // no degree-n monomial in c survives (n = m+2l > m), so no pairing rows
        a.pi1 = (m == 1) ? Presentation::circle() : Presentation::cyclic(2);
        a.gen_to_h1 = {{1}};
        a.validate();
        return a;
    }

    static AlgebraicModel product(const AlgebraicModel& x, const AlgebraicModel& y) {
        if (x.pi1.components.size() != 1 || y.pi1.components.size() != 1)
            throw UnsupportedError("model product: factors must be connected");
        AlgebraicModel p;
        p.label = x.label + "x" + y.label;
        p.dimension = x.dimension + y.dimension;
        p.generator_count = x.generator_count + y.generator_count;
        auto pad_left = [&](const Monomial& m) {
            Monomial out(p.generator_count, 0);
            std::copy(m.begin(), m.end(), out.begin());
            return out;
        };
        auto pad_right = [&](const Monomial& m) {
            Monomial out(p.generator_count, 0);
            std::copy(m.begin(), m.end(), out.begin() + x.generator_count);
            return out;
        };
        for (const auto& r : x.rules)
            p.rules.push_back({pad_left(r.lhs),
                               r.rhs ? std::optional<Monomial>(pad_left(*r.rhs)) : std::nullopt});
        for (const auto& r : y.rules)
            p.rules.push_back({pad_right(r.lhs),
                               r.rhs ? std::optional<Monomial>(pad_right(*r.rhs)) : std::nullopt});
        // Kunneth pairing: only (top of x) x (top of y) splits pair to 1
        for (const auto& [mx, bx] : x.pairing)
            for (const auto& [my, by] : y.pairing) {
                Monomial m = pad_left(mx);
                const Monomial right = pad_right(my);
                for (int i = 0; i < p.generator_count; ++i) m[i] += right[i];
                if (bx && by) p.pairing[m] = 1;
            }
        // pi_1 of the product: both sets of generators commute
        const PresComponent& cx = x.pi1.components[0];
        const PresComponent& cy = y.pi1.components[0];
        PresComponent pc;
        pc.generators = cx.generators + cy.generators;
        pc.relators = cx.relators;
        for (Word w : cy.relators) {
            for (int& letter : w) letter += (letter > 0 ? cx.generators : -cx.generators);
            pc.relators.push_back(std::move(w));
        }
        for (int i = 1; i <= cx.generators; ++i)
            for (int j = 1; j <= cy.generators; ++j)
                pc.relators.push_back({i, cx.generators + j, -i, -(cx.generators + j)});
        p.pi1 = Presentation{{pc}};
        for (const auto& row : x.gen_to_h1) {
            std::vector<std::uint8_t> r(p.generator_count, 0);
            std::copy(row.begin(), row.end(), r.begin());
            p.gen_to_h1.push_back(std::move(r));
        }
        for (const auto& row : y.gen_to_h1) {
            std::vector<std::uint8_t> r(p.generator_count, 0);
            std::copy(row.begin(), row.end(), r.begin() + x.generator_count);
            p.gen_to_h1.push_back(std::move(r));
        }
        p.validate();
        return p;
    }
};

inline constexpr int kRewriteBudget = 20000;

// Normal form under first-applicable-rule reduction; nullopt means zero.
inline std::optional<Monomial> rewrite_normal_form(const AlgebraicModel& m, Monomial mono) {
    for (int step = 0; step < kRewriteBudget; ++step) {
        bool applied = false;
        for (const auto& r : m.rules) {
            bool divides = true;
            for (int i = 0; i < m.generator_count && divides; ++i)
                divides &= (mono[i] >= r.lhs[i]);
            if (!divides) continue;
            if (!r.rhs) return std::nullopt;
            for (int i = 0; i < m.generator_count; ++i) mono[i] += (*r.rhs)[i] - r.lhs[i];
            applied = true;
            break;
        }
        if (!applied) return mono;
    }
    throw ValidationError("rewrite did not terminate within the step budget");
}

// Exhaustive all-orders reduction; used to certify confluence on the
// monomials a given computation actually reaches.
inline std::set<std::optional<Monomial>> rewrite_all_normal_forms(
    const AlgebraicModel& m, const Monomial& mono,
    std::map<Monomial, std::set<std::optional<Monomial>>>& memo, int& budget) {
    if (auto it = memo.find(mono); it != memo.end()) return it->second;
    if (--budget < 0) throw ValidationError("confluence check exceeded the step budget");
    std::set<std::optional<Monomial>> result;
    bool any = false;
    for (const auto& r : m.rules) {
        bool divides = true;
        for (int i = 0; i < m.generator_count && divides; ++i)
            divides &= (mono[i] >= r.lhs[i]);
        if (!divides) continue;
        any = true;
        if (!r.rhs) {
            result.insert(std::nullopt);
            continue;
        }
        Monomial next = mono;
        for (int i = 0; i < m.generator_count; ++i) next[i] += (*r.rhs)[i] - r.lhs[i];
        auto sub = rewrite_all_normal_forms(m, next, memo, budget);
        result.insert(sub.begin(), sub.end());
    }
    if (!any) result.insert(mono);
    memo[mono] = result;
    return result;
}

// <[X], v^n> computed in the presented ring. v is a formal sum of degree-1
// generators. The mod-2 expansion of v^n assigns each binary digit of n to
// one summand (all other multinomial coefficients are even), after which
// every term is rewritten to normal form and looked up in the pairing table.
inline int cup_power_pairing(const AlgebraicModel& m, const std::vector<std::uint8_t>& v) {
    if (static_cast<int>(v.size()) != m.generator_count)
        throw ValidationError("cup_power_pairing: class width mismatch");
    std::vector<int> support;
    for (int i = 0; i < m.generator_count; ++i)
        if (v[i]) support.push_back(i);
    if (support.empty()) return 0;

    std::vector<int> bits;
    for (int b = 0; b < 30; ++b)
        if (m.dimension & (1 << b)) bits.push_back(1 << b);

    std::map<Monomial, std::set<std::optional<Monomial>>> memo;
    int confluence_budget = kRewriteBudget;

    int total = 0;
    std::vector<std::size_t> choice(bits.size(), 0);
    while (true) {
        Monomial mono(m.generator_count, 0);
        for (std::size_t i = 0; i < bits.size(); ++i) mono[support[choice[i]]] += bits[i];
        auto forms = rewrite_all_normal_forms(m, mono, memo, confluence_budget);
        if (forms.size() > 1)
            throw ValidationError("rewrite rules are not confluent at a reached monomial");
        const auto& nf = *forms.begin();
        if (nf) {
            auto it = m.pairing.find(*nf);
            if (it != m.pairing.end()) total ^= it->second;
        }
        std::size_t i = 0;
        while (i < bits.size() && ++choice[i] == support.size()) choice[i++] = 0;
        if (i == bits.size()) break;
    }
    return total;
}

}  // namespace dw
