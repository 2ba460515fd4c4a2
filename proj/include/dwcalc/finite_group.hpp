#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "dwcalc/errors.hpp"

namespace dw {

inline constexpr int kMaxGroupOrder = 64;

// Multiplication-table presentation of a finite group. Element 0 is the
// identity. Group axioms are checked exhaustively at construction.
// Immutable after construction; share freely across threads.
class FiniteGroup {
  public:
    FiniteGroup(std::vector<std::vector<int>> mul, std::vector<std::string> names,
                std::string label)
        : mul_(std::move(mul)), names_(std::move(names)), label_(std::move(label)) {
        validate();
        inv_.resize(order());
        for (int g = 0; g < order(); ++g)
            for (int h = 0; h < order(); ++h)
                if (mul_[g][h] == 0) inv_[g] = h;
    }

    static FiniteGroup cyclic(int m) {
        require(m >= 1, "cyclic: order must be positive");
        std::vector<std::vector<int>> mul(m, std::vector<int>(m));
        std::vector<std::string> names(m);
        for (int a = 0; a < m; ++a) {
            names[a] = std::to_string(a);
            for (int b = 0; b < m; ++b) mul[a][b] = (a + b) % m;
        }
        return FiniteGroup(std::move(mul), std::move(names), "Z/" + std::to_string(m));
    }

    // Permutations of {1..k} in lexicographic one-line order; (pq)(x) = p(q(x)).
    static FiniteGroup symmetric(int k) {
        require(k >= 1 && k <= 4, "symmetric: degree 1..4 supported");
        std::vector<std::vector<int>> perms;
        std::vector<int> p(k);
        std::iota(p.begin(), p.end(), 0);
        do {
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        int m = static_cast<int>(perms.size());
        auto index_of = [&](const std::vector<int>& q) {
            return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) -
                                    perms.begin());
        };
        std::vector<std::vector<int>> mul(m, std::vector<int>(m));
        std::vector<std::string> names(m);
        for (int a = 0; a < m; ++a) {
            std::string nm;
            for (int x : perms[a]) nm += std::to_string(x + 1);
            names[a] = nm;
            for (int b = 0; b < m; ++b) {
                std::vector<int> comp(k);
                for (int x = 0; x < k; ++x) comp[x] = perms[a][perms[b][x]];
                mul[a][b] = index_of(comp);
            }
        }
        return FiniteGroup(std::move(mul), std::move(names), "S" + std::to_string(k));
    }

    static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b) {
        int m = a.order() * b.order();
        require(m <= kMaxGroupOrder, "product: order exceeds bound");
        auto idx = [&](int x, int y) { return x * b.order() + y; };
        std::vector<std::vector<int>> mul(m, std::vector<int>(m));
        std::vector<std::string> names(m);
        for (int x0 = 0; x0 < a.order(); ++x0)
            for (int y0 = 0; y0 < b.order(); ++y0) {
                names[idx(x0, y0)] = "(" + a.name(x0) + "," + b.name(y0) + ")";
                for (int x1 = 0; x1 < a.order(); ++x1)
                    for (int y1 = 0; y1 < b.order(); ++y1)
                        mul[idx(x0, y0)][idx(x1, y1)] = idx(a.mul(x0, x1), b.mul(y0, y1));
            }
        return FiniteGroup(std::move(mul), std::move(names),
                           a.label() + "x" + b.label());
    }

    static FiniteGroup from_table(std::vector<std::vector<int>> mul, std::string label = "G") {
        int m = static_cast<int>(mul.size());
        std::vector<std::string> names(m);
        for (int g = 0; g < m; ++g) names[g] = "g" + std::to_string(g);
        return FiniteGroup(std::move(mul), std::move(names), std::move(label));
    }

    int order() const { return static_cast<int>(mul_.size()); }
    int mul(int a, int b) const { return mul_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    int identity() const { return 0; }
    const std::string& name(int g) const { return names_[g]; }
    const std::string& label() const { return label_; }

    int conjugate(int c, int g) const { return mul_[mul_[c][g]][inv_[c]]; }

    std::vector<std::vector<int>> conjugacy_classes() const {
        std::vector<std::vector<int>> classes;
        std::vector<bool> seen(order(), false);
        for (int g = 0; g < order(); ++g) {
            if (seen[g]) continue;
            std::vector<int> cls;
            for (int c = 0; c < order(); ++c) {
                int h = conjugate(c, g);
                if (!seen[h]) {
                    seen[h] = true;
                    cls.push_back(h);
                }
            }
            std::sort(cls.begin(), cls.end());
            classes.push_back(std::move(cls));
        }
        return classes;
    }

  private:
    static void require(bool ok, const char* msg) {
        if (!ok) throw ValidationError(msg);
    }

    void validate() const {
        int m = order();
        require(m >= 1 && m <= kMaxGroupOrder, "group order out of range");
        for (int g = 0; g < m; ++g) {
            require(static_cast<int>(mul_[g].size()) == m, "multiplication table not square");
            for (int h = 0; h < m; ++h)
                require(mul_[g][h] >= 0 && mul_[g][h] < m, "table entry out of range");
        }
        for (int g = 0; g < m; ++g)
            require(mul_[0][g] == g && mul_[g][0] == g, "element 0 is not a two-sided identity");
        for (int g = 0; g < m; ++g) {
            bool has_inv = false;
            for (int h = 0; h < m; ++h) has_inv |= (mul_[g][h] == 0 && mul_[h][g] == 0);
            require(has_inv, "element without two-sided inverse");
        }
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                for (int c = 0; c < m; ++c)
                    if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
                        throw ValidationError("associativity fails at triple (" +
                                              std::to_string(a) + "," + std::to_string(b) + "," +
                                              std::to_string(c) + ")");
    }

    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
    std::vector<std::string> names_;
    std::string label_;
};

// #{g : gs = sg for all s in S}. For the empty set this is the full order.
inline int centralizer_order(const FiniteGroup& g, const std::vector<int>& s) {
    int count = 0;
    for (int c = 0; c < g.order(); ++c) {
        bool central = true;
        for (int x : s)
            if (g.mul(c, x) != g.mul(x, c)) {
                central = false;
                break;
            }
        count += central;
    }
    return count;
}

}  // namespace dw
