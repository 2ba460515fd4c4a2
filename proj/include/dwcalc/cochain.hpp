#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dwcalc/errors.hpp"
#include "dwcalc/finite_group.hpp"

namespace dw {

// Bar-resolution n-cochain on a finite group with Z/N coefficients, stored as
// a full value table in lexicographic argument order. Degree 0 is a single
// constant. Coefficients are the finite subgroup mu_N of the circle written
// additively, so cocycle arithmetic stays exact.
struct Cochain {
    const FiniteGroup* group = nullptr;
    int degree = 0;
    int modulus = 1;
    std::vector<int> values;  // size order^degree, entries in [0, modulus)

    static std::size_t table_size(const FiniteGroup& g, int degree) {
        std::size_t s = 1;
        for (int i = 0; i < degree; ++i) s *= static_cast<std::size_t>(g.order());
        return s;
    }

    static Cochain zero(const FiniteGroup& g, int degree, int modulus) {
        Cochain c;
        c.group = &g;
        c.degree = degree;
        c.modulus = modulus;
        c.values.assign(table_size(g, degree), 0);
        return c;
    }

    std::size_t index(const std::vector<int>& args) const {
        std::size_t idx = 0;
        for (int a : args) idx = idx * static_cast<std::size_t>(group->order()) +
                                 static_cast<std::size_t>(a);
        return idx;
    }

    int operator()(const std::vector<int>& args) const { return values[index(args)]; }

    void set(const std::vector<int>& args, int v) {
        values[index(args)] = ((v % modulus) + modulus) % modulus;
    }

    bool is_normalized() const {
        const int m = group->order();
        std::vector<int> args(degree, 0);
        for (std::size_t idx = 0; idx < values.size(); ++idx) {
            bool touches_identity = false;
            std::size_t t = idx;
            for (int i = degree - 1; i >= 0; --i) {
                args[i] = static_cast<int>(t % m);
                t /= m;
                touches_identity |= (args[i] == 0);
            }
            if (touches_identity && values[idx] != 0) return false;
        }
        return true;
    }
};

inline void for_each_tuple(const FiniteGroup& g, int length,
                           const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> t(length, 0);
    while (true) {
        fn(t);
        int i = length - 1;
        while (i >= 0 && ++t[i] == g.order()) t[i--] = 0;
        if (i < 0) break;
    }
}

// Bar differential: (dw)(g1..g_{n+1}) = w(g2..) + sum (-1)^i w(.., g_i g_{i+1}, ..)
// + (-1)^{n+1} w(g1..gn). Preserves normalization.
inline Cochain coboundary(const Cochain& w) {
    const FiniteGroup& g = *w.group;
    Cochain out = Cochain::zero(g, w.degree + 1, w.modulus);
    std::vector<int> sub(w.degree);
    for_each_tuple(g, w.degree + 1, [&](const std::vector<int>& args) {
        long long acc = 0;
        for (int i = 0; i <= w.degree + 1; ++i) {
            if (i == 0) {
                sub.assign(args.begin() + 1, args.end());
            } else if (i == w.degree + 1) {
                sub.assign(args.begin(), args.end() - 1);
            } else {
                sub.clear();
                sub.insert(sub.end(), args.begin(), args.begin() + (i - 1));
                sub.push_back(g.mul(args[i - 1], args[i]));
                sub.insert(sub.end(), args.begin() + i + 1, args.end());
            }
            int term = w(sub);
            acc += (i % 2 == 0) ? term : -term;
        }
        out.set(args, static_cast<int>(((acc % w.modulus) + w.modulus) % w.modulus));
    });
    return out;
}

struct CocycleCheck {
    bool normalized = false;
    bool cocycle = false;
    std::optional<std::vector<int>> failing_tuple;  // first (n+1)-tuple with dw != 0
};

inline CocycleCheck check_cocycle(const Cochain& w) {
    CocycleCheck res;
    res.normalized = w.is_normalized();
    Cochain dw = coboundary(w);
    res.cocycle = true;
    const int m = w.group->order();
    for (std::size_t idx = 0; idx < dw.values.size(); ++idx) {
        if (dw.values[idx] == 0) continue;
        res.cocycle = false;
        std::vector<int> args(dw.degree);
        std::size_t t = idx;
        for (int i = dw.degree - 1; i >= 0; --i) {
            args[i] = static_cast<int>(t % m);
            t /= m;
        }
        res.failing_tuple = args;
        break;
    }
    return res;
}

// Pointwise product of mu_N-valued cochains, i.e. addition of exponents.
inline Cochain multiply(const Cochain& a, const Cochain& b) {
    if (a.group != b.group || a.degree != b.degree || a.modulus != b.modulus)
        throw ValidationError("multiply: cochain shapes differ");
    Cochain out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = (out.values[i] + b.values[i]) % out.modulus;
    return out;
}

// A validated normalized cocycle. Construction rejects non-normalized input
// with a hint instead of shifting it silently.
class GroupCocycle {
  public:
    explicit GroupCocycle(Cochain table) : table_(std::move(table)) {
        if (table_.degree < 1 || table_.degree > 3)
            throw ValidationError("GroupCocycle: degree must be 1..3");
        CocycleCheck chk = check_cocycle(table_);
        if (!chk.normalized)
            throw ValidationError(
                "GroupCocycle: table is not normalized (entries with an identity argument "
                "must vanish); shift by a coboundary of a 0-cochain if needed");
        if (!chk.cocycle) {
            std::string where;
            for (int a : *chk.failing_tuple) where += " " + std::to_string(a);
            throw ValidationError("GroupCocycle: coboundary is nonzero at tuple" + where);
        }
    }

    const Cochain& table() const { return table_; }
    const FiniteGroup& group() const { return *table_.group; }
    int degree() const { return table_.degree; }
    int modulus() const { return table_.modulus; }
    int operator()(const std::vector<int>& args) const { return table_(args); }

  private:
    Cochain table_;
};

}  // namespace dw
