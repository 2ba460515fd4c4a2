#pragma once

#include <cstdint>
#include <vector>

namespace dw {

// Dense GF(2) vectors and matrices on 64-bit blocks; desk-scale sizes only.
class Gf2Vec {
  public:
    Gf2Vec() = default;
    explicit Gf2Vec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    Gf2Vec& operator^=(const Gf2Vec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    friend Gf2Vec operator^(Gf2Vec a, const Gf2Vec& b) { return a ^= b; }
    friend bool operator==(const Gf2Vec& a, const Gf2Vec& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }
    friend bool operator<(const Gf2Vec& a, const Gf2Vec& b) { return a.w_ < b.w_; }

    bool is_zero() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

  private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Row-major matrix; rank and kernel by plain elimination.
class Gf2Matrix {
  public:
    Gf2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, Gf2Vec(cols)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { data_[r].set(c, v); }
    Gf2Vec& row(std::size_t r) { return data_[r]; }
    const Gf2Vec& row(std::size_t r) const { return data_[r]; }

    Gf2Vec apply(const Gf2Vec& x) const {
        Gf2Vec y(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            bool acc = false;
            for (std::size_t c = 0; c < cols_; ++c)
                if (data_[r].get(c) && x.get(c)) acc = !acc;
            y.set(r, acc);
        }
        return y;
    }

    std::size_t rank() const {
        Gf2Matrix m = *this;
        return m.eliminate().size();
    }

    // Basis of {x : Ax = 0}.
    std::vector<Gf2Vec> kernel_basis() const {
        Gf2Matrix m = *this;
        std::vector<std::size_t> pivot_cols = m.eliminate();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivot_cols) is_pivot[c] = true;
        std::vector<Gf2Vec> basis;
        for (std::size_t free_c = 0; free_c < cols_; ++free_c) {
            if (is_pivot[free_c]) continue;
            Gf2Vec v(cols_);
            v.set(free_c, true);
            for (std::size_t k = 0; k < pivot_cols.size(); ++k)
                if (m.data_[k].get(free_c)) v.set(pivot_cols[k], true);
            basis.push_back(std::move(v));
        }
        return basis;
    }

  private:
    // Reduced row echelon in place, returning pivot columns.
    std::vector<std::size_t> eliminate() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && !data_[p].get(c)) ++p;
            if (p == rows_) continue;
            std::swap(data_[r], data_[p]);
            for (std::size_t i = 0; i < rows_; ++i)
                if (i != r && data_[i].get(c)) data_[i] ^= data_[r];
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rows_, cols_;
    std::vector<Gf2Vec> data_;
};

// Incremental independent-set tracker over GF(2); used to extend a basis of
// coboundaries to a basis of cocycles.
class Gf2Span {
  public:
    explicit Gf2Span(std::size_t n) : n_(n) {}

    // Returns true (and absorbs v) if v was independent of the current span.
    bool add(Gf2Vec v) {
        for (const auto& [lead, w] : rows_)
            if (v.get(lead)) v ^= w;
        for (std::size_t i = 0; i < n_; ++i)
            if (v.get(i)) {
                rows_.emplace_back(i, std::move(v));
                return true;
            }
        return false;
    }

    bool contains(Gf2Vec v) const {
        for (const auto& [lead, w] : rows_)
            if (v.get(lead)) v ^= w;
        return v.is_zero();
    }

    std::size_t dim() const { return rows_.size(); }

  private:
    std::size_t n_;
    std::vector<std::pair<std::size_t, Gf2Vec>> rows_;
};

}  // namespace dw
