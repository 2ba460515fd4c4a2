#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "dwcalc/errors.hpp"

namespace dw {

// Vertex-ordered Delta-complex: simplices are ordered vertex tuples attached
// along order-preserving face maps, with identifications allowed (so the
// torus, Klein bottle and RP^2 all have two-triangle models). A k-simplex is
// stored as its k+1 face indices into the (k-1)-simplex list; 0-simplices are
// the vertices themselves. Face slot i omits vertex i, so for an edge the
// faces are [head, tail].
class DeltaComplex {
  public:
    // faces_by_dim[k-1] lists the k-simplices (k >= 1), each as k+1 face ids.
    DeltaComplex(int vertex_count, std::vector<std::vector<std::vector<int>>> faces_by_dim,
                 std::string label = "complex")
        : label_(std::move(label)) {
        if (vertex_count <= 0) throw ValidationError("complex needs at least one vertex");
        simplices_.push_back(std::vector<std::vector<int>>(vertex_count));
        for (auto& dim : faces_by_dim) simplices_.push_back(std::move(dim));
        while (simplices_.size() > 1 && simplices_.back().empty()) simplices_.pop_back();
        validate();
        orient();
    }

    int dimension() const { return static_cast<int>(simplices_.size()) - 1; }
    int vertex_count() const { return static_cast<int>(simplices_[0].size()); }
    std::size_t count(int k) const {
        return (k >= 0 && k <= dimension()) ? simplices_[k].size() : 0;
    }
    const std::vector<int>& faces(int k, std::size_t idx) const { return simplices_[k][idx]; }
    const std::string& label() const { return label_; }

    long euler_characteristic() const {
        long chi = 0;
        for (int k = 0; k <= dimension(); ++k)
            chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(count(k));
        return chi;
    }

    // Iterated face maps: the sub-simplex spanned by the given (sorted)
    // vertex positions. Removing positions top-down keeps lower indices fixed.
    int sub_simplex(int k, int idx, const std::vector<int>& keep) const {
        int cur_dim = k, cur = idx;
        for (int v = k; v >= 0; --v) {
            if (std::find(keep.begin(), keep.end(), v) != keep.end()) continue;
            cur = simplices_[cur_dim][cur][v];
            --cur_dim;
        }
        return cur;
    }
    int vertex_of(int k, int idx, int i) const { return sub_simplex(k, idx, {i}); }
    int sub_edge(int k, int idx, int i, int j) const { return sub_simplex(k, idx, {i, j}); }

    int edge_tail(int e) const { return simplices_[1][e][1]; }
    int edge_head(int e) const { return simplices_[1][e][0]; }

    bool is_closed_pseudomanifold() const { return closed_; }
    bool is_connected() const { return connected_; }
    bool is_orientable() const { return orientable_; }
    // +1/-1 per top simplex; meaningful only when orientable.
    const std::vector<int>& orientation() const { return orientation_; }

    static DeltaComplex disjoint_union(const std::vector<DeltaComplex>& parts) {
        if (parts.empty()) throw ValidationError("disjoint_union of nothing");
        int dim = 0;
        for (const auto& p : parts) dim = std::max(dim, p.dimension());
        int vertices = 0;
        std::vector<std::vector<std::vector<int>>> faces(dim);
        std::vector<std::size_t> offset(dim + 1, 0);
        std::string label = "disjoint(";
        for (std::size_t pi = 0; pi < parts.size(); ++pi) {
            const auto& p = parts[pi];
            label += (pi ? "," : "") + p.label();
            offset[0] = vertices;
            for (int k = 1; k <= dim; ++k) offset[k] = faces[k - 1].size();
            for (int k = 1; k <= p.dimension(); ++k)
                for (std::size_t s = 0; s < p.count(k); ++s) {
                    std::vector<int> f = p.faces(k, s);
                    for (int& x : f) x += static_cast<int>(offset[k - 1]);
                    faces[k - 1].push_back(std::move(f));
                }
            vertices += p.vertex_count();
        }
        return DeltaComplex(vertices, std::move(faces), label + ")");
    }

    // Split along vertex-connectivity; simplices follow their vertices.
    std::vector<DeltaComplex> components() const {
        std::vector<int> comp = vertex_components();
        int n_comp = *std::max_element(comp.begin(), comp.end()) + 1;
        if (n_comp == 1) return {*this};
        std::vector<DeltaComplex> out;
        for (int c = 0; c < n_comp; ++c) {
            std::vector<std::vector<int>> old_to_new(simplices_.size());
            std::vector<std::vector<std::vector<int>>> faces(dimension());
            int vertices = 0;
            old_to_new[0].assign(count(0), -1);
            for (std::size_t v = 0; v < count(0); ++v)
                if (comp[v] == c) old_to_new[0][v] = vertices++;
            for (int k = 1; k <= dimension(); ++k) {
                old_to_new[k].assign(count(k), -1);
                for (std::size_t s = 0; s < count(k); ++s) {
                    if (comp[vertex_of(k, static_cast<int>(s), 0)] != c) continue;
                    std::vector<int> f = simplices_[k][s];
                    for (int& x : f) x = old_to_new[k - 1][x];
                    old_to_new[k][s] = static_cast<int>(faces[k - 1].size());
                    faces[k - 1].push_back(std::move(f));
                }
            }
            while (!faces.empty() && faces.back().empty()) faces.pop_back();
            out.emplace_back(vertices, std::move(faces),
                             label_ + "#" + std::to_string(c));
        }
        return out;
    }

    // --- builtin models ------------------------------------------------------

    static DeltaComplex circle() {
        // 3 vertices, 3 edges; faces are [head, tail]
        return DeltaComplex(3, {{{1, 0}, {2, 1}, {2, 0}}}, "circle");
    }

    static DeltaComplex sphere2() {
        // boundary of the 3-simplex
        std::vector<std::pair<int, int>> edge_list;
        std::vector<std::vector<int>> edges;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                edge_list.emplace_back(i, j);
                edges.push_back({j, i});
            }
        auto edge_idx = [&](int i, int j) {
            for (std::size_t e = 0; e < edge_list.size(); ++e)
                if (edge_list[e] == std::make_pair(i, j)) return static_cast<int>(e);
            throw Error("sphere2: edge lookup");
        };
        std::vector<std::vector<int>> tris;
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
                for (int c = b + 1; c < 4; ++c)
                    tris.push_back({edge_idx(b, c), edge_idx(a, c), edge_idx(a, b)});
        return DeltaComplex(4, {std::move(edges), std::move(tris)}, "sphere2");
    }

    static DeltaComplex torus() { return sigma(1); }

    // Square torus with a center vertex: 2 vertices, 6 edges, 4 triangles.
    // The inequivalent triangulation used by the independence tests.
    static DeltaComplex torus_alt() {
        // edges: a=0, b=1 loops at the corner vertex; e1..e4 = 2..5 to center
        std::vector<std::vector<int>> edges = {{0, 0}, {0, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}};
        std::vector<std::vector<int>> tris = {
            {3, 2, 0},  // bottom: faces (e2, e1, a)
            {4, 3, 1},  // right:  (e3, e2, b)
            {4, 5, 0},  // top:    (e3, e4, a)
            {5, 2, 1},  // left:   (e4, e1, b)
        };
        return DeltaComplex(2, {std::move(edges), std::move(tris)}, "torus_alt");
    }

    static DeltaComplex klein() {
        // polygon word a b a b^-1
        return fan_from_word({{0, true}, {1, true}, {0, true}, {1, false}}, 2, "klein");
    }

    static DeltaComplex rp2() {
        // 2 vertices v,w; edges a,b: v->w, c: loop at w; two triangles [v,w,w]
        std::vector<std::vector<int>> edges = {{1, 0}, {1, 0}, {1, 1}};
        std::vector<std::vector<int>> tris = {{2, 0, 1}, {2, 1, 0}};
        return DeltaComplex(2, {std::move(edges), std::move(tris)}, "rp2");
    }

    // Closed orientable surface of genus g from the fanned 4g-gon
    // a1 b1 a1^-1 b1^-1 ... ; one vertex, 2g+max(0,4g-3) edges, 4g-2 triangles.
    static DeltaComplex sigma(int g) {
        if (g < 0 || g > 3) throw UnsupportedError("sigma: genus 0..3 supported");
        if (g == 0) return sphere2();
        std::vector<std::pair<int, bool>> word;
        for (int k = 0; k < g; ++k) {
            word.push_back({2 * k, true});       // a_k
            word.push_back({2 * k + 1, true});   // b_k
            word.push_back({2 * k, false});      // a_k^-1
            word.push_back({2 * k + 1, false});  // b_k^-1
        }
        return fan_from_word(word, 2 * g, "sigma" + std::to_string(g));
    }

    static DeltaComplex builtin(const std::string& name) {
        if (name == "circle") return circle();
        if (name == "sphere2" || name == "sigma0") return sphere2();
        if (name == "torus" || name == "sigma1") return torus();
        if (name == "torus_alt") return torus_alt();
        if (name == "klein") return klein();
        if (name == "rp2") return rp2();
        if (name == "sigma2") return sigma(2);
        if (name == "sigma3") return sigma(3);
        throw ValidationError("unknown builtin complex: " + name);
    }

    static std::vector<std::string> builtin_names() {
        return {"circle", "sphere2", "torus", "torus_alt", "klein", "rp2", "sigma2", "sigma3"};
    }

  private:
    // Triangulate the polygon with boundary word `letters` (edge id, forward?)
    // by fanning from corner P0. All polygon corners must be identified to a
    // single vertex by the word; surface edges come first, then the fan
    // diagonals P0->P_i. Requires the first letter forward and the last one
    // inverted so the two radial boundary slots point away from P0.
    static DeltaComplex fan_from_word(const std::vector<std::pair<int, bool>>& letters,
                                      int n_surface_edges, std::string label) {
        const int sides = static_cast<int>(letters.size());
        if (sides < 3 || !letters.front().second || letters.back().second)
            throw ValidationError("fan_from_word: unsupported boundary word");
        std::vector<std::vector<int>> edges(n_surface_edges, std::vector<int>{0, 0});
        auto radial = [&](int i) {
            if (i == 1) return letters[0].first;
            if (i == sides - 1) return letters[sides - 1].first;
            return n_surface_edges + (i - 2);
        };
        for (int i = 2; i <= sides - 2; ++i) edges.push_back({0, 0});  // diagonals
        std::vector<std::vector<int>> tris;
        for (int i = 1; i <= sides - 2; ++i) {
            auto [e, forward] = letters[i];
            if (forward)
                tris.push_back({e, radial(i + 1), radial(i)});
            else
                tris.push_back({e, radial(i), radial(i + 1)});
        }
        return DeltaComplex(1, {std::move(edges), std::move(tris)}, std::move(label));
    }

    void validate() {
        for (int k = 1; k <= dimension(); ++k)
            for (std::size_t s = 0; s < count(k); ++s) {
                const auto& f = simplices_[k][s];
                if (static_cast<int>(f.size()) != k + 1)
                    throw ValidationError("simplex of dimension " + std::to_string(k) +
                                          " must list " + std::to_string(k + 1) + " faces");
                for (int x : f)
                    if (x < 0 || x >= static_cast<int>(count(k - 1)))
                        throw ValidationError("face index out of range in dimension " +
                                              std::to_string(k));
            }
        // simplicial identities d_i d_j = d_{j-1} d_i for i < j
        for (int k = 2; k <= dimension(); ++k)
            for (std::size_t s = 0; s < count(k); ++s)
                for (int j = 1; j <= k; ++j)
                    for (int i = 0; i < j; ++i) {
                        int left = simplices_[k - 1][simplices_[k][s][j]][i];
                        int right = simplices_[k - 1][simplices_[k][s][i]][j - 1];
                        if (left != right)
                            throw ValidationError(
                                "face identities fail at simplex " + std::to_string(s) +
                                " of dimension " + std::to_string(k) + " (i=" +
                                std::to_string(i) + ", j=" + std::to_string(j) + ")");
                    }
        closed_ = compute_closed();
        connected_ = true;
        std::vector<int> comp = vertex_components();
        for (int c : comp) connected_ &= (c == 0);
    }

    bool compute_closed() const {
        const int n = dimension();
        if (n == 0) return false;
        std::vector<int> cofaces(count(n - 1), 0);
        for (std::size_t s = 0; s < count(n); ++s)
            for (int x : simplices_[n][s]) ++cofaces[x];
        for (int c : cofaces)
            if (c != 2) return false;
        return true;
    }

    std::vector<int> vertex_components() const {
        std::vector<int> parent(count(0));
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (std::size_t e = 0; e < count(1); ++e)
            parent[find(edge_tail(static_cast<int>(e)))] =
                find(edge_head(static_cast<int>(e)));
        std::vector<int> comp(count(0), -1);
        int next = 0;
        for (std::size_t v = 0; v < count(0); ++v) {
            int r = find(static_cast<int>(v));
            if (comp[r] == -1) comp[r] = next++;
            comp[v] = comp[r];
        }
        return comp;
    }

    // Propagate top-simplex signs across shared codimension-1 faces; the two
    // induced orientations on a shared face must cancel.
    void orient() {
        const int n = dimension();
        orientation_.assign(count(n), 0);
        orientable_ = closed_;
        if (!closed_) return;
        std::vector<std::vector<std::pair<int, int>>> incidence(count(n - 1));
        for (std::size_t s = 0; s < count(n); ++s)
            for (int slot = 0; slot <= n; ++slot)
                incidence[simplices_[n][s][slot]].push_back({static_cast<int>(s), slot});
        for (std::size_t seed = 0; seed < count(n); ++seed) {
            if (orientation_[seed] != 0) continue;
            orientation_[seed] = 1;
            std::vector<int> stack{static_cast<int>(seed)};
            while (!stack.empty()) {
                int s = stack.back();
                stack.pop_back();
                for (int slot = 0; slot <= n; ++slot) {
                    const auto& inc = incidence[simplices_[n][s][slot]];
                    for (auto [t, tslot] : inc) {
                        if (t == s && tslot == slot) continue;
                        int sign_s = (slot % 2 == 0) ? 1 : -1;
                        int sign_t = (tslot % 2 == 0) ? 1 : -1;
                        int needed = -orientation_[s] * sign_s * sign_t;
                        if (orientation_[t] == 0) {
                            orientation_[t] = needed;
                            stack.push_back(t);
                        } else if (orientation_[t] != needed) {
                            orientable_ = false;
                            return;
                        }
                    }
                }
            }
        }
    }

    std::vector<std::vector<std::vector<int>>> simplices_;
    std::string label_;
    bool closed_ = false;
    bool connected_ = false;
    bool orientable_ = false;
    std::vector<int> orientation_;
};

}  // namespace dw
