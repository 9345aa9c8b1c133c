#pragma once

// Essential rectangles, the rectangular operator, the ASM graph and the
// ASM (Bruhat) order together with its rank function beta.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "asm.hpp"
#include "enumerate.hpp"
#include "error.hpp"

namespace asmg {

// Rectangle of positions {(p,q) : i <= p < j, k <= q < l}.
struct Rect {
    int i, j, k, l;

    int area() const noexcept { return (j - i) * (l - k); }
    bool contains(int p, int q) const noexcept { return i <= p && p < j && k <= q && q < l; }
    bool is_point() const noexcept { return j == i + 1 && l == k + 1; }

    std::string to_string() const
    {
        return "R(" + std::to_string(i) + "," + std::to_string(j) + ";" + std::to_string(k) + "," +
               std::to_string(l) + ")";
    }

    friend bool operator==(const Rect &, const Rect &) = default;
    friend auto operator<=>(const Rect &, const Rect &) = default;
};

using Cell = std::pair<int, int>;

// Boundary conditions on C for R to be essential (shift = 0) or dual
// essential (shift = 1): along the left column and top row the step into the
// rectangle is `shift`; along the right column and bottom row the step out of
// it is `1 - shift`.
inline bool satisfies_rect_conditions(const CornerSum &c, const Rect &r, int shift)
{
    for (int p = r.i; p < r.j; ++p) {
        if (c(p, r.k) != c(p, r.k - 1) + shift) return false;
        if (c(p, r.l) != c(p, r.l - 1) + (1 - shift)) return false;
    }
    for (int q = r.k; q < r.l; ++q) {
        if (c(r.i, q) != c(r.i - 1, q) + shift) return false;
        if (c(r.j, q) != c(r.j - 1, q) + (1 - shift)) return false;
    }
    return true;
}

inline bool is_essential(const CornerSum &c, const Rect &r) { return satisfies_rect_conditions(c, r, 0); }
inline bool is_dual_essential(const CornerSum &c, const Rect &r) { return satisfies_rect_conditions(c, r, 1); }

namespace detail {

template <class Pred>
std::vector<Rect> scan_rects(int n, Pred &&pred)
{
    std::vector<Rect> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    Rect r{i, j, k, l};
                    if (pred(r)) out.push_back(r);
                }
    return out;
}

} // namespace detail

// E(A), in lexicographic (i, j, k, l) order.
inline std::vector<Rect> essential_rects(const Asm &a)
{
    const CornerSum c(a);
    return detail::scan_rects(a.size(), [&](const Rect &r) { return is_essential(c, r); });
}

// E*(A), in lexicographic (i, j, k, l) order.
inline std::vector<Rect> dual_essential_rects(const Asm &a)
{
    const CornerSum c(a);
    return detail::scan_rects(a.size(), [&](const Rect &r) { return is_dual_essential(c, r); });
}

// Adds the rectangle indicator to the corner sums when R is essential,
// subtracts it when R is dual essential, and is the identity otherwise.
inline Asm apply_rect(const Asm &a, const Rect &r)
{
    const CornerSum c(a);
    int delta = 0;
    if (is_essential(c, r)) {
        delta = 1;
    } else if (is_dual_essential(c, r)) {
        delta = -1;
    } else {
        return a;
    }
    IntMatrix m = c.values();
    for (int p = r.i; p < r.j; ++p)
        for (int q = r.k; q < r.l; ++q) m(p, q) += delta;
    return CornerSum::from_matrix(m).to_asm();
}

// One row of the table of the 16 edge kinds A -> B: target corner values
// (b_ik, b_il, b_jk, b_jl) and source corner values (a_ik, a_il, a_jk, a_jl).
struct EdgeKind {
    int type;
    std::array<int, 4> target;
    std::array<int, 4> source;
};

inline constexpr std::array<EdgeKind, 16> kEdgeKinds{{
    {1, {0, 1, 1, 0}, {1, 0, 0, 1}},
    {2, {0, 0, 1, 0}, {1, -1, 0, 1}},
    {3, {0, 1, 0, 0}, {1, 0, -1, 1}},
    {4, {0, 0, 0, 0}, {1, -1, -1, 1}},
    {5, {0, 1, 1, -1}, {1, 0, 0, 0}},
    {6, {0, 0, 1, -1}, {1, -1, 0, 0}},
    {7, {0, 1, 0, -1}, {1, 0, -1, 0}},
    {8, {0, 0, 0, -1}, {1, -1, -1, 0}},
    {9, {-1, 1, 1, 0}, {0, 0, 0, 1}},
    {10, {-1, 0, 1, 0}, {0, -1, 0, 1}},
    {11, {-1, 1, 0, 0}, {0, 0, -1, 1}},
    {12, {-1, 0, 0, 0}, {0, -1, -1, 1}},
    {13, {-1, 1, 1, -1}, {0, 0, 0, 0}},
    {14, {-1, 0, 1, -1}, {0, -1, 0, 0}},
    {15, {-1, 1, 0, -1}, {0, 0, -1, 0}},
    {16, {-1, 0, 0, -1}, {0, -1, -1, 0}},
}};

inline constexpr std::array<int, 4> kCornerDifference{1, -1, -1, 1};

inline std::array<int, 4> corners(const Asm &a, const Rect &r)
{
    return {a(r.i, r.k), a(r.i, r.l), a(r.j, r.k), a(r.j, r.l)};
}

// A -> B with B = r(A) and beta(A) < beta(B).
struct Edge {
    Asm source;
    Asm target;
    Rect rect;
    int edge_type;
};

// Edge type 1..16 keyed on the target's corner values. Throws NotAnEdge if
// the pair differs anywhere off the four corners, if the corner difference
// is not (1,-1,-1,1), or if no table row matches.
inline int classify_edge(const Asm &source, const Asm &target, const Rect &r)
{
    if (source.size() != target.size()) throw SizeMismatch(source.size(), target.size());
    const int n = source.size();
    if (!(1 <= r.i && r.i < r.j && r.j <= n && 1 <= r.k && r.k < r.l && r.l <= n)) {
        throw NotAnEdge("rectangle " + r.to_string() + " is out of range");
    }
    for (int p = 1; p <= n; ++p)
        for (int q = 1; q <= n; ++q) {
            const bool corner = (p == r.i || p == r.j) && (q == r.k || q == r.l);
            if (!corner && source(p, q) != target(p, q)) {
                throw NotAnEdge("entries differ off the corners of " + r.to_string());
            }
        }
    const auto a = corners(source, r);
    const auto b = corners(target, r);
    for (int t = 0; t < 4; ++t) {
        if (a[t] - b[t] != kCornerDifference[t]) {
            throw NotAnEdge("corner difference is not (1,-1,-1,1) on " + r.to_string());
        }
    }
    for (const auto &kind : kEdgeKinds) {
        if (kind.target == b) return kind.type;
    }
    throw NotAnEdge("target corner values match no edge type");
}

// Out-edges of `a`: one per dual essential rectangle.
inline std::vector<Edge> edges_from(const Asm &a)
{
    std::vector<Edge> out;
    for (const Rect &r : dual_essential_rects(a)) {
        Asm b = apply_rect(a, r);
        const int type = classify_edge(a, b, r);
        out.push_back(Edge{a, std::move(b), r, type});
    }
    return out;
}

// A <= B iff C_A >= C_B entrywise.
inline bool asm_leq(const Asm &a, const Asm &b)
{
    if (a.size() != b.size()) throw SizeMismatch(a.size(), b.size());
    const CornerSum ca(a), cb(b);
    const auto &x = ca.values().data();
    const auto &y = cb.values().data();
    for (std::size_t t = 0; t < x.size(); ++t)
        if (x[t] < y[t]) return false;
    return true;
}

// beta as sum(min(i,j)) - sum(C(i,j)).
inline int beta_corner_sum(const Asm &a)
{
    const CornerSum c(a);
    int total = 0;
    for (int i = 1; i <= a.size(); ++i)
        for (int j = 1; j <= a.size(); ++j) total += std::min(i, j) - c(i, j);
    return total;
}

// beta as sum((i-j)^2 / 2 * a_ij); the doubled sum is always even.
inline int beta_quadratic(const Asm &a)
{
    int twice = 0;
    for (int i = 1; i <= a.size(); ++i)
        for (int j = 1; j <= a.size(); ++j) twice += (i - j) * (i - j) * a(i, j);
    if (twice % 2 != 0) throw std::logic_error("odd doubled beta; input is not an ASM");
    return twice / 2;
}

inline int beta(const Asm &a) { return beta_quadratic(a); }

inline int beta(const Permutation &w)
{
    int twice = 0;
    for (int i = 1; i <= w.size(); ++i) twice += (i - w(i)) * (i - w(i));
    return twice / 2;
}

// Exactly one descent in w and exactly one in w^{-1}.
inline bool is_bigrassmannian(const Permutation &w)
{
    const Permutation inv = w.inverse();
    int descents = 0, inverse_descents = 0;
    for (int i = 1; i < w.size(); ++i) {
        descents += w(i) > w(i + 1);
        inverse_descents += inv(i) > inv(i + 1);
    }
    return descents == 1 && inverse_descents == 1;
}

inline std::vector<Permutation> bigrassmannian_permutations(int n)
{
    std::vector<Permutation> out;
    for (auto &w : enumerate_permutations(n, true))
        if (is_bigrassmannian(w)) out.push_back(std::move(w));
    return out;
}

// beta as the number of bigrassmannian permutations below `a`. Pass the
// precomputed list when calling in a loop.
inline int beta_bigrassmannian_count(const Asm &a, const std::vector<Permutation> &bigrassmannians)
{
    int count = 0;
    for (const auto &w : bigrassmannians) count += asm_leq(permutation_to_asm(w), a);
    return count;
}

inline int beta_bigrassmannian_count(const Asm &a)
{
    return beta_bigrassmannian_count(a, bigrassmannian_permutations(a.size()));
}

// 1x1 essential rectangles R(i,i+1;k,k+1), reported as cells (i,k) in
// lexicographic order. They are in bijection with the elements `a` covers.
inline std::vector<Cell> essential_points(const Asm &a)
{
    const CornerSum c(a);
    std::vector<Cell> out;
    for (int i = 1; i < a.size(); ++i)
        for (int k = 1; k < a.size(); ++k)
            if (is_essential(c, Rect{i, i + 1, k, k + 1})) out.emplace_back(i, k);
    return out;
}

// Fulton's essential set, evaluated directly from w and w^{-1}.
inline std::vector<Cell> fulton_essential_set(const Permutation &w)
{
    const Permutation inv = w.inverse();
    std::vector<Cell> out;
    for (int i = 1; i < w.size(); ++i)
        for (int j = 1; j < w.size(); ++j)
            if (i < inv(j) && j < w(i) && w(i + 1) <= j && inv(j + 1) <= i) out.emplace_back(i, j);
    return out;
}

inline std::vector<Asm> lower_covers(const Asm &a)
{
    std::vector<Asm> out;
    for (auto [i, k] : essential_points(a)) out.push_back(apply_rect(a, Rect{i, i + 1, k, k + 1}));
    return out;
}

inline std::vector<Asm> upper_covers(const Asm &a)
{
    std::vector<Asm> out;
    const CornerSum c(a);
    for (int i = 1; i < a.size(); ++i)
        for (int k = 1; k < a.size(); ++k) {
            const Rect r{i, i + 1, k, k + 1};
            if (is_dual_essential(c, r)) out.push_back(apply_rect(a, r));
        }
    return out;
}

// Saturated chain a = A_0 < A_1 < ... < A_k = b. Built downward from b: at
// each step the lexicographically smallest essential point of the current
// upper element whose lowering stays above `a` is used.
inline std::vector<Asm> covering_chain(const Asm &a, const Asm &b)
{
    if (!asm_leq(a, b)) throw Incomparable();
    const CornerSum ca(a);
    std::vector<Asm> chain{b};
    Asm current = b;
    while (!(current == a)) {
        const CornerSum cc(current);
        bool stepped = false;
        for (auto [i, k] : essential_points(current)) {
            if (ca(i, k) >= cc(i, k) + 1) {
                current = apply_rect(current, Rect{i, i + 1, k, k + 1});
                stepped = true;
                break;
            }
        }
        if (!stepped) throw std::logic_error("no lower cover above the bottom element");
        chain.push_back(current);
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

// The ASM graph on A_n. Nodes are in canonical enumeration order.
class AsmGraph {
public:
    struct Arc {
        std::size_t target;
        Rect rect;
        int edge_type;
    };

    explicit AsmGraph(std::vector<Asm> nodes) : nodes_(std::move(nodes))
    {
        for (std::size_t v = 0; v < nodes_.size(); ++v) {
            index_.emplace(nodes_[v].entries().data(), v);
            betas_.push_back(beta(nodes_[v]));
        }
        arcs_.resize(nodes_.size());
        for (std::size_t v = 0; v < nodes_.size(); ++v) {
            for (const Edge &e : edges_from(nodes_[v])) {
                arcs_[v].push_back(Arc{*find(e.target), e.rect, e.edge_type});
            }
        }
    }

    int n() const { return nodes_.empty() ? 0 : nodes_.front().size(); }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const
    {
        std::size_t total = 0;
        for (const auto &a : arcs_) total += a.size();
        return total;
    }

    const std::vector<Asm> &nodes() const { return nodes_; }
    const Asm &node(std::size_t v) const { return nodes_.at(v); }
    int beta_of(std::size_t v) const { return betas_.at(v); }
    const std::vector<Arc> &arcs(std::size_t v) const { return arcs_.at(v); }

    std::optional<std::size_t> find(const Asm &a) const
    {
        auto it = index_.find(a.entries().data());
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    // Nodes reachable from `from` by a directed path (including itself).
    std::vector<bool> reachable_from(std::size_t from) const
    {
        std::vector<bool> seen(nodes_.size(), false);
        std::queue<std::size_t> todo;
        seen[from] = true;
        todo.push(from);
        while (!todo.empty()) {
            const auto v = todo.front();
            todo.pop();
            for (const Arc &arc : arcs_[v]) {
                if (!seen[arc.target]) {
                    seen[arc.target] = true;
                    todo.push(arc.target);
                }
            }
        }
        return seen;
    }

private:
    std::vector<Asm> nodes_;
    std::vector<int> betas_;
    std::map<std::vector<int>, std::size_t> index_;
    std::vector<std::vector<Arc>> arcs_;
};

inline AsmGraph build_graph(int n, bool allow_large = false) { return AsmGraph(enumerate_asms(n, allow_large)); }

// Classical Bruhat graph on S_n: u -> u t_ij whenever (i, j) is an inversion
// of u t_ij.
inline std::vector<std::pair<Permutation, Permutation>> bruhat_graph_edges(int n)
{
    std::vector<std::pair<Permutation, Permutation>> out;
    for (const auto &u : enumerate_permutations(n)) {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                auto images = u.images();
                std::swap(images[i - 1], images[j - 1]);
                Permutation v(images);
                if (inversion_count(u) < inversion_count(v)) out.emplace_back(u, v);
            }
    }
    return out;
}

struct DotOptions {
    bool color_by_type = true;
    bool rank_by_beta = true;
};

inline std::string export_dot(const AsmGraph &g, const DotOptions &options = {})
{
    static constexpr std::array<const char *, 16> palette{
        "black",      "red3",      "blue3",     "darkgreen", "orange3",   "purple3",  "brown",   "deeppink3",
        "turquoise4", "goldenrod", "slateblue", "olivedrab", "firebrick", "navy",     "sienna",  "gray40"};
    std::ostringstream out;
    out << "digraph asm_graph_" << g.n() << " {\n";
    out << "  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t v = 0; v < g.node_count(); ++v) {
        out << "  " << v << " [label=\"" << v << ":" << g.beta_of(v) << "\"];\n";
    }
    if (options.rank_by_beta) {
        std::map<int, std::vector<std::size_t>> by_beta;
        for (std::size_t v = 0; v < g.node_count(); ++v) by_beta[g.beta_of(v)].push_back(v);
        for (const auto &[b, vs] : by_beta) {
            out << "  { rank=same;";
            for (auto v : vs) out << " " << v << ";";
            out << " }\n";
        }
    }
    for (std::size_t v = 0; v < g.node_count(); ++v) {
        for (const auto &arc : g.arcs(v)) {
            out << "  " << v << " -> " << arc.target << " [label=" << arc.edge_type;
            if (options.color_by_type) out << ", color=\"" << palette[arc.edge_type - 1] << "\"";
            out << "];\n";
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace asmg
