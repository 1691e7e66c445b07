#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "kronq/representation.hpp"

namespace kronq {

/// Vertex v_k^{(layer)} of a coefficient quiver. Vertices keep their ambient
/// index when passing to sub- and quotient quivers, so the torus weight
/// (= index - 1) is inherited for free.
struct QVertex {
    int layer;  // 1 or 2
    int index;  // k >= 1

    friend constexpr auto operator<=>(const QVertex&, const QVertex&) = default;

    std::string to_string() const {
        return std::to_string(index) + "^(" + std::to_string(layer) + ")";
    }
};

enum class ArrowLabel { A, B };

struct QArrow {
    QVertex src;
    QVertex dst;
    ArrowLabel label;

    friend constexpr auto operator<=>(const QArrow&, const QArrow&) = default;
};

/// Coefficient quiver: the standard basis vectors of a representation as
/// vertices, one labeled arrow per nonzero matrix entry of m_a / m_b.
/// Every component is a string (the underlying graph is a path).
class CoeffQuiver {
  public:
    CoeffQuiver() = default;
    CoeffQuiver(std::vector<QVertex> vertices, std::vector<QArrow> arrows)
        : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
        std::sort(vertices_.begin(), vertices_.end());
        std::sort(arrows_.begin(), arrows_.end());
        for (const auto& a : arrows_) {
            if (a.src.layer != 1 || a.dst.layer != 2)
                throw std::invalid_argument("CoeffQuiver: arrows must go layer 1 -> 2");
            if (!has_vertex(a.src) || !has_vertex(a.dst))
                throw std::invalid_argument("CoeffQuiver: arrow endpoint not a vertex");
        }
    }

    const std::vector<QVertex>& vertices() const { return vertices_; }
    const std::vector<QArrow>& arrows() const { return arrows_; }
    bool empty() const { return vertices_.empty(); }

    bool has_vertex(const QVertex& v) const {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }

    /// Torus weight of a basis vector: t_lambda . v_k = lambda^(k-1) v_k.
    static int weight(const QVertex& v) { return v.index - 1; }

    DimVector dim() const {
        int c1 = 0, c2 = 0;
        for (const auto& v : vertices_) (v.layer == 1 ? c1 : c2)++;
        return DimVector(c1, c2);
    }

    std::vector<QArrow> arrows_from(const QVertex& v) const {
        std::vector<QArrow> out;
        for (const auto& a : arrows_)
            if (a.src == v) out.push_back(a);
        return out;
    }

    std::vector<QArrow> arrows_into(const QVertex& v) const {
        std::vector<QArrow> in;
        for (const auto& a : arrows_)
            if (a.dst == v) in.push_back(a);
        return in;
    }

    /// Induced subquiver on a vertex subset (arrows with both ends inside).
    CoeffQuiver induced(const std::set<QVertex>& keep) const {
        std::vector<QVertex> vs;
        for (const auto& v : vertices_)
            if (keep.count(v)) vs.push_back(v);
        if (vs.size() != keep.size())
            throw std::invalid_argument("induced: subset contains unknown vertices");
        std::vector<QArrow> as;
        for (const auto& a : arrows_)
            if (keep.count(a.src) && keep.count(a.dst)) as.push_back(a);
        return CoeffQuiver(std::move(vs), std::move(as));
    }

    /// Connected components, ordered by their minimal vertex.
    std::vector<CoeffQuiver> components() const {
        std::map<QVertex, int> comp;
        int next = 0;
        for (const auto& v : vertices_) comp[v] = next++;
        // Union by repeated relabeling; quivers here are tiny.
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& a : arrows_) {
                int lo = std::min(comp[a.src], comp[a.dst]);
                if (comp[a.src] != lo || comp[a.dst] != lo) {
                    comp[a.src] = comp[a.dst] = lo;
                    changed = true;
                }
            }
        }
        std::map<int, std::set<QVertex>> groups;
        for (const auto& v : vertices_) groups[comp[v]].insert(v);
        std::vector<CoeffQuiver> out;
        for (const auto& [_, verts] : groups) out.push_back(induced(verts));
        return out;
    }

    /// Checks this is a disjoint union of strings with the Kronecker labeling:
    /// per vertex at most one a-arrow and one b-arrow on each side, and every
    /// component a path. Throws otherwise.
    void validate_strings() const {
        for (const auto& v : vertices_) {
            int a_out = 0, b_out = 0, a_in = 0, b_in = 0;
            for (const auto& ar : arrows_) {
                if (ar.src == v) (ar.label == ArrowLabel::A ? a_out : b_out)++;
                if (ar.dst == v) (ar.label == ArrowLabel::A ? a_in : b_in)++;
            }
            if (a_out > 1 || b_out > 1 || a_in > 1 || b_in > 1)
                throw std::invalid_argument("CoeffQuiver: duplicate arrow label at " +
                                            v.to_string());
        }
        for (const auto& c : components()) {
            if (c.arrows().size() + 1 != c.vertices().size())
                throw std::invalid_argument("CoeffQuiver: component is not a string");
            for (const auto& v : c.vertices()) {
                size_t deg = c.arrows_from(v).size() + c.arrows_into(v).size();
                if (deg > 2)
                    throw std::invalid_argument("CoeffQuiver: vertex of degree > 2");
            }
        }
    }

    /// For a connected string, the vertices in path order together with the
    /// arrow labels between consecutive vertices. Orientation is normalized
    /// to start at the endpoint with the smaller (layer, index).
    std::pair<std::vector<QVertex>, std::vector<ArrowLabel>> path() const {
        if (vertices_.empty()) throw std::logic_error("path: empty quiver");
        if (vertices_.size() == 1) return {{vertices_[0]}, {}};
        std::map<QVertex, std::vector<std::pair<QVertex, ArrowLabel>>> adj;
        for (const auto& a : arrows_) {
            adj[a.src].push_back({a.dst, a.label});
            adj[a.dst].push_back({a.src, a.label});
        }
        QVertex start = vertices_[0];
        bool found = false;
        for (const auto& v : vertices_) {
            if (adj[v].size() == 1) {
                start = v;
                found = true;
                break;
            }
        }
        if (!found || arrows_.size() + 1 != vertices_.size())
            throw std::invalid_argument("path: not a string component");
        std::vector<QVertex> order{start};
        std::vector<ArrowLabel> labels;
        QVertex cur = start, prev = start;
        bool has_prev = false;
        while (order.size() < vertices_.size()) {
            bool stepped = false;
            for (const auto& [nxt, lab] : adj[cur]) {
                if (has_prev && nxt == prev) continue;
                if (std::find(order.begin(), order.end(), nxt) != order.end())
                    throw std::invalid_argument("path: cycle detected");
                labels.push_back(lab);
                order.push_back(nxt);
                prev = cur;
                has_prev = true;
                cur = nxt;
                stepped = true;
                break;
            }
            if (!stepped) throw std::invalid_argument("path: disconnected component");
        }
        return {order, labels};
    }

    int min_index() const {
        int m = vertices_.empty() ? 0 : vertices_[0].index;
        for (const auto& v : vertices_) m = std::min(m, v.index);
        return m;
    }

  private:
    std::vector<QVertex> vertices_;
    std::vector<QArrow> arrows_;
};

/// Coefficient quiver of an indecomposable in the standard basis.
/// Conventions (fixed once and for all, the regular case realizes
/// m_a = Id and m_b = J_n(0) with J v_k = v_{k+1}, v_n -> 0):
///   R_n : a: k^(1) -> k^(2) for all k;   b: k^(1) -> (k+1)^(2) for k < n
///   P_n : a: k^(1) -> k^(2);             b: k^(1) -> (k+1)^(2)
///   I_n : b: k^(1) -> k^(2) for k <= n;  a: k^(1) -> (k-1)^(2) for k >= 2
inline CoeffQuiver build_coeff_quiver(const Indecomposable& M) {
    std::vector<QVertex> vs;
    std::vector<QArrow> as;
    const int n = M.rank;
    const DimVector d = M.dim();
    for (int k = 1; k <= d.d1; ++k) vs.push_back({1, k});
    for (int k = 1; k <= d.d2; ++k) vs.push_back({2, k});
    switch (M.kind) {
        case RepKind::Regular:
            for (int k = 1; k <= n; ++k) {
                as.push_back({{1, k}, {2, k}, ArrowLabel::A});
                if (k < n) as.push_back({{1, k}, {2, k + 1}, ArrowLabel::B});
            }
            break;
        case RepKind::Preprojective:
            for (int k = 1; k <= n; ++k) {
                as.push_back({{1, k}, {2, k}, ArrowLabel::A});
                as.push_back({{1, k}, {2, k + 1}, ArrowLabel::B});
            }
            break;
        case RepKind::Preinjective:
            for (int k = 1; k <= n + 1; ++k) {
                if (k <= n) as.push_back({{1, k}, {2, k}, ArrowLabel::B});
                if (k >= 2) as.push_back({{1, k}, {2, k - 1}, ArrowLabel::A});
            }
            break;
    }
    return CoeffQuiver(std::move(vs), std::move(as));
}

/// A connected component of a fixed point or of its quotient, identified by
/// shape and by the minimal ambient index it occupies. Inside R_n a summand
/// is either the regular tail R_r (indices n-r+1..n of both layers) or a
/// placed preprojective k(P_r) on layer-1 indices k..k+r-1 and layer-2
/// indices k..k+r.
struct PlacedSummand {
    Indecomposable shape;
    int position;

    friend bool operator==(const PlacedSummand&, const PlacedSummand&) = default;

    std::string to_string() const {
        return shape.to_string() + "@" + std::to_string(position);
    }
};

/// Shape of a connected string by its layer counts.
inline Indecomposable classify_component(const CoeffQuiver& comp) {
    const DimVector d = comp.dim();
    if (d.d2 == d.d1 + 1) return P(d.d1);
    if (d.d1 == d.d2) return R(d.d1);
    if (d.d1 == d.d2 + 1) return I(d.d2);
    throw std::invalid_argument("classify_component: not a string shape " +
                                d.to_string());
}

inline std::vector<PlacedSummand> decompose(const CoeffQuiver& q) {
    std::vector<PlacedSummand> out;
    for (const auto& comp : q.components())
        out.push_back({classify_component(comp), comp.min_index()});
    std::sort(out.begin(), out.end(), [](const PlacedSummand& a, const PlacedSummand& b) {
        return a.position < b.position;
    });
    return out;
}

/// A torus-fixed point of Gr_e(M): a successor-closed vertex subset with
/// layer sizes (e1, e2), plus its summand decomposition.
struct FixedPoint {
    std::vector<int> s1;  // selected layer-1 indices, ascending
    std::vector<int> s2;  // selected layer-2 indices, ascending
    std::vector<PlacedSummand> summands;

    std::set<QVertex> vertex_set() const {
        std::set<QVertex> vs;
        for (int k : s1) vs.insert({1, k});
        for (int k : s2) vs.insert({2, k});
        return vs;
    }

    DimVector dim() const {
        return DimVector(static_cast<int>(s1.size()), static_cast<int>(s2.size()));
    }

    friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
};

namespace detail {

/// Calls fn on every k-subset of the (sorted) pool, in lexicographic order.
template <typename Fn>
void for_each_subset(const std::vector<int>& pool, int k, Fn&& fn) {
    if (k < 0 || static_cast<size_t>(k) > pool.size()) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    const int n = static_cast<int>(pool.size());
    while (true) {
        std::vector<int> chosen(k);
        for (int i = 0; i < k; ++i) chosen[i] = pool[idx[i]];
        fn(chosen);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

/// All successor-closed vertex subsets of Gamma(M) with layer sizes (e1,e2),
/// in lexicographic order on (s1, s2). Choice of s1 determines a mandatory
/// core of s2 (the arrow targets); the remaining layer-2 vertices are free.
inline std::vector<FixedPoint> enumerate_fixed_points(const Indecomposable& M,
                                                      const DimVector& e) {
    const CoeffQuiver gamma = build_coeff_quiver(M);
    const DimVector d = M.dim();
    std::vector<FixedPoint> result;
    if (e.d1 > d.d1 || e.d2 > d.d2) return result;
    std::vector<int> layer1(d.d1), layer2(d.d2);
    for (int k = 1; k <= d.d1; ++k) layer1[k - 1] = k;
    for (int k = 1; k <= d.d2; ++k) layer2[k - 1] = k;

    detail::for_each_subset(layer1, e.d1, [&](const std::vector<int>& s1) {
        std::set<int> required;
        for (int k : s1)
            for (const auto& a : gamma.arrows_from({1, k})) required.insert(a.dst.index);
        if (static_cast<int>(required.size()) > e.d2) return;
        std::vector<int> pool;
        for (int k : layer2)
            if (!required.count(k)) pool.push_back(k);
        const int need = e.d2 - static_cast<int>(required.size());
        detail::for_each_subset(pool, need, [&](const std::vector<int>& extra) {
            std::vector<int> s2(required.begin(), required.end());
            s2.insert(s2.end(), extra.begin(), extra.end());
            std::sort(s2.begin(), s2.end());
            FixedPoint fp{s1, s2, {}};
            fp.summands = decompose(gamma.induced(fp.vertex_set()));
            result.push_back(std::move(fp));
        });
    });
    std::sort(result.begin(), result.end(), [](const FixedPoint& a, const FixedPoint& b) {
        return std::tie(a.s1, a.s2) < std::tie(b.s1, b.s2);
    });
    return result;
}

/// Induced subquiver of Gamma(M) on the vertices of L (with ambient weights).
inline CoeffQuiver fixed_point_quiver(const Indecomposable& M, const FixedPoint& L) {
    return build_coeff_quiver(M).induced(L.vertex_set());
}

/// Coordinate quotient M/L: the induced subquiver on the complement of L.
/// Requires L successor-closed; the complement is then predecessor-closed.
inline CoeffQuiver quotient_quiver(const Indecomposable& M, const FixedPoint& L) {
    const CoeffQuiver gamma = build_coeff_quiver(M);
    const std::set<QVertex> sel = L.vertex_set();
    for (const auto& v : sel)
        if (!gamma.has_vertex(v))
            throw std::invalid_argument("quotient_quiver: vertex outside Gamma(M)");
    for (const auto& a : gamma.arrows())
        if (sel.count(a.src) && !sel.count(a.dst))
            throw std::invalid_argument("quotient_quiver: subset not successor-closed");
    std::set<QVertex> comp;
    for (const auto& v : gamma.vertices())
        if (!sel.count(v)) comp.insert(v);
    CoeffQuiver q = gamma.induced(comp);
    for (const auto& a : gamma.arrows())
        if (comp.count(a.dst) && !comp.count(a.src))
            throw std::logic_error("quotient_quiver: complement not predecessor-closed");
    return q;
}

}  // namespace kronq
