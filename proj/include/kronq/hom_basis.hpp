#pragma once

#include <stdexcept>
#include <vector>

#include "kronq/coeff_quiver.hpp"

namespace kronq {

/// A standard-basis homomorphism f between string representations, given by a
/// connected predecessor-closed subquiver gamma of the source, an isomorphic
/// successor-closed subquiver gamma' of the target, and the (unique) label-
/// and layer-preserving vertex bijection between them. f sends each vertex of
/// gamma to its partner and everything else to zero.
///
/// The torus scales f by lambda^weight where
///   weight = weight(anchor of gamma') - weight(anchor of gamma),
/// anchors being a matched vertex pair. When both quivers inherit their
/// weights from a common ambient Gamma(R_n) the difference is the same for
/// every matched pair, and the positive-weight elements span the attracting
/// directions (maps shifting basis vectors to higher index).
struct HomBasisElement {
    std::vector<QVertex> gamma;        // path order in the source
    std::vector<QVertex> gamma_prime;  // matched path order in the target
    int weight;
};

namespace detail {

// [layer, label, layer, label, ...] along a subpath; arrow directions are
// implied by the layers.
inline std::vector<int> signature(const std::vector<QVertex>& order,
                                  const std::vector<ArrowLabel>& labels, int i, int j,
                                  bool reversed) {
    std::vector<int> sig;
    if (!reversed) {
        for (int p = i; p <= j; ++p) {
            sig.push_back(order[p].layer);
            if (p < j) sig.push_back(labels[p] == ArrowLabel::A ? 10 : 11);
        }
    } else {
        for (int p = j; p >= i; --p) {
            sig.push_back(order[p].layer);
            if (p > i) sig.push_back(labels[p - 1] == ArrowLabel::A ? 10 : 11);
        }
    }
    return sig;
}

struct Subpath {
    std::vector<QVertex> order;  // full component path
    std::vector<ArrowLabel> labels;
    int i, j;

    std::vector<QVertex> vertices() const {
        return {order.begin() + i, order.begin() + j + 1};
    }
};

// Connected predecessor-closed subpaths of one string component: contiguous
// ranges whose excluded neighbors are arrow targets, never sources.
inline std::vector<Subpath> pred_closed_subpaths(const CoeffQuiver& comp) {
    auto [order, labels] = comp.path();
    const int len = static_cast<int>(order.size());
    std::vector<Subpath> out;
    for (int i = 0; i < len; ++i) {
        if (i > 0 && order[i - 1].layer != 2) continue;
        for (int j = i; j < len; ++j) {
            if (j + 1 < len && order[j + 1].layer != 2) continue;
            out.push_back({order, labels, i, j});
        }
    }
    return out;
}

// Connected successor-closed subpaths: excluded neighbors are sources.
inline std::vector<Subpath> succ_closed_subpaths(const CoeffQuiver& comp) {
    auto [order, labels] = comp.path();
    const int len = static_cast<int>(order.size());
    std::vector<Subpath> out;
    for (int i = 0; i < len; ++i) {
        if (i > 0 && order[i - 1].layer != 1) continue;
        for (int j = i; j < len; ++j) {
            if (j + 1 < len && order[j + 1].layer != 1) continue;
            out.push_back({order, labels, i, j});
        }
    }
    return out;
}

}  // namespace detail

/// The standard basis of Hom(L, L') for coefficient-quiver presentations.
/// The element count equals the closed Hom-dimension of the corresponding
/// descriptors. Both quivers must be disjoint unions of Kronecker strings.
inline std::vector<HomBasisElement> hom_standard_basis(const CoeffQuiver& L,
                                                       const CoeffQuiver& Lp) {
    L.validate_strings();
    Lp.validate_strings();
    std::vector<HomBasisElement> basis;
    if (L.empty() || Lp.empty()) return basis;

    std::vector<detail::Subpath> gammas, gamma_primes;
    for (const auto& comp : L.components())
        for (auto& sp : detail::pred_closed_subpaths(comp)) gammas.push_back(sp);
    for (const auto& comp : Lp.components())
        for (auto& sp : detail::succ_closed_subpaths(comp)) gamma_primes.push_back(sp);

    for (const auto& g : gammas) {
        const auto fwd = detail::signature(g.order, g.labels, g.i, g.j, false);
        const auto bwd = detail::signature(g.order, g.labels, g.i, g.j, true);
        for (const auto& gp : gamma_primes) {
            if (gp.j - gp.i != g.j - g.i) continue;
            const auto target = detail::signature(gp.order, gp.labels, gp.i, gp.j, false);
            std::vector<QVertex> gv;
            if (target == fwd) {
                gv = g.vertices();
            } else if (target == bwd) {
                gv = g.vertices();
                std::reverse(gv.begin(), gv.end());
            } else {
                continue;
            }
            // Strings have no label-preserving self-symmetry (labels alternate
            // along a path), so each matched pair is exactly one basis element.
            const std::vector<QVertex> gpv = gp.vertices();
            const int w =
                CoeffQuiver::weight(gpv.front()) - CoeffQuiver::weight(gv.front());
            basis.push_back({std::move(gv), gpv, w});
        }
    }
    return basis;
}

/// dim Hom(L, L')^+ : the number of standard basis elements of strictly
/// positive torus weight.
inline long long hom_plus_dim(const CoeffQuiver& L, const CoeffQuiver& Lp) {
    long long count = 0;
    for (const auto& el : hom_standard_basis(L, Lp))
        if (el.weight > 0) ++count;
    return count;
}

/// Dimension of the attracting cell of the fixed point L in Gr_e(M):
/// dim Hom(L, M/L)^+, with weights inherited from Gamma(M). For M = R_n this
/// is the Bialynicki-Birula cell dimension.
inline long long cell_dimension(const Indecomposable& M, const FixedPoint& L) {
    return hom_plus_dim(fixed_point_quiver(M, L), quotient_quiver(M, L));
}

namespace detail {

inline std::set<QVertex> placed_vertices(int n, const PlacedSummand& s) {
    std::set<QVertex> vs;
    const int k = s.position, r = s.shape.rank;
    if (s.shape.kind == RepKind::Preprojective) {
        for (int t = k; t <= k + r - 1; ++t) vs.insert({1, t});
        for (int t = k; t <= k + r; ++t) vs.insert({2, t});
    } else if (s.shape.kind == RepKind::Regular) {
        for (int t = n - r + 1; t <= n; ++t) {
            vs.insert({1, t});
            vs.insert({2, t});
        }
    } else {
        throw std::invalid_argument("placed summand of R_n cannot be preinjective");
    }
    return vs;
}

}  // namespace detail

/// Cell dimension computed by the recursion
///   dim X_{L' (+) L''} = dim X_{L'} + dim X_{L''} - <dim L', dim L''>
/// applied left-to-right over the summands in increasing-position order, with
/// base cases dim X_{k(P_r)} = n - k and dim X_{R_r} = 0. The recursion step
/// requires Hom(L', L'')^+ = Hom(L', L''), which holds when L' sits strictly
/// left of L''; this is asserted and a violation reported as a logic error.
inline long long cell_dimension_recursive(int n,
                                          const std::vector<PlacedSummand>& summands) {
    if (n < 0) throw std::invalid_argument("cell_dimension_recursive: negative rank");
    if (summands.empty()) return 0;
    for (size_t i = 0; i < summands.size(); ++i) {
        const auto& s = summands[i];
        if (s.shape.kind == RepKind::Preprojective) {
            if (s.position < 1 || s.position + s.shape.rank > n)
                throw std::invalid_argument("placed preprojective out of range");
            if (i + 1 < summands.size() &&
                summands[i + 1].position <= s.position + s.shape.rank)
                throw std::invalid_argument("summands unsorted or overlapping");
        } else if (s.shape.kind == RepKind::Regular) {
            if (s.position != n - s.shape.rank + 1)
                throw std::invalid_argument("regular summand must occupy the tail");
            if (i + 1 != summands.size())
                throw std::invalid_argument("regular summand must come last");
        } else {
            throw std::invalid_argument("preinjective summand inside R_n");
        }
    }

    const CoeffQuiver gamma = build_coeff_quiver(R(n));
    auto base = [n](const PlacedSummand& s) -> long long {
        return s.shape.kind == RepKind::Regular ? 0 : n - s.position;
    };

    long long dim = base(summands[0]);
    DimVector acc = summands[0].shape.dim();
    std::set<QVertex> prefix = detail::placed_vertices(n, summands[0]);
    for (size_t i = 1; i < summands.size(); ++i) {
        const auto& s = summands[i];
        const auto next = detail::placed_vertices(n, s);
        const auto hom = hom_standard_basis(gamma.induced(prefix), gamma.induced(next));
        for (const auto& el : hom)
            if (el.weight <= 0)
                throw std::logic_error(
                    "cell_dimension_recursive: Hom^+ hypothesis violated");
        dim += base(s) - euler_form(acc, s.shape.dim());
        acc += s.shape.dim();
        prefix.insert(next.begin(), next.end());
    }
    return dim;
}

}  // namespace kronq
