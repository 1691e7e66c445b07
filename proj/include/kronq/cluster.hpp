#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kronq/invariants.hpp"
#include "kronq/laurent.hpp"

namespace kronq {

inline constexpr int cluster_index_bound = 20;

namespace detail {

inline void check_cluster_bound(int k, int bound) {
    if (std::abs(k) > bound)
        throw std::invalid_argument("cluster: index exceeds configured bound");
}

inline long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Type A_1^(1): the Kronecker cluster algebra in Q(x1, x2).
// ---------------------------------------------------------------------------

/// Cluster variable x_k, generated from the seed {x1, x2} by the exchange
/// relation x_k x_{k+2} = x_{k+1}^2 + 1. Every division is exact (the Laurent
/// phenomenon); an inexact one would throw and indicates a logic error.
inline LaurentPoly cluster_var_a11(int k, int bound = cluster_index_bound) {
    detail::check_cluster_bound(k, bound);
    LaurentPoly lo = LaurentPoly::variable(2, 1);  // x1
    LaurentPoly hi = LaurentPoly::variable(2, 2);  // x2
    if (k == 1) return lo;
    if (k == 2) return hi;
    const LaurentPoly one = LaurentPoly::constant(2, 1);
    if (k > 2) {
        for (int j = 3; j <= k; ++j) {
            LaurentPoly next = exact_div(hi * hi + one, lo);
            lo = std::move(hi);
            hi = std::move(next);
        }
        return hi;
    }
    for (int j = 0; j >= k; --j) {
        LaurentPoly prev = exact_div(lo * lo + one, hi);
        hi = std::move(lo);
        lo = std::move(prev);
    }
    return lo;
}

/// The Caldero-Chapoton map for the Kronecker quiver: given the dimension
/// vector d and a table e -> chi(Gr_e(M)),
///   CC(M) = sum_e chi(e) x1^(2(d2-e2)) x2^(2 e1) / (x1^d1 x2^d2).
inline LaurentPoly cc_map_a11(const DimVector& d,
                              const std::map<DimVector, long long>& chi) {
    LaurentPoly out(2);
    for (const auto& [e, c] : chi) {
        if (!e.leq(d))
            throw std::invalid_argument("cc_map_a11: chi table exceeds dimension vector");
        out += LaurentPoly::monomial(2, {2 * (d.d2 - e.d2) - d.d1, 2 * e.d1 - d.d2},
                                     BigInt(c));
    }
    return out;
}

inline LaurentPoly cc_map_a11(const RepDescriptor& M) {
    return cc_map_a11(M.dim(), chi_table(M));
}

/// s_n = CC(R_n), with the full Euler characteristics of Gr_e(R_n).
inline LaurentPoly s_n(int n, int bound = cluster_index_bound) {
    if (n < 0) throw std::invalid_argument("s_n: negative index");
    detail::check_cluster_bound(n, bound);
    if (n == 0) return LaurentPoly::constant(2, 1);
    return cc_map_a11(RepDescriptor{R(n)});
}

/// z_n by the Chebyshev-style recurrence: z1 = x0 x3 - x1 x2,
/// z_{n+1} = z1 z_n - z_{n-1} with internal seed z0 = 2.
inline LaurentPoly z_n_recurrence(int n, int bound = cluster_index_bound) {
    if (n < 1) throw std::invalid_argument("z_n: index must be >= 1");
    detail::check_cluster_bound(n, bound);
    const LaurentPoly z1 =
        cluster_var_a11(0) * cluster_var_a11(3) - cluster_var_a11(1) * cluster_var_a11(2);
    LaurentPoly prev = LaurentPoly::constant(2, 2);  // z0
    LaurentPoly cur = z1;
    for (int j = 2; j <= n; ++j) {
        LaurentPoly next = z1 * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// z_n as the Caldero-Chapoton value of the smooth parts:
/// the chi table is e -> chi(Gr_e(R_n)^sm) = chi(X_0) - chi(X_1).
inline LaurentPoly z_n_geometric(int n, int bound = cluster_index_bound) {
    if (n < 1) throw std::invalid_argument("z_n: index must be >= 1");
    detail::check_cluster_bound(n, bound);
    std::map<DimVector, long long> chi;
    for (int e1 = 0; e1 <= n; ++e1)
        for (int e2 = e1; e2 <= n; ++e2) {
            const long long c = smooth_part_euler(GrassId(RepKind::Regular, n, {e1, e2}));
            if (c != 0) chi[DimVector(e1, e2)] = c;
        }
    return cc_map_a11(DimVector(n, n), chi);
}

/// CC^(k)(R_n): the Caldero-Chapoton sum restricted to the locally closed
/// stratum {N : dim Ext^1(N, R_n/N) = k}. CC^(0) recovers z_n and the sum
/// over k recovers s_n.
inline LaurentPoly cc_k_map(int n, int k, int bound = cluster_index_bound) {
    if (n < 1 || k < 0) throw std::invalid_argument("cc_k_map: bad arguments");
    detail::check_cluster_bound(n, bound);
    std::map<DimVector, long long> chi;
    for (int e1 = 0; e1 <= n; ++e1)
        for (int e2 = e1; e2 <= n; ++e2) {
            const long long c =
                stratum_euler_exact(GrassId(RepKind::Regular, n, {e1, e2}), k);
            if (c != 0) chi[DimVector(e1, e2)] = c;
        }
    return cc_map_a11(DimVector(n, n), chi);
}

// ---------------------------------------------------------------------------
// Type A_2^(1): the cluster algebra of the quiver 1 -> 2 -> 3, 1 -> 3,
// in Q(x1, x2, x3).
// ---------------------------------------------------------------------------

/// Cluster variable x_m from the seed {x1, x2, x3} and the exchange relation
/// x_m x_{m+3} = x_{m+1} x_{m+2} + 1.
inline LaurentPoly cluster_var_a21(int m, int bound = cluster_index_bound) {
    detail::check_cluster_bound(m, bound);
    std::vector<LaurentPoly> win{LaurentPoly::variable(3, 1),
                                 LaurentPoly::variable(3, 2),
                                 LaurentPoly::variable(3, 3)};
    if (1 <= m && m <= 3) return win[m - 1];
    const LaurentPoly one = LaurentPoly::constant(3, 1);
    if (m > 3) {
        for (int j = 4; j <= m; ++j) {
            LaurentPoly next = exact_div(win[1] * win[2] + one, win[0]);
            win[0] = std::move(win[1]);
            win[1] = std::move(win[2]);
            win[2] = std::move(next);
        }
        return win[2];
    }
    for (int j = 0; j >= m; --j) {
        LaurentPoly prev = exact_div(win[0] * win[1] + one, win[2]);
        win[2] = std::move(win[1]);
        win[1] = std::move(win[0]);
        win[0] = std::move(prev);
    }
    return win[0];
}

/// The two extra cluster variables: w = (x1 + x3)/x2 and
/// z = (x1 x2 + x2 x3 + 1)/(x1 x3).
inline std::pair<LaurentPoly, LaurentPoly> wz_vars() {
    const LaurentPoly x1 = LaurentPoly::variable(3, 1);
    const LaurentPoly x2 = LaurentPoly::variable(3, 2);
    const LaurentPoly x3 = LaurentPoly::variable(3, 3);
    const LaurentPoly one = LaurentPoly::constant(3, 1);
    return {exact_div(x1 + x3, x2), exact_div(x1 * x2 + x2 * x3 + one, x1 * x3)};
}

/// u_n by the recurrence u0 = 2, u1 = zw - 2, u_{n+1} = u1 u_n - u_{n-1}.
inline LaurentPoly u_n_recurrence(int n, int bound = cluster_index_bound) {
    if (n < 1) throw std::invalid_argument("u_n: index must be >= 1");
    detail::check_cluster_bound(n, bound);
    const auto [w, z] = wz_vars();
    const LaurentPoly u1 = z * w - LaurentPoly::constant(3, 2);
    LaurentPoly prev = LaurentPoly::constant(3, 2);  // u0
    LaurentPoly cur = u1;
    for (int j = 2; j <= n; ++j) {
        LaurentPoly next = u1 * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// u_n as the Caldero-Chapoton value of the smooth part of Gr_e(R_{n,2}),
/// the regular (1,1,1)-tube representation with maps (Id, Id, J_n(0)).
/// Projecting (N1,N2,N3) -> (N1,N3) fibers Gr_(e1,e2,e3)(R_{n,2}) over the
/// Kronecker Grassmannian Gr_(e1,e3)(R_n) with fiber Gr_(e2-e1)(e3-e1), so
///   chi(Gr_e(R_{n,2})^sm) = C(e3-e1, e2-e1) chi(Gr_(e1,e3)(R_n)^sm)
/// and
///   u_n = sum_e chi^sm x1^(2n-e2-e3) x2^(n-e3+e1) x3^(e1+e2) / (x1 x2 x3)^n.
inline LaurentPoly u_n_geometric(int n, int bound = cluster_index_bound) {
    if (n < 1) throw std::invalid_argument("u_n: index must be >= 1");
    detail::check_cluster_bound(n, bound);
    LaurentPoly out(3);
    for (int e1 = 0; e1 <= n; ++e1)
        for (int e3 = e1; e3 <= n; ++e3) {
            const long long base =
                smooth_part_euler(GrassId(RepKind::Regular, n, {e1, e3}));
            if (base == 0) continue;
            for (int e2 = e1; e2 <= e3; ++e2) {
                const long long chi = detail::binom(e3 - e1, e2 - e1) * base;
                out += LaurentPoly::monomial(
                    3, {2 * n - e2 - e3 - n, n - e3 + e1 - n, e1 + e2 - n}, BigInt(chi));
            }
        }
    return out;
}

// ---------------------------------------------------------------------------
// Positivity checks.
// ---------------------------------------------------------------------------

/// Expressions of the seed variables x1..xv in the cluster based at `base`
/// (the cluster {x_base, x_base+1} resp. {x_base, .., x_base+2}). Because the
/// exchange relation is translation invariant, x_j written in that cluster's
/// coordinates is the standard expression of x_{j-base+1}.
inline std::vector<LaurentPoly> cluster_substitution_a11(int base,
                                                         int bound = cluster_index_bound) {
    return {cluster_var_a11(2 - base, bound), cluster_var_a11(3 - base, bound)};
}

inline std::vector<LaurentPoly> cluster_substitution_a21(int base,
                                                         int bound = cluster_index_bound) {
    return {cluster_var_a21(2 - base, bound), cluster_var_a21(3 - base, bound),
            cluster_var_a21(4 - base, bound)};
}

/// True iff p, rewritten in the target cluster via exact substitution and
/// division, has only nonnegative coefficients.
inline bool positivity_check(const LaurentPoly& p,
                             const std::vector<LaurentPoly>& substitution) {
    return p.substitute(substitution).has_nonnegative_coeffs();
}

}  // namespace kronq
