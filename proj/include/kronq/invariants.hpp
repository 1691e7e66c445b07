#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kronq/graded_poly.hpp"
#include "kronq/representation.hpp"

namespace kronq {

/// Identifies a quiver Grassmannian Gr_e(M) for M one of P_n / R_n / I_n.
/// Unlike Indecomposable, rank 0 is allowed for the regular kind: R_0 is the
/// zero representation, which the stratification recursion bottoms out at.
struct GrassId {
    RepKind kind;
    int rank;
    DimVector e;

    GrassId(RepKind k, int n, DimVector dims) : kind(k), rank(n), e(dims) {
        if (n < 0) throw std::invalid_argument("GrassId: negative rank");
    }
    GrassId(const Indecomposable& M, DimVector dims) : GrassId(M.kind, M.rank, dims) {}

    friend bool operator==(const GrassId&, const GrassId&) = default;

    std::string to_string() const {
        return std::string("Gr_") + e.to_string() + "(" + kind_letter(kind) +
               std::to_string(rank) + ")";
    }
};

namespace detail {

inline GradedPoly poincare_preprojective(int n, int e1, int e2) {
    if (e1 < 0 || e2 < 0 || e1 > n || e2 > n + 1) return GradedPoly();
    if (e2 == 0) return e1 == 0 ? GradedPoly::one() : GradedPoly();
    return gaussian_binomial(e2 - 1, e1) * gaussian_binomial(n + 1 - e1, e2 - e1);
}

}  // namespace detail

/// Poincare polynomial of Gr_e(M) in the grading where coefficient i is
/// b_{2i}:
///   R_n : [e2 | e2-e1]_q [n-e1 | e2-e1]_q
///   P_n : [e2-1 | e1]_q [n+1-e1 | e2-e1]_q
///   I_n : computed through the isomorphism
///         Gr_(e1,e2)(I_n) ~ Gr_(n-e2,n+1-e1)(P_n),
///         which equals [e2+1 | e1]_q [n-e1 | e2-e1]_q wherever the binomial
///         form is defined (the corner e1 = e2+1 is only covered by the
///         isomorphism).
/// Out-of-range dimension vectors give the zero polynomial (empty variety).
inline GradedPoly poincare(const GrassId& id) {
    const int n = id.rank, e1 = id.e.d1, e2 = id.e.d2;
    switch (id.kind) {
        case RepKind::Regular:
            if (!(0 <= e1 && e1 <= e2 && e2 <= n)) return GradedPoly();
            return gaussian_binomial(e2, e2 - e1) * gaussian_binomial(n - e1, e2 - e1);
        case RepKind::Preprojective:
            return detail::poincare_preprojective(n, e1, e2);
        case RepKind::Preinjective:
            if (e1 < 0 || e2 < 0 || e1 > n + 1 || e2 > n) return GradedPoly();
            return detail::poincare_preprojective(n, n - e2, n + 1 - e1);
    }
    throw std::logic_error("unreachable");
}

inline GradedPoly poincare(const Indecomposable& M, const DimVector& e) {
    return poincare(GrassId(M, e));
}

/// Betti numbers of Gr_(e1,e1+1)(R_n) by the piecewise special-case formula
/// with s = min(e1, n-1-e1):
///   b_{2i} = i+1 (0 <= i <= s),  s+1 (s <= i <= n-1-s),  n-i (n-1-s <= i <= n-1).
inline GradedPoly betti_special(int n, int e1) {
    if (n < 1 || e1 < 0 || e1 > n - 1)
        throw std::invalid_argument("betti_special: need 0 <= e1 <= n-1");
    const int s = std::min(e1, n - 1 - e1);
    std::vector<long long> b(n, 0);
    for (int i = 0; i < n; ++i) {
        if (i <= s)
            b[i] = i + 1;
        else if (i <= n - 1 - s)
            b[i] = s + 1;
        else
            b[i] = n - i;
    }
    return GradedPoly(std::move(b));
}

/// chi(Gr_e(M)) = P(1); the binomial product of the closed formulas.
inline long long euler_char(const GrassId& id) { return poincare(id).eval(1); }
inline long long euler_char(const Indecomposable& M, const DimVector& e) {
    return euler_char(GrassId(M, e));
}

/// Euler characteristics of all Gr_f(M) for a direct sum M, as a table
/// f -> chi. Built by convolving the summands' tables:
/// chi(Gr_e(M (+) N)) = sum_f chi(Gr_f(M)) chi(Gr_(e-f)(N)).
inline std::map<DimVector, long long> chi_table(const RepDescriptor& M) {
    std::map<DimVector, long long> table{{DimVector(0, 0), 1}};
    for (const auto& s : M.summands()) {
        const DimVector d = s.dim();
        std::map<DimVector, long long> part;
        for (int f1 = 0; f1 <= d.d1; ++f1)
            for (int f2 = 0; f2 <= d.d2; ++f2) {
                long long chi = euler_char(s, DimVector(f1, f2));
                if (chi != 0) part[DimVector(f1, f2)] = chi;
            }
        std::map<DimVector, long long> next;
        for (const auto& [f, a] : table)
            for (const auto& [g, b] : part) next[f + g] += a * b;
        table = std::move(next);
    }
    return table;
}

inline long long euler_char_sum(const RepDescriptor& M, const DimVector& e) {
    const auto table = chi_table(M);
    const auto it = table.find(e);
    return it == table.end() ? 0 : it->second;
}

/// dim Gr_e(R_n) = (e2-e1)(n-(e2-e1)) for a nonempty variety.
inline long long dimension(const GrassId& id) {
    if (id.kind != RepKind::Regular)
        throw std::invalid_argument("dimension: defined here for R_n only");
    if (poincare(id).is_zero()) throw std::domain_error("dimension: empty variety");
    const long long m = id.e.d2 - id.e.d1;
    return m * (id.rank - m);
}

/// chi(X_k) where X_k = {N : K_N >= k} ~ Gr_(e-k delta)(R_(n-2k)).
/// Zero beyond the last stratum or for an empty ambient variety.
inline long long stratum_chi(int n, const DimVector& e, int k) {
    if (k < 0 || e.d1 > e.d2 || e.d2 > n) return 0;
    if (k > e.d1 || k > n - e.d2) return 0;
    return euler_char(GrassId(RepKind::Regular, n - 2 * k, e - k * delta));
}

/// The stratification X = X_0 > X_1 > ... > X_s of Gr_e(R_n), with
/// X_k ~ Gr_(e-k delta)(R_(n-2k)) and s = min(e1, n-e2). Empty list for an
/// empty variety.
inline std::vector<std::pair<int, GrassId>> strata(const GrassId& id) {
    if (id.kind != RepKind::Regular)
        throw std::invalid_argument("strata: defined for R_n only");
    std::vector<std::pair<int, GrassId>> out;
    const int n = id.rank, e1 = id.e.d1, e2 = id.e.d2;
    if (!(0 <= e1 && e1 <= e2 && e2 <= n)) return out;
    const int s = std::min(e1, n - e2);
    for (int k = 0; k <= s; ++k)
        out.emplace_back(k, GrassId(RepKind::Regular, n - 2 * k, id.e - k * delta));
    return out;
}

/// chi of the smooth locus: chi(X_0) - chi(X_1).
inline long long smooth_part_euler(const GrassId& id) {
    if (id.kind != RepKind::Regular)
        throw std::invalid_argument("smooth_part_euler: defined for R_n only");
    return stratum_chi(id.rank, id.e, 0) - stratum_chi(id.rank, id.e, 1);
}

/// chi of the locally closed stratum {N : K_N = k} = X_k \ X_{k+1}.
inline long long stratum_euler_exact(const GrassId& id, int k) {
    if (id.kind != RepKind::Regular)
        throw std::invalid_argument("stratum_euler_exact: defined for R_n only");
    if (k < 0) throw std::invalid_argument("stratum_euler_exact: negative level");
    return stratum_chi(id.rank, id.e, k) - stratum_chi(id.rank, id.e, k + 1);
}

/// The duality involution e -> e* = (n-e2, n-e1); Gr_e(R_n) ~ Gr_e*(R_n).
inline DimVector dual_e(int n, const DimVector& e) {
    if (!e.leq(DimVector(n, n)))
        throw std::domain_error("dual_e: e exceeds (n,n)");
    return DimVector(n - e.d2, n - e.d1);
}

// ---------------------------------------------------------------------------
// The index bijection between all-preprojective fixed points and pairs of
// Grassmannian cells, which proves the closed Poincare product formula.
// ---------------------------------------------------------------------------

/// Fixed-point data of a direct sum of m = e2-e1 placed preprojectives
/// k1(P_r1) (+) ... (+) km(P_rm) inside R_n:
///   1 <= k1 <= k1+r1 < k2 <= ... < km <= km+rm <= n,  sum r_i = e1.
struct AlphaElement {
    std::vector<int> positions;  // k_1 < ... < k_m
    std::vector<int> ranks;      // r_1, ..., r_m  (each >= 0)

    friend bool operator==(const AlphaElement&, const AlphaElement&) = default;
    friend auto operator<=>(const AlphaElement&, const AlphaElement&) = default;
};

/// Cell-index data on the product side: a strictly increasing m-tuple in
/// [1, n-e1] and a strictly increasing (m-1)-tuple b_2 < ... < b_m in [2, e2].
struct BetaElement {
    std::vector<int> a;
    std::vector<int> b;

    friend bool operator==(const BetaElement&, const BetaElement&) = default;
    friend auto operator<=>(const BetaElement&, const BetaElement&) = default;
};

inline bool alpha_valid(int n, const DimVector& e, const AlphaElement& x) {
    const int m = e.d2 - e.d1;
    if (m < 1) return false;
    if (static_cast<int>(x.positions.size()) != m ||
        static_cast<int>(x.ranks.size()) != m)
        return false;
    int total = 0;
    for (int i = 0; i < m; ++i) {
        if (x.ranks[i] < 0 || x.positions[i] < 1) return false;
        if (i > 0 && x.positions[i] <= x.positions[i - 1] + x.ranks[i - 1]) return false;
        total += x.ranks[i];
    }
    if (x.positions[m - 1] + x.ranks[m - 1] > n) return false;
    return total == e.d1;
}

inline bool beta_valid(int n, const DimVector& e, const BetaElement& x) {
    const int m = e.d2 - e.d1;
    if (m < 1) return false;
    if (static_cast<int>(x.a.size()) != m || static_cast<int>(x.b.size()) != m - 1)
        return false;
    for (int i = 0; i < m; ++i) {
        if (x.a[i] < 1 || x.a[i] > n - e.d1) return false;
        if (i > 0 && x.a[i] <= x.a[i - 1]) return false;
    }
    for (int i = 0; i < m - 1; ++i) {
        if (x.b[i] < 2 || x.b[i] > e.d2) return false;
        if (i > 0 && x.b[i] <= x.b[i - 1]) return false;
    }
    return true;
}

inline long long alpha_cell_dim(int n, const DimVector& e, const AlphaElement& x) {
    const int m = e.d2 - e.d1;
    long long dim = static_cast<long long>(n) * m - static_cast<long long>(m) * m;
    for (int i = 0; i < m; ++i) {
        dim -= x.positions[i];
        for (int j = 0; j <= i; ++j) dim += x.ranks[j] - x.ranks[i] + 1;
    }
    return dim;
}

inline long long beta_cell_dim(int n, const DimVector& e, const BetaElement& x) {
    const int m = e.d2 - e.d1;
    long long dim = static_cast<long long>(n) * m + (m - 1);
    for (int v : x.a) dim -= v;
    for (int v : x.b) dim -= v;
    return dim;
}

/// The bijection alpha -> beta:
///   a_1 = k_1,  a_i = k_i - (r_1 + ... + r_{i-1}),
///   b_i = r_m + r_{m-1} + ... + r_{m-i+2} + i       (i = 2..m).
/// Preserves the cell dimension.
inline BetaElement alpha_to_beta(int n, const DimVector& e, const AlphaElement& x) {
    if (!alpha_valid(n, e, x))
        throw std::invalid_argument("alpha_to_beta: input violates alpha constraints");
    const int m = e.d2 - e.d1;
    BetaElement out;
    int rsum = 0;
    for (int i = 0; i < m; ++i) {
        out.a.push_back(x.positions[i] - rsum);
        rsum += x.ranks[i];
    }
    int tail = 0;
    for (int i = 2; i <= m; ++i) {
        tail += x.ranks[m - i + 1];
        out.b.push_back(tail + i);
    }
    return out;
}

inline std::vector<AlphaElement> alpha_set(int n, const DimVector& e) {
    const int m = e.d2 - e.d1;
    std::vector<AlphaElement> out;
    if (m < 1) return out;
    AlphaElement cur;
    auto rec = [&](auto&& self, int i, int min_pos, int budget) -> void {
        if (i == m) {
            if (budget == 0) out.push_back(cur);
            return;
        }
        for (int k = min_pos; k <= n; ++k)
            for (int r = 0; r <= budget && k + r <= n; ++r) {
                cur.positions.push_back(k);
                cur.ranks.push_back(r);
                self(self, i + 1, k + r + 1, budget - r);
                cur.positions.pop_back();
                cur.ranks.pop_back();
            }
    };
    rec(rec, 0, 1, e.d1);
    return out;
}

inline std::vector<BetaElement> beta_set(int n, const DimVector& e) {
    const int m = e.d2 - e.d1;
    std::vector<BetaElement> out;
    if (m < 1) return out;
    BetaElement cur;
    auto rec_b = [&](auto&& self, int i, int min_b) -> void {
        if (i > m) {
            out.push_back(cur);
            return;
        }
        for (int b = min_b; b <= e.d2; ++b) {
            cur.b.push_back(b);
            self(self, i + 1, b + 1);
            cur.b.pop_back();
        }
    };
    auto rec_a = [&](auto&& self, int i, int min_a) -> void {
        if (i == m) {
            rec_b(rec_b, 2, 2);
            return;
        }
        for (int a = min_a; a <= n - e.d1; ++a) {
            cur.a.push_back(a);
            self(self, i + 1, a + 1);
            cur.a.pop_back();
        }
    };
    rec_a(rec_a, 0, 1);
    return out;
}

}  // namespace kronq
