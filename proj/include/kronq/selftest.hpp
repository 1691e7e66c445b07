#pragma once

#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kronq/cluster.hpp"
#include "kronq/fq_oracle.hpp"
#include "kronq/hom_basis.hpp"
#include "kronq/invariants.hpp"

namespace kronq {

struct CriterionResult {
    int id;
    std::string name;
    bool pass;
    double seconds;
    std::string detail;  // first failure, empty when passing
};

namespace selftest {

/// Multiset of attracting-cell dimensions of Gr_e(R_n), assembled into a
/// Poincare polynomial straight from the fixed-point enumeration.
inline GradedPoly poincare_from_cells(int n, const DimVector& e) {
    std::vector<long long> coeffs;
    for (const auto& fp : enumerate_fixed_points(R(n), e)) {
        const long long d = cell_dimension(R(n), fp);
        if (static_cast<size_t>(d) >= coeffs.size()) coeffs.resize(d + 1, 0);
        ++coeffs[d];
    }
    return GradedPoly(std::move(coeffs));
}

template <typename Fn>
CriterionResult timed(int id, std::string name, double budget_seconds, Fn&& body) {
    CriterionResult res{id, std::move(name), true, 0.0, ""};
    const auto t0 = std::chrono::steady_clock::now();
    try {
        std::string detail = body();
        if (!detail.empty()) {
            res.pass = false;
            res.detail = std::move(detail);
        }
    } catch (const std::exception& ex) {
        res.pass = false;
        res.detail = std::string("exception: ") + ex.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_seconds > 0 && res.seconds > budget_seconds) {
        res.pass = false;
        if (res.detail.empty()) {
            std::ostringstream out;
            out << "runtime " << res.seconds << "s exceeds " << budget_seconds << "s";
            res.detail = out.str();
        }
    }
    return res;
}

inline CriterionResult master_cell_identity() {
    return timed(1, "master cell identity (cells vs closed form, n <= 8)", 30.0, [] {
        for (int n = 1; n <= 8; ++n)
            for (int e1 = 0; e1 <= n; ++e1)
                for (int e2 = e1; e2 <= n; ++e2) {
                    const DimVector e(e1, e2);
                    if (poincare_from_cells(n, e) != poincare(R(n), e))
                        return "mismatch at n=" + std::to_string(n) + " e=" + e.to_string();
                }
        return std::string();
    });
}

inline CriterionResult betti_special_case() {
    return timed(2, "special-case Betti formula (n <= 10, e2 = e1+1)", 1.0, [] {
        for (int n = 1; n <= 10; ++n)
            for (int e1 = 0; e1 <= n - 1; ++e1)
                if (betti_special(n, e1) != poincare(R(n), DimVector(e1, e1 + 1)))
                    return "mismatch at n=" + std::to_string(n) +
                           " e1=" + std::to_string(e1);
        return std::string();
    });
}

inline CriterionResult lefschetz_oracle() {
    return timed(3, "Lefschetz point-count oracle (n <= 4, q in {2,3})", 60.0, [] {
        std::vector<Indecomposable> reps;
        for (int n = 0; n <= 4; ++n) {
            reps.push_back(P(n));
            reps.push_back(I(n));
            if (n >= 1) reps.push_back(R(n));
        }
        for (const auto& M : reps)
            for (int q : {2, 3}) {
                const DimVector d = M.dim();
                const auto rep = matrix_rep(M, q);
                for (int e1 = 0; e1 <= d.d1; ++e1)
                    for (int e2 = 0; e2 <= d.d2; ++e2) {
                        const DimVector e(e1, e2);
                        if (count_points(rep, e) != poincare(M, e).eval(q))
                            return M.to_string() + " e=" + e.to_string() +
                                   " q=" + std::to_string(q) + " count mismatch";
                    }
            }
        return std::string();
    });
}

inline CriterionResult recursion_vs_hom_plus() {
    return timed(4, "recursive cell dimension vs Hom^+ (n <= 8)", 0.0, [] {
        for (int n = 1; n <= 8; ++n)
            for (int e1 = 0; e1 <= n; ++e1)
                for (int e2 = e1; e2 <= n; ++e2)
                    for (const auto& fp : enumerate_fixed_points(R(n), DimVector(e1, e2)))
                        if (cell_dimension(R(n), fp) !=
                            cell_dimension_recursive(n, fp.summands))
                            return "mismatch at n=" + std::to_string(n) + " e=(" +
                                   std::to_string(e1) + "," + std::to_string(e2) + ")";
        return std::string();
    });
}

inline CriterionResult duality() {
    return timed(5, "duality P(R_n, e) = P(R_n, e*) (n <= 10)", 0.0, [] {
        for (int n = 1; n <= 10; ++n)
            for (int e1 = 0; e1 <= n; ++e1)
                for (int e2 = 0; e2 <= n; ++e2) {
                    const DimVector e(e1, e2);
                    if (poincare(R(n), e) != poincare(R(n), dual_e(n, e)))
                        return "mismatch at n=" + std::to_string(n) + " e=" + e.to_string();
                }
        return std::string();
    });
}

inline CriterionResult euler_characteristics() {
    return timed(6, "fixed-point count = binomial formula = P(1) (n <= 8)", 0.0, [] {
        for (int n = 1; n <= 8; ++n)
            for (int e1 = 0; e1 <= n; ++e1)
                for (int e2 = e1; e2 <= n; ++e2) {
                    const DimVector e(e1, e2);
                    const long long fixed =
                        static_cast<long long>(enumerate_fixed_points(R(n), e).size());
                    const long long binomial = detail::binom(e2, e1) *
                                               detail::binom(n - e1, e2 - e1);
                    if (fixed != binomial || fixed != poincare(R(n), e).eval(1))
                        return "mismatch at n=" + std::to_string(n) + " e=" + e.to_string();
                }
        return std::string();
    });
}

inline CriterionResult z_identities() {
    return timed(7, "z_n: geometric = recurrence = s_n - s_{n-2} (n <= 6)", 5.0, [] {
        for (int n = 1; n <= 6; ++n) {
            const LaurentPoly rec = z_n_recurrence(n);
            if (z_n_geometric(n) != rec) return "geometric != recurrence at n=" + std::to_string(n);
            const LaurentPoly diff = n >= 2 ? s_n(n) - s_n(n - 2) : s_n(1);
            if (rec != diff) return "recurrence != s_n - s_{n-2} at n=" + std::to_string(n);
        }
        return std::string();
    });
}

inline CriterionResult u_identities() {
    return timed(8, "u_n: geometric = recurrence (n <= 5)", 10.0, [] {
        for (int n = 1; n <= 5; ++n)
            if (u_n_geometric(n) != u_n_recurrence(n))
                return "mismatch at n=" + std::to_string(n);
        return std::string();
    });
}

inline CriterionResult cc_alignment() {
    return timed(9, "CC(P_n) = x_{-n}, CC(I_n) = x_{n+3} (n <= 4)", 0.0, [] {
        for (int n = 0; n <= 4; ++n) {
            if (cc_map_a11(RepDescriptor{P(n)}) != cluster_var_a11(-n))
                return "CC(P_" + std::to_string(n) + ") != x_" + std::to_string(-n);
            if (cc_map_a11(RepDescriptor{I(n)}) != cluster_var_a11(n + 3))
                return "CC(I_" + std::to_string(n) + ") != x_" + std::to_string(n + 3);
        }
        return std::string();
    });
}

inline CriterionResult laurent_phenomenon() {
    return timed(10, "Laurent phenomenon: exact divisions for |k|,|m| <= 12", 0.0, [] {
        try {
            for (int k = -12; k <= 12; ++k)
                if (cluster_var_a11(k).is_zero()) return std::string("a11 variable vanished");
            for (int m = -12; m <= 12; ++m)
                if (cluster_var_a21(m).is_zero()) return std::string("a21 variable vanished");
        } catch (const inexact_division& ex) {
            return std::string("inexact division: ") + ex.what();
        }
        return std::string();
    });
}

inline CriterionResult alpha_beta() {
    return timed(11, "alpha <-> beta cell bijection (n <= 6)", 0.0, [] {
        for (int n = 1; n <= 6; ++n)
            for (int e1 = 0; e1 <= n; ++e1)
                for (int e2 = e1 + 1; e2 <= n; ++e2) {
                    const DimVector e(e1, e2);
                    const auto alphas = alpha_set(n, e);
                    const auto betas = beta_set(n, e);
                    std::set<BetaElement> image;
                    for (const auto& a : alphas) {
                        const BetaElement b = alpha_to_beta(n, e, a);
                        if (!beta_valid(n, e, b))
                            return "image outside beta at n=" + std::to_string(n) +
                                   " e=" + e.to_string();
                        if (alpha_cell_dim(n, e, a) != beta_cell_dim(n, e, b))
                            return "dimension not preserved at n=" + std::to_string(n) +
                                   " e=" + e.to_string();
                        image.insert(b);
                    }
                    if (image.size() != alphas.size() || image.size() != betas.size())
                        return "not a bijection at n=" + std::to_string(n) +
                               " e=" + e.to_string();
                }
        return std::string();
    });
}

inline CriterionResult positivity() {
    return timed(12, "positivity of z_1..z_4, u_1..u_3, random cluster monomials", 0.0, [] {
        const std::vector<int> bases11{1, 0, 3};
        const std::vector<int> bases21{1, 0, 2};
        for (int n = 1; n <= 4; ++n)
            for (int base : bases11)
                if (!positivity_check(z_n_recurrence(n), cluster_substitution_a11(base)))
                    return "z_" + std::to_string(n) + " negative in cluster base " +
                           std::to_string(base);
        for (int n = 1; n <= 3; ++n)
            for (int base : bases21)
                if (!positivity_check(u_n_recurrence(n), cluster_substitution_a21(base)))
                    return "u_" + std::to_string(n) + " negative in cluster base " +
                           std::to_string(base);
        std::mt19937 rng(12345);
        std::uniform_int_distribution<int> pick_k(-3, 6), pick_pow(0, 3);
        for (int trial = 0; trial < 10; ++trial) {
            const int k = pick_k(rng);
            const int a = pick_pow(rng), b = pick_pow(rng);
            const LaurentPoly mono =
                cluster_var_a11(k).pow(a) * cluster_var_a11(k + 1).pow(b);
            for (int base : bases11)
                if (!positivity_check(mono, cluster_substitution_a11(base)))
                    return "cluster monomial x_" + std::to_string(k) + "^" +
                           std::to_string(a) + " x_" + std::to_string(k + 1) + "^" +
                           std::to_string(b) + " negative in cluster base " +
                           std::to_string(base);
        }
        return std::string();
    });
}

}  // namespace selftest

/// Runs the full verification suite; one result per criterion.
inline std::vector<CriterionResult> run_acceptance() {
    return {
        selftest::master_cell_identity(), selftest::betti_special_case(),
        selftest::lefschetz_oracle(),     selftest::recursion_vs_hom_plus(),
        selftest::duality(),              selftest::euler_characteristics(),
        selftest::z_identities(),         selftest::u_identities(),
        selftest::cc_alignment(),         selftest::laurent_phenomenon(),
        selftest::alpha_beta(),           selftest::positivity(),
    };
}

}  // namespace kronq
