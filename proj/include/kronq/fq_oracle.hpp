#pragma once

#include <stdexcept>
#include <thread>
#include <vector>

#include "kronq/representation.hpp"

namespace kronq {

/// Thrown when a brute-force count would exceed the hard resource bounds.
/// The oracle is a validation fixture, not a production counter.
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace fq {

using Vec = std::vector<int>;           // vector over F_q
using Mat = std::vector<Vec>;           // row-major
using Basis = std::vector<Vec>;         // reduced row-echelon rows

inline void check_bounds(int q, int n) {
    if (q != 2 && q != 3 && q != 5 && q != 7)
        throw resource_limit_error("fq: q must be a prime <= 7");
    if (n < 0 || n > 6)
        throw resource_limit_error("fq: ambient dimension must be <= 6");
    if (n >= 5 && q > 3)
        throw resource_limit_error("fq: dimension >= 5 requires q <= 3");
}

inline Vec mat_vec(const Mat& m, const Vec& v, int q) {
    Vec out(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i) {
        long long acc = 0;
        for (size_t j = 0; j < v.size(); ++j) acc += m[i][j] * v[j];
        out[i] = static_cast<int>(acc % q);
    }
    return out;
}

/// Reduces v against an echelon basis (rows with unit pivots at the given
/// columns); returns true iff v lies in the span.
inline bool in_span(const Basis& rows, const std::vector<int>& pivots, Vec v, int q) {
    for (size_t r = 0; r < rows.size(); ++r) {
        const int c = v[pivots[r]] % q;
        if (c == 0) continue;
        for (size_t j = 0; j < v.size(); ++j) v[j] = ((v[j] - c * rows[r][j]) % q + q) % q;
    }
    for (int x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace fq

/// All k-dimensional subspaces of F_q^n, one reduced row-echelon basis each:
/// pivot columns strictly increasing, unit pivots, zeros above/below pivots,
/// free entries only to the right of a row's pivot in non-pivot columns.
inline std::vector<fq::Basis> enumerate_subspaces(int q, int n, int k) {
    fq::check_bounds(q, n);
    if (k < 0 || k > n) throw std::invalid_argument("enumerate_subspaces: bad k");
    std::vector<fq::Basis> out;
    std::vector<int> pivots(k);
    auto emit = [&](const std::vector<int>& piv) {
        std::vector<bool> is_pivot(n, false);
        for (int p : piv) is_pivot[p] = true;
        std::vector<std::pair<int, int>> free_cells;  // (row, col)
        for (int r = 0; r < k; ++r)
            for (int c = piv[r] + 1; c < n; ++c)
                if (!is_pivot[c]) free_cells.emplace_back(r, c);
        fq::Basis rows(k, fq::Vec(n, 0));
        for (int r = 0; r < k; ++r) rows[r][piv[r]] = 1;
        const size_t nfree = free_cells.size();
        std::vector<int> assign(nfree, 0);
        while (true) {
            for (size_t i = 0; i < nfree; ++i)
                rows[free_cells[i].first][free_cells[i].second] = assign[i];
            out.push_back(rows);
            size_t i = 0;
            while (i < nfree && ++assign[i] == q) assign[i++] = 0;
            if (i == nfree) break;
        }
    };
    auto rec = [&](auto&& self, int row, int from) -> void {
        if (row == k) {
            emit(pivots);
            return;
        }
        for (int c = from; c <= n - (k - row); ++c) {
            pivots[row] = c;
            self(self, row + 1, c + 1);
        }
    };
    if (k == 0)
        out.push_back(fq::Basis{});
    else
        rec(rec, 0, 0);
    return out;
}

/// A Kronecker representation as explicit matrices over F_q, matching the
/// coefficient-quiver conventions (R_n: m_a = Id, m_b the nilpotent Jordan
/// block with J v_k = v_{k+1}; P_n / I_n: the two coordinate immersions and
/// their transposes).
struct FqMatrixRep {
    int q;
    DimVector d;
    fq::Mat m_a;  // d2 x d1
    fq::Mat m_b;  // d2 x d1
};

inline FqMatrixRep matrix_rep(const Indecomposable& M, int q) {
    const DimVector d = M.dim();
    fq::Mat a(d.d2, fq::Vec(d.d1, 0)), b(d.d2, fq::Vec(d.d1, 0));
    switch (M.kind) {
        case RepKind::Regular:
            for (int j = 0; j < d.d1; ++j) a[j][j] = 1;
            for (int j = 0; j + 1 < d.d1; ++j) b[j + 1][j] = 1;
            break;
        case RepKind::Preprojective:
            for (int j = 0; j < d.d1; ++j) {
                a[j][j] = 1;
                b[j + 1][j] = 1;
            }
            break;
        case RepKind::Preinjective:
            for (int j = 1; j < d.d1; ++j) a[j - 1][j] = 1;
            for (int j = 0; j < d.d1 - 1; ++j) b[j][j] = 1;
            break;
    }
    return FqMatrixRep{q, d, std::move(a), std::move(b)};
}

/// #Gr_e(M)(F_q): the number of pairs (N1, N2) of subspaces with
/// dim N_i = e_i, m_a N1 <= N2 and m_b N1 <= N2, by explicit enumeration of
/// echelon bases. `jobs` partitions the outer loop across threads.
inline long long count_points(const FqMatrixRep& rep, const DimVector& e, int jobs = 1) {
    fq::check_bounds(rep.q, std::max(rep.d.d1, rep.d.d2));
    if (e.d1 > rep.d.d1 || e.d2 > rep.d.d2) return 0;
    const auto list1 = enumerate_subspaces(rep.q, rep.d.d1, e.d1);
    const auto list2 = enumerate_subspaces(rep.q, rep.d.d2, e.d2);

    std::vector<std::vector<int>> pivots2(list2.size());
    for (size_t i = 0; i < list2.size(); ++i)
        for (const auto& row : list2[i])
            pivots2[i].push_back(static_cast<int>(
                std::find_if(row.begin(), row.end(), [](int x) { return x != 0; }) -
                row.begin()));

    auto count_range = [&](size_t lo, size_t hi) {
        long long local = 0;
        for (size_t i1 = lo; i1 < hi; ++i1) {
            for (size_t i2 = 0; i2 < list2.size(); ++i2) {
                bool ok = true;
                for (const auto& u : list1[i1]) {
                    if (!fq::in_span(list2[i2], pivots2[i2], fq::mat_vec(rep.m_a, u, rep.q),
                                     rep.q) ||
                        !fq::in_span(list2[i2], pivots2[i2], fq::mat_vec(rep.m_b, u, rep.q),
                                     rep.q)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) ++local;
            }
        }
        return local;
    };

    if (jobs <= 1 || list1.size() < 2) return count_range(0, list1.size());

    const size_t workers = std::min<size_t>(jobs, list1.size());
    std::vector<long long> partial(workers, 0);
    std::vector<std::thread> threads;
    for (size_t w = 0; w < workers; ++w) {
        const size_t lo = list1.size() * w / workers;
        const size_t hi = list1.size() * (w + 1) / workers;
        threads.emplace_back([&, w, lo, hi] { partial[w] = count_range(lo, hi); });
    }
    for (auto& t : threads) t.join();
    long long total = 0;
    for (long long p : partial) total += p;
    return total;
}

inline long long count_points(const Indecomposable& M, const DimVector& e, int q,
                              int jobs = 1) {
    return count_points(matrix_rep(M, q), e, jobs);
}

}  // namespace kronq
