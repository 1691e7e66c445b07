#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "kronq/dim_vector.hpp"

namespace kronq {

enum class RepKind { Preprojective, Regular, Preinjective };

inline char kind_letter(RepKind k) {
    switch (k) {
        case RepKind::Preprojective: return 'P';
        case RepKind::Regular: return 'R';
        case RepKind::Preinjective: return 'I';
    }
    return '?';
}

/// One indecomposable Kronecker representation:
///   P_n : dim (n, n+1), n >= 0
///   R_n : dim (n, n),   n >= 1   (the regular parameter is fixed to 0;
///                                 all Gr_e(R_n(lambda)) are isomorphic)
///   I_n : dim (n+1, n), n >= 0
struct Indecomposable {
    RepKind kind;
    int rank;

    Indecomposable(RepKind k, int n) : kind(k), rank(n) {
        if (n < 0) throw std::invalid_argument("Indecomposable: negative rank");
        if (k == RepKind::Regular && n < 1)
            throw std::invalid_argument("Indecomposable: regular rank must be >= 1");
    }

    DimVector dim() const {
        switch (kind) {
            case RepKind::Preprojective: return DimVector(rank, rank + 1);
            case RepKind::Regular: return DimVector(rank, rank);
            case RepKind::Preinjective: return DimVector(rank + 1, rank);
        }
        throw std::logic_error("unreachable");
    }

    friend auto operator<=>(const Indecomposable&, const Indecomposable&) = default;

    std::string to_string() const { return kind_letter(kind) + std::to_string(rank); }
};

inline Indecomposable P(int n) { return Indecomposable(RepKind::Preprojective, n); }
inline Indecomposable R(int n) { return Indecomposable(RepKind::Regular, n); }
inline Indecomposable I(int n) { return Indecomposable(RepKind::Preinjective, n); }

/// A finite direct sum of indecomposables, kept as a sorted multiset.
/// The empty sum is the zero representation.
class RepDescriptor {
  public:
    RepDescriptor() = default;
    RepDescriptor(std::initializer_list<Indecomposable> parts) : summands_(parts) {
        normalize();
    }
    explicit RepDescriptor(std::vector<Indecomposable> parts)
        : summands_(std::move(parts)) {
        normalize();
    }

    const std::vector<Indecomposable>& summands() const { return summands_; }
    bool is_zero() const { return summands_.empty(); }

    DimVector dim() const {
        DimVector d;
        for (const auto& s : summands_) d += s.dim();
        return d;
    }

    RepDescriptor operator+(const RepDescriptor& o) const {
        std::vector<Indecomposable> all = summands_;
        all.insert(all.end(), o.summands_.begin(), o.summands_.end());
        return RepDescriptor(std::move(all));
    }

    friend bool operator==(const RepDescriptor&, const RepDescriptor&) = default;

    std::string to_string() const {
        if (summands_.empty()) return "0";
        std::ostringstream out;
        for (size_t i = 0; i < summands_.size(); ++i) {
            size_t j = i;
            while (j + 1 < summands_.size() && summands_[j + 1] == summands_[i]) ++j;
            if (i) out << " + ";
            if (j > i) out << (j - i + 1) << "*";
            out << summands_[i].to_string();
            i = j;
        }
        return out.str();
    }

    /// Parses "P0", "2*R1 + I3", "0". Whitespace around '+' is optional.
    static RepDescriptor parse(const std::string& text);

  private:
    std::vector<Indecomposable> summands_;
    void normalize() { std::sort(summands_.begin(), summands_.end()); }
};

inline RepDescriptor RepDescriptor::parse(const std::string& text) {
    std::vector<Indecomposable> parts;
    std::string t;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw std::invalid_argument("descriptor: empty");
    if (t == "0") return RepDescriptor{};
    size_t pos = 0;
    while (pos < t.size()) {
        size_t end = t.find('+', pos);
        std::string tok = t.substr(pos, end == std::string::npos ? end : end - pos);
        long mult = 1;
        size_t star = tok.find('*');
        std::string body = tok;
        if (star != std::string::npos) {
            mult = std::stol(tok.substr(0, star));
            body = tok.substr(star + 1);
        }
        if (mult < 0 || body.size() < 2)
            throw std::invalid_argument("descriptor: bad summand '" + tok + "'");
        RepKind kind;
        switch (body[0]) {
            case 'P': kind = RepKind::Preprojective; break;
            case 'R': kind = RepKind::Regular; break;
            case 'I': kind = RepKind::Preinjective; break;
            default: throw std::invalid_argument("descriptor: bad kind '" + tok + "'");
        }
        size_t parsed = 0;
        int rank = std::stoi(body.substr(1), &parsed);
        if (parsed + 1 != body.size())
            throw std::invalid_argument("descriptor: bad rank '" + tok + "'");
        for (long m = 0; m < mult; ++m) parts.emplace_back(kind, rank);
        pos = (end == std::string::npos) ? t.size() : end + 1;
    }
    return RepDescriptor(std::move(parts));
}

/// dim Hom between indecomposables, by the closed table:
///   (P_s,P_l) -> max(l-s+1, 0)      (P_s,R_l) -> l       (P_s,I_l) -> l+s
///   (R_s,R_l) -> min(s,l)           (R_s,I_l) -> s       (I_s,I_l) -> max(s-l+1, 0)
/// and Hom(R,P) = Hom(I,P) = Hom(I,R) = 0.
inline long long hom_dim(const Indecomposable& M, const Indecomposable& N) {
    const int s = M.rank, l = N.rank;
    using K = RepKind;
    if (M.kind == K::Preprojective) {
        if (N.kind == K::Preprojective) return std::max(l - s + 1, 0);
        if (N.kind == K::Regular) return l;
        return l + s;
    }
    if (M.kind == K::Regular) {
        if (N.kind == K::Preprojective) return 0;
        if (N.kind == K::Regular) return std::min(s, l);
        return s;
    }
    // preinjective source
    if (N.kind == K::Preinjective) return std::max(s - l + 1, 0);
    return 0;
}

/// Additive in both arguments over direct sums.
inline long long hom_dim(const RepDescriptor& M, const RepDescriptor& N) {
    long long total = 0;
    for (const auto& m : M.summands())
        for (const auto& n : N.summands()) total += hom_dim(m, n);
    return total;
}

/// dim Ext^1(M,N) = dim Hom(M,N) - <dim M, dim N>. Always >= 0 here.
inline long long ext_dim(const RepDescriptor& M, const RepDescriptor& N) {
    const long long e = hom_dim(M, N) - euler_form(M.dim(), N.dim());
    if (e < 0) throw std::logic_error("ext_dim: negative value, Hom table broken");
    return e;
}

inline long long ext_dim(const Indecomposable& M, const Indecomposable& N) {
    return ext_dim(RepDescriptor{M}, RepDescriptor{N});
}

/// K-invariant of a point N in Gr_e(R_n): with N = P (+) R_r and
/// R_n/N = R_{r'} (+) I, returns min(r, r') = dim Ext^1(N, R_n/N).
/// Rejects descriptors that do not have the sub/quotient shape.
inline int k_invariant(const RepDescriptor& sub, const RepDescriptor& quotient) {
    int r = 0, rp = 0;
    int regulars = 0;
    for (const auto& s : sub.summands()) {
        if (s.kind == RepKind::Regular) {
            r = s.rank;
            ++regulars;
        } else if (s.kind != RepKind::Preprojective) {
            throw std::invalid_argument(
                "k_invariant: sub-representation must be preprojective plus at most "
                "one regular");
        }
    }
    if (regulars > 1)
        throw std::invalid_argument("k_invariant: more than one regular summand in sub");
    regulars = 0;
    for (const auto& s : quotient.summands()) {
        if (s.kind == RepKind::Regular) {
            rp = s.rank;
            ++regulars;
        } else if (s.kind != RepKind::Preinjective) {
            throw std::invalid_argument(
                "k_invariant: quotient must be preinjective plus at most one regular");
        }
    }
    if (regulars > 1)
        throw std::invalid_argument(
            "k_invariant: more than one regular summand in quotient");
    const int k = std::min(r, rp);
    if (k != ext_dim(sub, quotient))
        throw std::logic_error("k_invariant: min(r, r') != dim Ext^1");
    return k;
}

/// Tangent-space dimension at a point of Gr_e(R_n) with K-invariant K:
/// <e, n*delta - e> + K. The point is smooth iff K = 0.
inline long long tangent_dim(int n, const DimVector& e, int K) {
    if (!(0 <= e.d1 && e.d1 <= e.d2 && e.d2 <= n))
        throw std::invalid_argument("tangent_dim: e out of range for R_n");
    if (K < 0) throw std::invalid_argument("tangent_dim: negative K");
    return euler_form(e, n * delta - e) + K;
}

}  // namespace kronq
