#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kronq {

/// Univariate polynomial in q with nonnegative integer coefficients; the
/// coefficient of q^i is the even Betti number b_{2i} (odd Betti numbers of
/// the varieties in play vanish). Evaluation at 1 gives the Euler
/// characteristic. The zero polynomial encodes an empty variety.
class GradedPoly {
  public:
    GradedPoly() = default;
    explicit GradedPoly(std::vector<long long> coeffs) : c_(std::move(coeffs)) {
        for (long long x : c_)
            if (x < 0) throw std::invalid_argument("GradedPoly: negative coefficient");
        trim();
    }

    static GradedPoly one() { return GradedPoly({1}); }
    static GradedPoly monomial(int deg, long long coeff = 1) {
        std::vector<long long> c(deg + 1, 0);
        c[deg] = coeff;
        return GradedPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    long long coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0;
    }
    const std::vector<long long>& coefficients() const { return c_; }

    friend bool operator==(const GradedPoly&, const GradedPoly&) = default;

    GradedPoly operator+(const GradedPoly& o) const {
        std::vector<long long> c(std::max(c_.size(), o.c_.size()), 0);
        for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
        return GradedPoly(std::move(c));
    }

    GradedPoly operator*(const GradedPoly& o) const {
        if (is_zero() || o.is_zero()) return GradedPoly();
        std::vector<long long> c(c_.size() + o.c_.size() - 1, 0);
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
        return GradedPoly(std::move(c));
    }

    long long eval(long long q) const {
        long long value = 0;
        for (size_t i = c_.size(); i-- > 0;) value = value * q + c_[i];
        return value;
    }

    std::string to_string() const {
        std::ostringstream out;
        out << "[";
        for (size_t i = 0; i < c_.size(); ++i) out << (i ? "," : "") << c_[i];
        out << "]";
        return out.str();
    }

  private:
    std::vector<long long> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

/// Gaussian binomial [s choose t]_q via the Pascal recurrence
/// [s,t] = [s-1,t-1] + q^t [s-1,t]. Zero polynomial when t < 0 or t > s.
/// This is the Poincare polynomial of the Grassmannian Gr_t(k^s) in the
/// grading where the q^i coefficient is b_{2i}.
inline GradedPoly gaussian_binomial(int s, int t) {
    if (s < 0 || t < 0 || t > s) return GradedPoly();
    // row[j] = [i choose j]_q while building up i = 0..s
    std::vector<GradedPoly> row(t + 1);
    row[0] = GradedPoly::one();
    for (int i = 1; i <= s; ++i) {
        for (int j = std::min(i, t); j >= 1; --j) {
            GradedPoly shifted = row[j].is_zero()
                                     ? GradedPoly()
                                     : GradedPoly::monomial(j) * row[j];
            row[j] = row[j - 1] + shifted;
        }
    }
    return row[t];
}

}  // namespace kronq
