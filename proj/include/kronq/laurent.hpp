#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kronq {

using BigInt = boost::multiprecision::cpp_int;

/// Thrown when a division that the recurrences guarantee to be exact is not;
/// reaching it means a logic error upstream, never expected input.
struct inexact_division : std::logic_error {
    using std::logic_error::logic_error;
};

/// Multivariate Laurent polynomial with exact integer coefficients, in a
/// fixed number of variables x1..xv. Canonical form: zero coefficients are
/// never stored. All arithmetic is exact; division is only performed when
/// exact and throws otherwise.
class LaurentPoly {
  public:
    using Exps = std::vector<int>;
    using TermMap = std::map<Exps, BigInt>;

    explicit LaurentPoly(int nvars = 2) : nvars_(check_nvars(nvars)) {}

    static LaurentPoly constant(int nvars, BigInt c) {
        LaurentPoly p(nvars);
        if (c != 0) p.terms_[Exps(nvars, 0)] = std::move(c);
        return p;
    }
    static LaurentPoly variable(int nvars, int i, int exp = 1) {
        return monomial(nvars, unit_exps(nvars, i, exp), 1);
    }
    static LaurentPoly monomial(int nvars, Exps exps, BigInt c) {
        if (static_cast<int>(exps.size()) != nvars)
            throw std::invalid_argument("LaurentPoly: exponent arity mismatch");
        LaurentPoly p(nvars);
        if (c != 0) p.terms_[std::move(exps)] = std::move(c);
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    BigInt coeff(const Exps& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    LaurentPoly& operator+=(const LaurentPoly& o) {
        require_same_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        require_same_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    LaurentPoly operator-() const {
        LaurentPoly p(nvars_);
        for (const auto& [e, c] : terms_) p.terms_[e] = -c;
        return p;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.require_same_arity(b);
        LaurentPoly p(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exps e(a.nvars_);
                for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                p.add_term(e, ca * cb);
            }
        return p;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator*(const BigInt& c, const LaurentPoly& a) {
        LaurentPoly p(a.nvars_);
        if (c == 0) return p;
        for (const auto& [e, x] : a.terms_) p.terms_[e] = c * x;
        return p;
    }

    LaurentPoly pow(int k) const {
        if (k < 0) throw std::invalid_argument("LaurentPoly::pow: negative exponent");
        LaurentPoly acc = constant(nvars_, 1);
        for (int i = 0; i < k; ++i) acc *= *this;
        return acc;
    }

    /// Multiplies by the monomial x^shift (componentwise exponent shift).
    LaurentPoly shifted(const Exps& shift) const {
        LaurentPoly p(nvars_);
        for (const auto& [e, c] : terms_) {
            Exps s(nvars_);
            for (int i = 0; i < nvars_; ++i) s[i] = e[i] + shift[i];
            p.terms_[s] = c;
        }
        return p;
    }

    /// Componentwise minimum exponent over all terms (zero poly -> zeros).
    Exps min_exponents() const {
        Exps m(nvars_, 0);
        bool first = true;
        for (const auto& [e, _] : terms_) {
            if (first) {
                m = e;
                first = false;
            } else {
                for (int i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
            }
        }
        return m;
    }

    bool has_nonnegative_coeffs() const {
        for (const auto& [_, c] : terms_)
            if (c < 0) return false;
        return true;
    }

    /// Exact division. Shifts both operands into the polynomial range, then
    /// cancels lexicographic leading terms; any monomial or integer
    /// non-divisibility means the quotient is not a Laurent polynomial.
    friend LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
        num.require_same_arity(den);
        if (den.is_zero()) throw inexact_division("exact_div: division by zero");
        if (num.is_zero()) return LaurentPoly(num.nvars_);
        const int v = num.nvars_;
        Exps mn = num.min_exponents(), md = den.min_exponents();
        Exps up_n(v), up_d(v), back(v);
        for (int i = 0; i < v; ++i) {
            up_n[i] = -mn[i];
            up_d[i] = -md[i];
            back[i] = mn[i] - md[i];
        }
        LaurentPoly rem = num.shifted(up_n);
        const LaurentPoly d = den.shifted(up_d);
        const auto& [lead_d, lc_d] = *d.terms_.rbegin();
        LaurentPoly quot(v);
        while (!rem.is_zero()) {
            const auto& [lead_r, lc_r] = *rem.terms_.rbegin();
            Exps t(v);
            for (int i = 0; i < v; ++i) {
                t[i] = lead_r[i] - lead_d[i];
                if (t[i] < 0) throw inexact_division("exact_div: monomial mismatch");
            }
            if (lc_r % lc_d != 0)
                throw inexact_division("exact_div: coefficient mismatch");
            const LaurentPoly term = monomial(v, t, lc_r / lc_d);
            quot += term;
            rem -= term * d;
        }
        return quot.shifted(back);
    }

    /// Substitutes subs[i] for x_{i+1}. Negative exponents are handled by
    /// writing the input over a common monomial denominator and dividing
    /// exactly at the end.
    LaurentPoly substitute(const std::vector<LaurentPoly>& subs) const {
        if (static_cast<int>(subs.size()) != nvars_)
            throw std::invalid_argument("substitute: arity mismatch");
        const int target_vars = subs.empty() ? 0 : subs[0].nvars();
        for (const auto& s : subs)
            if (s.nvars() != target_vars)
                throw std::invalid_argument("substitute: mixed target arities");
        if (is_zero()) return LaurentPoly(target_vars);
        const Exps mn = min_exponents();
        Exps lift(nvars_);
        for (int i = 0; i < nvars_; ++i) lift[i] = std::max(0, -mn[i]);
        LaurentPoly numerator(target_vars);
        for (const auto& [e, c] : terms_) {
            LaurentPoly t = constant(target_vars, c);
            for (int i = 0; i < nvars_; ++i) t *= subs[i].pow(e[i] + lift[i]);
            numerator += t;
        }
        LaurentPoly denom = constant(target_vars, 1);
        for (int i = 0; i < nvars_; ++i) denom *= subs[i].pow(lift[i]);
        return exact_div(numerator, denom);
    }

    /// Canonical text form: terms sorted by total degree, then reverse
    /// lexicographic on exponent vectors; ` + ` / ` - ` separators, `*`
    /// between factors, exponent 1 omitted, unit coefficients omitted.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<Exps, BigInt>> sorted(terms_.begin(), terms_.end());
        std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
            long da = 0, db = 0;
            for (int x : a.first) da += x;
            for (int x : b.first) db += x;
            if (da != db) return da < db;
            return a.first > b.first;
        });
        std::ostringstream out;
        bool first = true;
        for (const auto& [e, c] : sorted) {
            const bool neg = c < 0;
            if (first) {
                if (neg) out << "-";
                first = false;
            } else {
                out << (neg ? " - " : " + ");
            }
            const BigInt mag = neg ? BigInt(-c) : c;
            std::string factors;
            for (int i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                if (!factors.empty()) factors += "*";
                factors += "x" + std::to_string(i + 1);
                if (e[i] != 1) factors += "^" + std::to_string(e[i]);
            }
            if (factors.empty()) {
                out << mag.str();
            } else {
                if (mag != 1) out << mag.str() << "*";
                out << factors;
            }
        }
        return out.str();
    }

  private:
    int nvars_;
    TermMap terms_;

    static int check_nvars(int v) {
        if (v < 1) throw std::invalid_argument("LaurentPoly: need at least one variable");
        return v;
    }
    static Exps unit_exps(int nvars, int i, int exp) {
        if (i < 1 || i > nvars)
            throw std::invalid_argument("LaurentPoly::variable: index out of range");
        Exps e(nvars, 0);
        e[i - 1] = exp;
        return e;
    }
    void require_same_arity(const LaurentPoly& o) const {
        if (nvars_ != o.nvars_)
            throw std::invalid_argument("LaurentPoly: variable arity mismatch");
    }
    void add_term(const Exps& e, const BigInt& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
};

}  // namespace kronq
