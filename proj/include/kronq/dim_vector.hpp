#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace kronq {

/// Dimension vector of a Kronecker-quiver representation: (dim at vertex 1,
/// dim at vertex 2). Componentwise nonnegative; subtraction that would go
/// below zero throws instead of clamping.
struct DimVector {
    int d1 = 0;
    int d2 = 0;

    constexpr DimVector() = default;
    constexpr DimVector(int a, int b) : d1(a), d2(b) {
        if (a < 0 || b < 0)
            throw std::invalid_argument("DimVector: negative component");
    }

    friend constexpr auto operator<=>(const DimVector&, const DimVector&) = default;

    constexpr DimVector operator+(const DimVector& o) const {
        return DimVector(d1 + o.d1, d2 + o.d2);
    }
    constexpr DimVector operator-(const DimVector& o) const {
        if (d1 < o.d1 || d2 < o.d2)
            throw std::invalid_argument("DimVector: subtraction below zero");
        return DimVector(d1 - o.d1, d2 - o.d2);
    }
    constexpr DimVector& operator+=(const DimVector& o) { return *this = *this + o; }

    /// Componentwise order (partial); distinct from the lexicographic
    /// operator<=> used for container keys.
    constexpr bool leq(const DimVector& o) const { return d1 <= o.d1 && d2 <= o.d2; }

    std::string to_string() const {
        return "(" + std::to_string(d1) + "," + std::to_string(d2) + ")";
    }
};

/// delta = (1,1), the null root; dim R_n = n*delta.
inline constexpr DimVector delta{1, 1};

constexpr DimVector operator*(int c, const DimVector& v) {
    return DimVector(c * v.d1, c * v.d2);
}

/// Euler form of the Kronecker quiver: <(a,b),(c,d)> = ac + bd - 2ad.
/// Equals dim Hom(M,N) - dim Ext^1(M,N) on dimension vectors.
constexpr long long euler_form(const DimVector& x, const DimVector& y) {
    return static_cast<long long>(x.d1) * y.d1 + static_cast<long long>(x.d2) * y.d2 -
           2LL * x.d1 * y.d2;
}

}  // namespace kronq
