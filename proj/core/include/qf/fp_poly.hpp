#ifndef QF_FP_POLY_HPP
#define QF_FP_POLY_HPP

#include <utility>
#include <vector>

#include "qf/integers.hpp"

namespace qf {

/// Dense polynomial over F_p, coefficients reduced to [0, p), ascending degree.
class FpPoly {
public:
    explicit FpPoly(Int p) : p_(std::move(p)) {}
    FpPoly(Int p, std::vector<Int> coeffs);

    static FpPoly constant(const Int& p, const Int& c);
    static FpPoly x(const Int& p);  // the monomial X

    const Int& p() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const;
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(int i) const;  // 0 beyond the degree
    Int lc() const;          // leading coefficient; 0 for the zero polynomial

    FpPoly monic() const;
    FpPoly derivative() const;
    Int eval(const Int& x) const;

    friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
    FpPoly operator-() const;
    FpPoly scaled(const Int& c) const;

    bool operator==(const FpPoly& o) const { return c_ == o.c_; }
    bool operator!=(const FpPoly& o) const { return c_ != o.c_; }

    /// Deterministic order: by degree, then lexicographic on coefficients
    /// from the constant term up.
    static bool less(const FpPoly& a, const FpPoly& b);

private:
    Int p_;
    std::vector<Int> c_;
    void trim();
};

/// Euclidean division a = q*b + r, deg r < deg b. b must be nonzero.
std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
FpPoly operator%(const FpPoly& a, const FpPoly& b);
FpPoly operator/(const FpPoly& a, const FpPoly& b);

/// Monic gcd.
FpPoly gcd(const FpPoly& a, const FpPoly& b);

/// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic (or zero).
struct FpXgcd {
    FpPoly g, u, v;
};
FpXgcd xgcd(const FpPoly& a, const FpPoly& b);

/// base^e mod m by repeated squaring.
FpPoly powmod(const FpPoly& base, const Int& e, const FpPoly& m);

/// Complete factorization of a monic polynomial of degree <= 4 into monic
/// irreducibles with multiplicities, in deterministic order (degree, then
/// lexicographic coefficients). Throws on non-monic input.
std::vector<std::pair<FpPoly, int>> factor_quartic_modp(const FpPoly& f);

/// Irreducibility test for deg <= 4 (no roots for deg <= 3, additionally no
/// quadratic divisor for deg 4).
bool is_irreducible_modp(const FpPoly& f);

}  // namespace qf

#endif
