#ifndef QF_ZPOLY_HPP
#define QF_ZPOLY_HPP

#include <utility>
#include <vector>

#include "qf/integers.hpp"

namespace qf {

/// Dense polynomial over Z, ascending degree.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    static ZPoly constant(const Int& c) { return ZPoly({c}); }
    static ZPoly x() { return ZPoly({0, 1}); }
    static ZPoly monomial(const Int& c, int deg);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(int i) const;
    Int lc() const { return c_.empty() ? Int(0) : c_.back(); }

    Int eval(const Int& x) const;
    Rat eval_rat(const Rat& x) const;
    ZPoly derivative() const;
    /// P(X + s): Taylor shift.
    ZPoly shifted(const Int& s) const;
    /// P(c * X).
    ZPoly scaled_arg(const Int& c) const;

    friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    ZPoly operator-() const;
    ZPoly scaled(const Int& k) const;
    bool operator==(const ZPoly& o) const { return c_ == o.c_; }

private:
    std::vector<Int> c_;
    void trim();
};

/// Division by a monic divisor: a = q*b + r with deg r < deg b, exact over Z.
std::pair<ZPoly, ZPoly> divmod_monic(const ZPoly& a, const ZPoly& b);

/// phi-adic development: F = sum a_i(X) phi(X)^i with deg a_i < deg phi.
/// phi must be monic of degree >= 1.
std::vector<ZPoly> phi_adic_development(const ZPoly& f, const ZPoly& phi);

/// Resultant Res_X(a, b), exact, via the subresultant PRS.
Int resultant(const ZPoly& a, const ZPoly& b);

/// Discriminant of a monic polynomial (via Res(f, f')).
Int discriminant_monic(const ZPoly& f);

}  // namespace qf

#endif
