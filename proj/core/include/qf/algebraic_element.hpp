#ifndef QF_ALGEBRAIC_ELEMENT_HPP
#define QF_ALGEBRAIC_ELEMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "qf/quartic_field.hpp"

namespace qf {

/// w = g(theta) / p^h with theta = alpha - s, deg g <= 3.
struct AlgebraicElement {
    Int p = 0;
    Int shift = 0;     // s
    ZPoly num;         // g, in theta
    long denom_exp = 0;  // h

    bool is_zero() const { return num.is_zero(); }
};

/// w given as a polynomial in alpha (degree <= 3) with denominator p^h.
AlgebraicElement element_in_alpha(const Int& p, ZPoly g, long h);

/// Same element rewritten with shift 0 (numerator expanded in alpha).
/// Degrees above 3 must already have been reduced; expansion of g(X - s)
/// keeps degree <= 3 automatically.
AlgebraicElement to_alpha_form(const AlgebraicElement& w);

/// Builds an element from exact rational alpha-coordinates; fails (nullopt)
/// unless every denominator is a power of p.
std::optional<AlgebraicElement> element_from_rational(const Int& p, const std::vector<Rat>& alpha_coords);

/// Characteristic polynomial of w on K = Q[alpha], monic of degree 4 with
/// exact rational coefficients (ascending, size 5, leading 1).
std::vector<Rat> char_poly_of_element(const AlgebraicElement& w, const QuarticField& k);

bool char_poly_is_integral(const std::vector<Rat>& cp);

/// v_p(N(w)) computed as v_p(Res_X(P(X+s), g(X))) - 4h. w must be nonzero.
long norm_valuation(const AlgebraicElement& w, const QuarticField& k);

/// Human-readable rendering, e.g. "(a^2+2)/4" with the variable named var.
std::string to_string(const AlgebraicElement& w, const std::string& var = "a", bool alpha_form = false);

/// Product of two elements reduced modulo P(alpha); denominators multiply.
AlgebraicElement element_mul(const AlgebraicElement& x, const AlgebraicElement& y, const QuarticField& k);

}  // namespace qf

#endif
