#ifndef QF_RESIDUE_FIELD_HPP
#define QF_RESIDUE_FIELD_HPP

#include <utility>
#include <vector>

#include "qf/fp_poly.hpp"

namespace qf {

/// Arithmetic context for F_phi = F_p[X]/(phi), phi irreducible of degree <= 4.
/// Elements are FpPoly values of degree < deg(phi). Immutable once built.
class ResidueField {
public:
    explicit ResidueField(FpPoly phi);

    const FpPoly& phi() const { return phi_; }
    const Int& p() const { return phi_.p(); }
    int ext_degree() const { return phi_.degree(); }
    Int order() const;  // p^m

    FpPoly reduce(const FpPoly& a) const { return a % phi_; }
    FpPoly add(const FpPoly& a, const FpPoly& b) const { return reduce(a + b); }
    FpPoly sub(const FpPoly& a, const FpPoly& b) const { return reduce(a - b); }
    FpPoly mul(const FpPoly& a, const FpPoly& b) const { return (a * b) % phi_; }
    FpPoly neg(const FpPoly& a) const { return reduce(-a); }
    FpPoly inverse(const FpPoly& a) const;  // throws on zero
    FpPoly pow(const FpPoly& a, const Int& e) const;
    FpPoly one() const { return FpPoly::constant(p(), 1); }
    FpPoly zero() const { return FpPoly(p()); }
    bool is_root(const FpPoly& poly_over_base, const FpPoly& elem) const;

    /// Square root in F_phi, or nullopt when the element is a non-square.
    /// Deterministic (smallest result under FpPoly::less).
    std::pair<bool, FpPoly> sqrt(const FpPoly& a) const;

private:
    FpPoly phi_;
};

/// Polynomial over F_phi, ascending degree; coefficients reduced mod phi.
struct RFPoly {
    std::vector<FpPoly> c;

    int degree() const;
    bool is_zero() const { return degree() < 0; }
    static bool less(const RFPoly& a, const RFPoly& b);
    bool operator==(const RFPoly& o) const;
};

RFPoly rf_trim(RFPoly r);
RFPoly rf_add(const ResidueField& F, const RFPoly& a, const RFPoly& b);
RFPoly rf_mul(const ResidueField& F, const RFPoly& a, const RFPoly& b);
RFPoly rf_monic(const ResidueField& F, const RFPoly& a);
std::pair<RFPoly, RFPoly> rf_divmod(const ResidueField& F, const RFPoly& a, const RFPoly& b);
RFPoly rf_gcd(const ResidueField& F, const RFPoly& a, const RFPoly& b);
RFPoly rf_derivative(const ResidueField& F, const RFPoly& a);
FpPoly rf_eval(const ResidueField& F, const RFPoly& a, const FpPoly& x);

/// Complete factorization over F_phi of a nonzero polynomial whose total
/// degree times deg(phi) is at most 4 (the quartic setting: deg <= 4 when
/// phi is linear, deg <= 2 otherwise). Deterministic order. Throws on zero.
std::vector<std::pair<RFPoly, int>> factor_residual(const ResidueField& F, const RFPoly& r);

bool rf_squarefree(const ResidueField& F, const RFPoly& r);

}  // namespace qf

#endif
