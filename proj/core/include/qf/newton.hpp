#ifndef QF_NEWTON_HPP
#define QF_NEWTON_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qf/residue_field.hpp"
#include "qf/zpoly.hpp"

namespace qf {

struct PolygonPoint {
    long i;
    std::optional<long> u;  // nullopt encodes u_i = infinity (zero coefficient)
};

/// One side of the principal part, slope -h/e with h, e coprime positive.
struct Side {
    long h = 0;
    long e = 1;
    long length = 0;     // l
    long degree = 0;     // d = l / e
    long start = 0;      // initial abscissa
    long start_ord = 0;  // ordinate at the initial abscissa
    RFPoly residual;     // F_S(Y) over F_phi, degree exactly d
};

/// phi-Newton polygon of F with respect to p; principal sides only (negative
/// slope), ordered by increasing slope.
struct NewtonPolygon {
    Int p;
    ZPoly phi;
    ResidueField field;  // F_phi
    std::vector<PolygonPoint> points;
    std::vector<Side> principal;
    std::vector<ZPoly> dev;  // phi-adic coefficients a_i(X)
};

/// Requires phi monic with phi-bar irreducible dividing F-bar mod p.
NewtonPolygon build_polygon(const ZPoly& F, const ZPoly& phi, const Int& p);

/// Residual polynomial of one principal side (already stored on Side; exposed
/// for direct computation from polygon data).
RFPoly residual_polynomial(const NewtonPolygon& np, const Side& s);

struct SideReport {
    ZPoly phi;
    int side_index;
    bool squarefree;
};

struct RegularityReport {
    bool regular = true;
    std::vector<SideReport> sides;
};

/// phi-regularity over every irreducible factor of F-bar mod p.
RegularityReport is_p_regular(const ZPoly& F, const Int& p);

class NotPRegular : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RegularPrime {
    long e;
    long f;
    ZPoly phi;      // monic lift of the mod-p irreducible factor
    long side_h = 0;
    long side_e = 1;
    RFPoly psi;     // irreducible residual factor (empty for the unramified l=1 case)
};

struct RegularFactorization {
    Int p;
    std::vector<RegularPrime> primes;
};

/// Theorem-of-the-polygon factorization; throws NotPRegular when some residual
/// polynomial has a repeated factor.
RegularFactorization regular_factorization(const ZPoly& F, const Int& p);

/// Text rendering of polygon points and sides (debug CLI).
std::string render_polygon(const NewtonPolygon& np);

}  // namespace qf

#endif
