#ifndef QF_QUARTIC_FIELD_HPP
#define QF_QUARTIC_FIELD_HPP

#include <vector>

#include "qf/zpoly.hpp"

namespace qf {

/// K = Q[alpha] with alpha a root of the irreducible X^4 + aX + b.
struct QuarticField {
    Int a;
    Int b;
    Int disc;  // 256 b^3 - 27 a^4

    ZPoly poly() const { return ZPoly({b, a, 0, 0, 1}); }
};

Int discriminant(const Int& a, const Int& b);

/// Irreducibility of X^4 + aX + b over Q: no integer root and no factorization
/// into two integer quadratics. Exhaustive divisor-pair search on b; loudly
/// refuses |b| beyond 10^9 (divisor enumeration bound).
bool is_irreducible_quartic(const Int& a, const Int& b);

/// Constructor; throws std::invalid_argument when the quartic is reducible.
QuarticField make_quartic_field(const Int& a, const Int& b);

struct Substitution {
    Int p;
    long q;  // alpha -> alpha / p^q
};

struct NormalizeResult {
    Int a;
    Int b;
    std::vector<Substitution> substitutions;
};

/// Removes every prime p with v_p(a) >= 3 and v_p(b) >= 4 via alpha -> alpha/p^q,
/// q = min(floor(v_p(a)/3), floor(v_p(b)/4)).
NormalizeResult normalize(const Int& a, const Int& b);

/// F(X) = P(X+s) = X^4 + 4sX^3 + 6s^2X^2 + AX + B.
struct ShiftedQuartic {
    Int s;
    Int A;  // 4s^3 + a
    Int B;  // s^4 + as + b
    ZPoly F;
};

ShiftedQuartic shift_quartic(const QuarticField& k, const Int& s);

}  // namespace qf

#endif
