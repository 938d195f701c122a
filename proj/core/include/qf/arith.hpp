#ifndef QF_ARITH_HPP
#define QF_ARITH_HPP

#include <optional>

#include "qf/integers.hpp"

namespace qf {

/// x = p^valuation * unit with p not dividing unit.
struct PAdicValue {
    long valuation;
    Int unit;
};

/// p-adic valuation of a nonzero integer. Throws std::invalid_argument on x == 0
/// (the "infinite valuation" case; use vp() when 0 is a legal input).
PAdicValue valuation(const Int& x, const Int& p);

/// Valuation as a nullable: nullopt encodes v_p(0) = infinity.
std::optional<long> vp(const Int& x, const Int& p);

/// p-free part x / p^{v_p(x)}; x must be nonzero.
Int p_free_part(const Int& x, const Int& p);

/// Legendre symbol (x/p) for odd prime p. Throws on p = 2.
int legendre(const Int& x, const Int& p);

/// True iff x is an nth-power residue mod p, via the order criterion
/// x^{(p-1)/g} = 1 with g = gcd(n, p-1). Requires p not dividing x.
bool nth_power_residue(const Int& x, unsigned long n, const Int& p);

/// Smallest t in [0, p) with t^n = x (mod p), n in {2,3,4}, p an odd prime;
/// nullopt when no root exists.
std::optional<Int> mod_root(const Int& x, unsigned long n, const Int& p);

/// Quadratic Hensel lift: given t with t^2 + c = 0 (mod p), p odd, returns
/// t' = t (mod p) with v_p(t'^2 + c) >= k, reduced mod p^k. Throws when the
/// root is not simple (2t = 0 mod p).
Int hensel_lift_quadratic(const Int& t, const Int& c, const Int& p, unsigned long k);

}  // namespace qf

#endif
