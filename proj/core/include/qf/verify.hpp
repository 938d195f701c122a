#ifndef QF_VERIFY_HPP
#define QF_VERIFY_HPP

#include <string>
#include <vector>

#include "qf/factorization.hpp"
#include "qf/newton.hpp"

namespace qf {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct VerificationReport {
    Int a, b, p;
    std::vector<CheckResult> checks;
    bool overall = true;

    void add(std::string name, bool pass, std::string detail = "");
};

/// True iff p does not divide the index [Z_K : Z[alpha]]. Standard test:
/// with Pbar = prod g_i^{e_i}, g = prod g_i, h = prod g_i^{e_i - 1} (monic
/// lifts), T = (g*h - P)/p, the index is coprime to p iff
/// gcd(Tbar, gbar, hbar) = 1.
bool dedekind_criterion(const QuarticField& k, const Int& p);

/// Runs the invariant suite against a factorization without trusting the
/// tables that produced it:
///   1. sum e*f = 4
///   2. when p does not divide the index: (e, f) multiset and generator
///      residues mod p match the factorization of Pbar mod p
///   3. every generator has an integral characteristic polynomial
///   4. norm valuations: v_p(N(w)) = f for exact-valuation generators,
///      >= f otherwise
///   5. tame parity, p >= 5 only: v_p(disc) = sum (e_i - 1) f_i (mod 2)
///      and v_p(disc) >= sum (e_i - 1) f_i
///   6. p not dividing disc implies every e_i = 1
VerificationReport check_factorization(const PrimeFactorization& r);

/// Lemma-level spot check on a polygon side over phi = X - s: the element
/// theta^e / p^h has norm valuation 0 and is a root of the side's residual
/// polynomial mod p. Residue field must be F_p itself (deg phi = 1).
bool residual_root_check(const QuarticField& k, const Int& s, const Side& side, const Int& p);

}  // namespace qf

#endif
