#ifndef QF_CLASSIFY_HPP
#define QF_CLASSIFY_HPP

#include <map>
#include <stdexcept>

#include "qf/factorization.hpp"

namespace qf {

/// Raised when no table row matches a condition vector. Indicates a
/// dispatcher bug or a genuine table gap; never silently swallowed.
class NoRowMatched : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Full table-driven factorization of p Z_K. The field must already be
/// normalized (v_p(a) <= 2 or v_p(b) <= 3 for every p); classify() verifies
/// this and throws std::invalid_argument otherwise.
PrimeFactorization classify(const QuarticField& k, const Int& p);

/// Dedekind path: factor P-bar mod p and lift. Precondition p not dividing
/// ind(P) is re-checked internally (it is cheap); throws std::domain_error
/// when violated.
PrimeFactorization dedekind_factorization(const QuarticField& k, const Int& p);

class UnfactoredDiscriminant : public std::runtime_error {
public:
    Int cofactor;
    UnfactoredDiscriminant(const std::string& m, Int c)
        : std::runtime_error(m), cofactor(std::move(c)) {}
};

/// classify() at every prime dividing the discriminant. Trial division up to
/// the bound, then a Pollard-rho fallback; throws UnfactoredDiscriminant when
/// a composite cofactor resists factorization.
std::map<Int, PrimeFactorization> factor_all_ramified(const QuarticField& k,
                                                      const Int& trial_bound = Int(1000000));

/// Prime factors of |n| (with multiplicity collapsed), used for the
/// discriminant sweep.
std::vector<Int> prime_factors(const Int& n, const Int& trial_bound);

}  // namespace qf

#endif
