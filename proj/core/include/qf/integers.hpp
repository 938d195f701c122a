#ifndef QF_INTEGERS_HPP
#define QF_INTEGERS_HPP

#include <gmpxx.h>

#include <string>

namespace qf {

using Int = mpz_class;
using Rat = mpq_class;

// Least nonnegative residue of x mod m (m > 0).
inline Int mod(const Int& x, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int powmod(const Int& base, const Int& exp, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Inverse of x mod m; throws if not invertible.
Int invmod(const Int& x, const Int& m);

inline Int pow_ui(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int gcd(const Int& x, const Int& y) {
    Int r;
    mpz_gcd(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return r;
}

inline bool divisible(const Int& x, const Int& d) {
    return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Miller-Rabin based check, used to guard CLI input only.
bool probably_prime(const Int& p);

}  // namespace qf

#endif
