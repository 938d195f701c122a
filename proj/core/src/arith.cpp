#include "qf/arith.hpp"

#include <stdexcept>

#include "qf/fp_poly.hpp"

namespace qf {

Int invmod(const Int& x, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("invmod: element not invertible");
    return r;
}

bool probably_prime(const Int& p) {
    return mpz_probab_prime_p(p.get_mpz_t(), 30) != 0;
}

PAdicValue valuation(const Int& x, const Int& p) {
    if (x == 0) throw std::invalid_argument("valuation: v_p(0) is infinite");
    Int u = x;
    long v = 0;
    Int q;
    while (true) {
        if (!mpz_divisible_p(u.get_mpz_t(), p.get_mpz_t())) break;
        mpz_divexact(q.get_mpz_t(), u.get_mpz_t(), p.get_mpz_t());
        u = q;
        ++v;
    }
    return {v, u};
}

std::optional<long> vp(const Int& x, const Int& p) {
    if (x == 0) return std::nullopt;
    return valuation(x, p).valuation;
}

Int p_free_part(const Int& x, const Int& p) { return valuation(x, p).unit; }

int legendre(const Int& x, const Int& p) {
    if (p == 2) throw std::invalid_argument("legendre: p must be an odd prime");
    return mpz_legendre(x.get_mpz_t(), p.get_mpz_t());
}

bool nth_power_residue(const Int& x, unsigned long n, const Int& p) {
    if (divisible(x, p)) throw std::invalid_argument("nth_power_residue: p divides x");
    if (p == 2) return true;
    Int g = gcd(Int(n), p - 1);
    return powmod(x, (p - 1) / g, p) == 1;
}

std::optional<Int> mod_root(const Int& x, unsigned long n, const Int& p) {
    if (n < 2 || n > 4) throw std::invalid_argument("mod_root: n must be 2, 3 or 4");
    if (p == 2) throw std::invalid_argument("mod_root: p must be odd");
    // Roots of X^n - x are the degree-1 factors; factor_quartic_modp returns
    // them in ascending root order already, but extract and take the minimum
    // explicitly.
    std::vector<Int> coeffs(n + 1, 0);
    coeffs[0] = mod(-x, p);
    coeffs[n] = 1;
    FpPoly f(p, std::move(coeffs));
    std::optional<Int> best;
    for (auto& [g, mult] : factor_quartic_modp(f)) {
        if (g.degree() != 1) continue;
        Int r = mod(-g.coeff(0), p);
        if (!best || r < *best) best = r;
    }
    return best;
}

Int hensel_lift_quadratic(const Int& t, const Int& c, const Int& p, unsigned long k) {
    if (p == 2) throw std::invalid_argument("hensel_lift_quadratic: p must be odd");
    if (!divisible(t * t + c, p))
        throw std::invalid_argument("hensel_lift_quadratic: t is not a root mod p");
    if (divisible(2 * t, p)) throw std::domain_error("hensel_lift_quadratic: non-simple root");
    Int pk = pow_ui(p, k);
    Int r = mod(t, pk);
    // Newton iteration doubles the precision each step.
    Int prec = p;
    while (true) {
        Int val = r * r + c;
        if (mpz_divisible_p(val.get_mpz_t(), pk.get_mpz_t())) break;
        prec = prec * prec;
        if (prec > pk) prec = pk;
        Int inv = invmod(mod(2 * r, prec), prec);
        r = mod(r - val * inv, prec);
    }
    return mod(r, pk);
}

}  // namespace qf
