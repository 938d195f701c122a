#include "qf/classify.hpp"

#include <algorithm>

#include "qf/arith.hpp"
#include "qf/fp_poly.hpp"
#include "qf/verify.hpp"

namespace qf {

PrimeFactorization dedekind_factorization(const QuarticField& k, const Int& p) {
    if (!dedekind_criterion(k, p))
        throw std::domain_error("dedekind_factorization: p divides the index");
    FpPoly pbar(p, k.poly().coeffs());
    auto fac = factor_quartic_modp(pbar);

    PrimeFactorization r{p, k, {}, {}};
    r.trace.row = "dedekind";
    if (fac.size() == 1 && fac[0].second == 1 && fac[0].first.degree() == 4) {
        r.factors.push_back({1, 4, element_in_alpha(p, ZPoly::constant(p), 0), true, false});
        return r;
    }
    for (auto& [gi, ei] : fac) {
        ZPoly lift(gi.coeffs());
        r.factors.push_back({ei, gi.degree(), element_in_alpha(p, lift, 0), false, false});
    }
    return r;
}

namespace {

Int pollard_brent(const Int& n) {
    // Brent's cycle variant; n odd composite, not a prime power of interest.
    gmp_randstate_t st;
    gmp_randinit_mt(st);
    gmp_randseed_ui(st, 0x5eed);
    Int d = n;
    while (d == n) {
        Int y, cst;
        mpz_urandomm(y.get_mpz_t(), st, n.get_mpz_t());
        mpz_urandomm(cst.get_mpz_t(), st, n.get_mpz_t());
        if (cst == 0) cst = 1;
        Int x = y, q = 1;
        long r = 1, m = 128;
        Int ys = y;
        d = 1;
        while (d == 1) {
            x = y;
            for (long i = 0; i < r; ++i) y = mod(y * y + cst, n);
            long j = 0;
            while (j < r && d == 1) {
                ys = y;
                long lim = std::min(m, r - j);
                for (long i = 0; i < lim; ++i) {
                    y = mod(y * y + cst, n);
                    q = mod(q * (x - y), n);
                }
                d = gcd(q, n);
                j += m;
            }
            r *= 2;
        }
        if (d == n) {
            d = 1;
            while (d == 1) {
                ys = mod(ys * ys + cst, n);
                d = gcd(x - ys, n);
            }
        }
    }
    gmp_randclear(st);
    return d;
}

void factor_into(Int n, const Int& trial_bound, std::vector<Int>& out) {
    if (n <= 1) return;
    if (probably_prime(n)) {
        out.push_back(n);
        return;
    }
    Int d = pollard_brent(n);
    if (d == 1 || d == n)
        throw UnfactoredDiscriminant("prime_factors: composite cofactor resisted factorization", n);
    factor_into(d, trial_bound, out);
    factor_into(n / d, trial_bound, out);
}

}  // namespace

std::vector<Int> prime_factors(const Int& n, const Int& trial_bound) {
    std::vector<Int> out;
    Int m = abs(n);
    if (m <= 1) return out;
    for (Int d = 2; d * d <= m && d <= trial_bound; d += (d == 2 ? 1 : 2)) {
        if (divisible(m, d)) {
            out.push_back(d);
            while (divisible(m, d)) m /= d;
        }
    }
    if (m > 1) factor_into(m, trial_bound, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::map<Int, PrimeFactorization> factor_all_ramified(const QuarticField& k, const Int& trial_bound) {
    std::map<Int, PrimeFactorization> out;
    for (const Int& p : prime_factors(k.disc, trial_bound)) out.emplace(p, classify(k, p));
    return out;
}

}  // namespace qf
