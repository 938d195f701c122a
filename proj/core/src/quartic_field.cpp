#include "qf/quartic_field.hpp"

#include <stdexcept>

#include "qf/arith.hpp"

namespace qf {

Int discriminant(const Int& a, const Int& b) {
    return 256 * b * b * b - 27 * a * a * a * a;
}

namespace {

std::vector<Int> divisors_signed(const Int& n) {
    Int m = abs(n);
    std::vector<Int> out;
    for (Int d = 1; d * d <= m; ++d) {
        if (divisible(m, d)) {
            Int e = m / d;
            out.push_back(d);
            out.push_back(-d);
            if (e != d) {
                out.push_back(e);
                out.push_back(-e);
            }
        }
    }
    return out;
}

bool is_perfect_square(const Int& n, Int& root) {
    if (n < 0) return false;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return true;
}

}  // namespace

bool is_irreducible_quartic(const Int& a, const Int& b) {
    if (b == 0) return false;  // root at 0
    if (abs(b) > Int("1000000000"))
        throw std::invalid_argument("is_irreducible_quartic: |b| > 1e9 exceeds the divisor search bound");
    // Integer roots divide b.
    for (const Int& r : divisors_signed(b)) {
        if (r * r * r * r + a * r + b == 0) return false;
    }
    // (X^2 + cX + d)(X^2 - cX + e) with d e = b, d + e = c^2, c(e - d) = a.
    for (const Int& d : divisors_signed(b)) {
        Int e = b / d;
        Int c2 = d + e;
        Int c;
        if (!is_perfect_square(c2, c)) continue;
        if (c * (e - d) == a || (-c) * (e - d) == a) return false;
    }
    return true;
}

QuarticField make_quartic_field(const Int& a, const Int& b) {
    if (!is_irreducible_quartic(a, b))
        throw std::invalid_argument("X^4 + aX + b is reducible over Q");
    return {a, b, discriminant(a, b)};
}

NormalizeResult normalize(const Int& a, const Int& b) {
    NormalizeResult out{a, b, {}};
    if (b == 0) return out;
    // Every prime with v_p(a) >= 3 and v_p(b) >= 4 divides b; trial-divide b.
    Int m = abs(b);
    for (Int d = 2; d * d <= m; ++d) {
        if (!divisible(m, d)) continue;
        while (divisible(m, d)) m /= d;
        long vb = vp(out.b, d).value();
        long va = out.a == 0 ? vb : vp(out.a, d).value();  // v_p(0) treated as large
        long q = out.a == 0 ? vb / 4 : std::min(va / 3, vb / 4);
        if ((out.a == 0 || va >= 3) && vb >= 4 && q >= 1) {
            if (out.a != 0) out.a /= pow_ui(d, 3 * q);
            out.b /= pow_ui(d, 4 * q);
            out.substitutions.push_back({d, q});
        }
    }
    if (m > 1) {
        long vb = vp(out.b, m).value_or(0);
        long va = out.a == 0 ? vb : vp(out.a, m).value_or(0);
        long q = out.a == 0 ? vb / 4 : std::min(va / 3, vb / 4);
        if ((out.a == 0 || va >= 3) && vb >= 4 && q >= 1) {
            if (out.a != 0) out.a /= pow_ui(m, 3 * q);
            out.b /= pow_ui(m, 4 * q);
            out.substitutions.push_back({m, q});
        }
    }
    return out;
}

ShiftedQuartic shift_quartic(const QuarticField& k, const Int& s) {
    ShiftedQuartic out;
    out.s = s;
    out.A = 4 * s * s * s + k.a;
    out.B = s * s * s * s + k.a * s + k.b;
    out.F = k.poly().shifted(s);
    return out;
}

}  // namespace qf
