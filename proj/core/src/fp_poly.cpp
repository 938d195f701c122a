#include "qf/fp_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qf {

FpPoly::FpPoly(Int p, std::vector<Int> coeffs) : p_(std::move(p)), c_(std::move(coeffs)) {
    for (auto& x : c_) x = mod(x, p_);
    trim();
}

FpPoly FpPoly::constant(const Int& p, const Int& c) { return FpPoly(p, {c}); }

FpPoly FpPoly::x(const Int& p) { return FpPoly(p, {0, 1}); }

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool FpPoly::is_monic() const { return !c_.empty() && c_.back() == 1; }

Int FpPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

Int FpPoly::lc() const { return c_.empty() ? Int(0) : c_.back(); }

FpPoly FpPoly::monic() const {
    if (is_zero() || is_monic()) return *this;
    return scaled(invmod(lc(), p_));
}

FpPoly FpPoly::derivative() const {
    std::vector<Int> d;
    for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Int(i));
    return FpPoly(p_, std::move(d));
}

Int FpPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = mod(acc * x + *it, p_);
    return acc;
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return FpPoly(a.p_, std::move(c));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return FpPoly(a.p_, std::move(c));
}

FpPoly FpPoly::operator-() const {
    std::vector<Int> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return FpPoly(p_, std::move(c));
}

FpPoly FpPoly::scaled(const Int& k) const {
    std::vector<Int> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * k;
    return FpPoly(p_, std::move(c));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() || b.is_zero()) return FpPoly(a.p_);
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return FpPoly(a.p_, std::move(c));
}

bool FpPoly::less(const FpPoly& a, const FpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    }
    return false;
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("FpPoly division by zero");
    const Int& p = a.p();
    Int lcinv = invmod(b.lc(), p);
    std::vector<Int> r(a.coeffs());
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) return {FpPoly(p), a};
    std::vector<Int> q(dq + 1, 0);
    for (int i = a.degree(); i >= db; --i) {
        Int ci = mod(r[i], p);
        if (ci == 0) continue;
        Int f = mod(ci * lcinv, p);
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeff(j);
        r[i] = 0;
    }
    return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
}

FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divmod(a, b).second; }
FpPoly operator/(const FpPoly& a, const FpPoly& b) { return divmod(a, b).first; }

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
    FpPoly x = a, y = b;
    while (!y.is_zero()) {
        FpPoly r = x % y;
        x = y;
        y = r;
    }
    return x.monic();
}

FpXgcd xgcd(const FpPoly& a, const FpPoly& b) {
    const Int& p = a.p();
    FpPoly r0 = a, r1 = b;
    FpPoly s0 = FpPoly::constant(p, 1), s1 = FpPoly(p);
    FpPoly t0 = FpPoly(p), t1 = FpPoly::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        FpPoly s = s0 - q * s1;
        FpPoly t = t0 - q * t1;
        r0 = r1; r1 = r;
        s0 = s1; s1 = s;
        t0 = t1; t1 = t;
    }
    if (!r0.is_zero() && r0.lc() != 1) {
        Int inv = invmod(r0.lc(), p);
        r0 = r0.scaled(inv);
        s0 = s0.scaled(inv);
        t0 = t0.scaled(inv);
    }
    return {r0, s0, t0};
}

FpPoly powmod(const FpPoly& base, const Int& e, const FpPoly& m) {
    FpPoly acc = FpPoly::constant(base.p(), 1);
    FpPoly b = base % m;
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = (acc * b) % m;
        b = (b * b) % m;
        k >>= 1;
    }
    return acc;
}

namespace {

// Roots of a monic polynomial, each listed once, ascending.
std::vector<Int> roots_of(const FpPoly& f) {
    const Int& p = f.p();
    std::vector<Int> roots;
    if (p < 4096) {
        for (Int c = 0; c < p; ++c)
            if (f.eval(c) == 0) roots.push_back(c);
        return roots;
    }
    // Split off the product of distinct linear factors.
    FpPoly xp = powmod(FpPoly::x(p), p, f);
    FpPoly lin = gcd(xp - FpPoly::x(p), f);
    if (lin.degree() <= 0) return roots;
    // Deterministic split of a product of distinct linears, p odd.
    Int half = (p - 1) / 2;
    std::vector<FpPoly> stack{lin};
    while (!stack.empty()) {
        FpPoly g = stack.back();
        stack.pop_back();
        if (g.degree() == 1) {
            roots.push_back(mod(-g.coeff(0), p));
            continue;
        }
        for (Int c = 0;; ++c) {
            if (c >= p) throw std::runtime_error("root splitting exhausted trials");
            FpPoly w = powmod(FpPoly(p, {c, 1}), half, g) - FpPoly::constant(p, 1);
            FpPoly d = gcd(w, g);
            if (d.degree() > 0 && d.degree() < g.degree()) {
                stack.push_back(d);
                stack.push_back(g / d);
                break;
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// Splits a monic quartic known to be the product of two distinct monic
// irreducible quadratics; returns them sorted.
std::pair<FpPoly, FpPoly> split_two_quadratics(const FpPoly& r) {
    const Int& p = r.p();
    if (p < 64) {
        for (Int u = 0; u < p; ++u) {
            for (Int v = 0; v < p; ++v) {
                FpPoly q(p, {v, u, 1});
                auto [quo, rem] = divmod(r, q);
                if (rem.is_zero()) {
                    if (FpPoly::less(quo, q)) return {quo, q};
                    return {q, quo};
                }
            }
        }
        throw std::runtime_error("quartic split: no quadratic divisor found");
    }
    Int half = (p * p - 1) / 2;
    for (Int c = 0; c < p; ++c) {
        FpPoly w = powmod(FpPoly(p, {c, 1}), half, r) - FpPoly::constant(p, 1);
        FpPoly d = gcd(w, r);
        if (d.degree() == 2) {
            FpPoly e = r / d;
            if (FpPoly::less(e, d)) return {e, d};
            return {d, e};
        }
    }
    // Linear trial elements can in principle fail to separate; fall back to
    // quadratic trials.
    for (Int c = 0; c < p; ++c) {
        FpPoly w = powmod(FpPoly(p, {c, 0, 1}), half, r) - FpPoly::constant(p, 1);
        FpPoly d = gcd(w, r);
        if (d.degree() == 2) {
            FpPoly e = r / d;
            if (FpPoly::less(e, d)) return {e, d};
            return {d, e};
        }
    }
    throw std::runtime_error("quartic split exhausted trials");
}

}  // namespace

std::vector<std::pair<FpPoly, int>> factor_quartic_modp(const FpPoly& f) {
    if (!f.is_monic()) throw std::invalid_argument("factor_quartic_modp: input must be monic");
    if (f.degree() > 4) throw std::invalid_argument("factor_quartic_modp: degree > 4");
    const Int& p = f.p();
    std::vector<std::pair<FpPoly, int>> out;
    FpPoly rest = f;
    for (const Int& r : roots_of(f)) {
        FpPoly lin(p, {-r, 1});
        int mult = 0;
        for (;;) {
            auto [q, rem] = divmod(rest, lin);
            if (!rem.is_zero()) break;
            rest = q;
            ++mult;
        }
        out.emplace_back(lin, mult);
    }
    // rest is now rootless of degree 0, 2, 3 or 4
    if (rest.degree() == 2 || rest.degree() == 3) {
        out.emplace_back(rest, 1);
    } else if (rest.degree() == 4) {
        FpPoly xp = powmod(FpPoly::x(p), p, rest);
        FpPoly xpp = powmod(xp, p, rest);
        FpPoly g2 = gcd(xpp - FpPoly::x(p), rest);
        if (g2.degree() == 0) {
            out.emplace_back(rest, 1);
        } else if (g2.degree() == 2) {
            // rest = g2^2
            out.emplace_back(g2, 2);
        } else {
            auto [q1, q2] = split_two_quadratics(rest);
            out.emplace_back(q1, 1);
            out.emplace_back(q2, 1);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return FpPoly::less(a.first, b.first); });
    return out;
}

bool is_irreducible_modp(const FpPoly& f) {
    if (f.degree() <= 0) return false;
    if (f.degree() == 1) return true;
    auto fs = factor_quartic_modp(f.monic());
    return fs.size() == 1 && fs[0].second == 1;
}

}  // namespace qf
