#include "qf/residue_field.hpp"

#include <algorithm>
#include <stdexcept>

namespace qf {

ResidueField::ResidueField(FpPoly phi) : phi_(std::move(phi)) {
    if (phi_.degree() < 1) throw std::invalid_argument("ResidueField: phi must be nonconstant");
}

Int ResidueField::order() const { return pow_ui(p(), static_cast<unsigned long>(ext_degree())); }

FpPoly ResidueField::inverse(const FpPoly& a) const {
    FpPoly r = reduce(a);
    if (r.is_zero()) throw std::domain_error("ResidueField: inverse of zero");
    auto e = xgcd(r, phi_);
    if (e.g.degree() != 0) throw std::domain_error("ResidueField: non-invertible element");
    return reduce(e.u.scaled(invmod(e.g.coeff(0), p())));
}

FpPoly ResidueField::pow(const FpPoly& a, const Int& e) const {
    if (e < 0) return pow(inverse(a), -e);
    FpPoly acc = one();
    FpPoly b = reduce(a);
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = mul(acc, b);
        b = mul(b, b);
        k >>= 1;
    }
    return acc;
}

bool ResidueField::is_root(const FpPoly& poly_over_base, const FpPoly& elem) const {
    FpPoly acc = zero();
    for (int i = poly_over_base.degree(); i >= 0; --i)
        acc = add(mul(acc, elem), FpPoly::constant(p(), poly_over_base.coeff(i)));
    return acc.is_zero();
}

namespace {

// Deterministic enumeration of candidate field elements: constants first,
// then polynomials in lexicographic coefficient order.
FpPoly nth_element(const ResidueField& F, const Int& n) {
    std::vector<Int> digits;
    Int k = n;
    for (int i = 0; i < F.ext_degree(); ++i) {
        digits.push_back(mod(k, F.p()));
        k /= F.p();
    }
    return FpPoly(F.p(), std::move(digits));
}

}  // namespace

std::pair<bool, FpPoly> ResidueField::sqrt(const FpPoly& a) const {
    FpPoly x = reduce(a);
    if (x.is_zero()) return {true, x};
    Int q = order();
    if (p() == 2) {
        // Frobenius: every element of F_{2^m} is a square.
        return {true, pow(x, q / 2)};
    }
    Int e = (q - 1) / 2;
    if (!pow(x, e).is_one()) return {false, zero()};
    // Tonelli-Shanks over F_q with a deterministic non-residue search.
    Int t = q - 1;
    unsigned long s = 0;
    while (mpz_even_p(t.get_mpz_t())) { t /= 2; ++s; }
    FpPoly z = zero();
    for (Int n = 2;; ++n) {
        FpPoly cand = nth_element(*this, n);
        if (cand.is_zero()) continue;
        if (!pow(cand, e).is_one()) { z = cand; break; }
    }
    FpPoly c = pow(z, t);
    FpPoly r = pow(x, (t + 1) / 2);
    FpPoly w = pow(x, t);
    unsigned long m = s;
    while (!w.is_one()) {
        unsigned long i = 0;
        FpPoly probe = w;
        while (!probe.is_one()) { probe = mul(probe, probe); ++i; }
        FpPoly b = c;
        for (unsigned long j = 0; j + i + 1 < m; ++j) b = mul(b, b);
        r = mul(r, b);
        c = mul(b, b);
        w = mul(w, c);
        m = i;
    }
    FpPoly r2 = neg(r);
    return {true, FpPoly::less(r, r2) ? r : r2};
}

int RFPoly::degree() const {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        if (!c[i].is_zero()) return i;
    return -1;
}

bool RFPoly::less(const RFPoly& a, const RFPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.c[i] != b.c[i]) return FpPoly::less(a.c[i], b.c[i]);
    }
    return false;
}

bool RFPoly::operator==(const RFPoly& o) const {
    int d = degree();
    if (d != o.degree()) return false;
    for (int i = 0; i <= d; ++i)
        if (!(c[i] == o.c[i])) return false;
    return true;
}

RFPoly rf_trim(RFPoly r) {
    while (!r.c.empty() && r.c.back().is_zero()) r.c.pop_back();
    return r;
}

RFPoly rf_add(const ResidueField& F, const RFPoly& a, const RFPoly& b) {
    RFPoly out;
    size_t n = std::max(a.c.size(), b.c.size());
    for (size_t i = 0; i < n; ++i) {
        FpPoly x = i < a.c.size() ? a.c[i] : F.zero();
        FpPoly y = i < b.c.size() ? b.c[i] : F.zero();
        out.c.push_back(F.add(x, y));
    }
    return rf_trim(out);
}

RFPoly rf_mul(const ResidueField& F, const RFPoly& a, const RFPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    RFPoly out;
    out.c.assign(a.c.size() + b.c.size() - 1, F.zero());
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            out.c[i + j] = F.add(out.c[i + j], F.mul(a.c[i], b.c[j]));
    return rf_trim(out);
}

RFPoly rf_monic(const ResidueField& F, const RFPoly& a) {
    int d = a.degree();
    if (d < 0) return a;
    FpPoly inv = F.inverse(a.c[d]);
    RFPoly out;
    for (int i = 0; i <= d; ++i) out.c.push_back(F.mul(a.c[i], inv));
    return out;
}

std::pair<RFPoly, RFPoly> rf_divmod(const ResidueField& F, const RFPoly& a, const RFPoly& b) {
    int db = b.degree();
    if (db < 0) throw std::invalid_argument("rf_divmod: division by zero");
    RFPoly r = rf_trim(a);
    int dq = r.degree() - db;
    if (dq < 0) return {{}, r};
    FpPoly lcinv = F.inverse(b.c[db]);
    RFPoly q;
    q.c.assign(dq + 1, F.zero());
    while (r.degree() >= db) {
        int dr = r.degree();
        FpPoly f = F.mul(r.c[dr], lcinv);
        q.c[dr - db] = f;
        for (int j = 0; j <= db; ++j)
            r.c[dr - db + j] = F.sub(r.c[dr - db + j], F.mul(f, b.c[j]));
        r = rf_trim(r);
    }
    return {rf_trim(q), r};
}

RFPoly rf_gcd(const ResidueField& F, const RFPoly& a, const RFPoly& b) {
    RFPoly x = rf_trim(a), y = rf_trim(b);
    while (!y.is_zero()) {
        RFPoly r = rf_divmod(F, x, y).second;
        x = y;
        y = r;
    }
    return rf_monic(F, x);
}

RFPoly rf_derivative(const ResidueField& F, const RFPoly& a) {
    RFPoly out;
    for (size_t i = 1; i < a.c.size(); ++i)
        out.c.push_back(F.mul(a.c[i], FpPoly::constant(F.p(), Int(i))));
    return rf_trim(out);
}

FpPoly rf_eval(const ResidueField& F, const RFPoly& a, const FpPoly& x) {
    FpPoly acc = F.zero();
    for (int i = a.degree(); i >= 0; --i) acc = F.add(F.mul(acc, x), a.c[i]);
    return acc;
}

bool rf_squarefree(const ResidueField& F, const RFPoly& r) {
    RFPoly d = rf_derivative(F, r);
    if (d.is_zero()) return r.degree() <= 0;
    return rf_gcd(F, r, d).degree() == 0;
}

namespace {

RFPoly rf_linear(const ResidueField& F, const FpPoly& root) {
    RFPoly l;
    l.c = {F.neg(root), F.one()};
    return l;
}

// Roots in F_phi of a monic polynomial of degree <= 2 over F_phi.
std::vector<FpPoly> rf_quadratic_roots(const ResidueField& F, const RFPoly& r) {
    std::vector<FpPoly> roots;
    if (r.degree() == 1) {
        roots.push_back(F.neg(r.c[0]));
        return roots;
    }
    const FpPoly& beta = r.c[1];
    const FpPoly& gamma = r.c[0];
    if (F.p() == 2) {
        // Small field (at most F_16 in the quartic setting): enumerate.
        Int q = F.order();
        for (Int n = 0; n < q; ++n) {
            FpPoly cand = nth_element(F, n);
            FpPoly val = F.add(F.add(F.mul(cand, cand), F.mul(beta, cand)), gamma);
            if (val.is_zero()) roots.push_back(cand);
        }
    } else {
        FpPoly disc = F.sub(F.mul(beta, beta),
                            F.mul(FpPoly::constant(F.p(), 4), gamma));
        auto [ok, d] = F.sqrt(disc);
        if (!ok) return roots;
        FpPoly inv2 = F.inverse(FpPoly::constant(F.p(), 2));
        FpPoly r1 = F.mul(F.sub(d, beta), inv2);
        FpPoly r2 = F.mul(F.sub(F.neg(d), beta), inv2);
        roots.push_back(r1);
        if (!(r1 == r2)) roots.push_back(r2);
    }
    std::sort(roots.begin(), roots.end(), FpPoly::less);
    return roots;
}

}  // namespace

std::vector<std::pair<RFPoly, int>> factor_residual(const ResidueField& F, const RFPoly& r0) {
    RFPoly r = rf_trim(r0);
    if (r.is_zero()) throw std::invalid_argument("factor_residual: zero polynomial");
    std::vector<std::pair<RFPoly, int>> out;
    if (r.degree() == 0) return out;
    RFPoly m = rf_monic(F, r);
    if (F.ext_degree() == 1) {
        // Base-field case: delegate to the F_p machinery.
        std::vector<Int> coeffs;
        for (auto& ci : m.c) coeffs.push_back(ci.coeff(0));
        FpPoly base(F.p(), std::move(coeffs));
        for (auto& [f, mult] : factor_quartic_modp(base)) {
            RFPoly lift;
            for (auto& ci : f.coeffs()) lift.c.push_back(FpPoly::constant(F.p(), ci));
            out.emplace_back(lift, mult);
        }
        return out;
    }
    if (m.degree() > 2)
        throw std::invalid_argument("factor_residual: degree over extension field exceeds 2");
    if (m.degree() == 1) {
        out.emplace_back(m, 1);
        return out;
    }
    auto roots = rf_quadratic_roots(F, m);
    if (roots.empty()) {
        out.emplace_back(m, 1);
    } else if (roots.size() == 1) {
        out.emplace_back(rf_linear(F, roots[0]), 2);
    } else {
        out.emplace_back(rf_linear(F, roots[0]), 1);
        out.emplace_back(rf_linear(F, roots[1]), 1);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return RFPoly::less(a.first, b.first); });
    return out;
}

}  // namespace qf
