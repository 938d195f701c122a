#include "qf/zpoly.hpp"

#include <stdexcept>

namespace qf {

void ZPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ZPoly ZPoly::monomial(const Int& c, int deg) {
    std::vector<Int> v(deg + 1, 0);
    v[deg] = c;
    return ZPoly(std::move(v));
}

Int ZPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

Int ZPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat ZPoly::eval_rat(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

ZPoly ZPoly::derivative() const {
    std::vector<Int> d;
    for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Int(i));
    return ZPoly(std::move(d));
}

ZPoly ZPoly::shifted(const Int& s) const {
    // Horner: P(X+s) = (...((c_n)(X+s) + c_{n-1})(X+s) + ...)
    ZPoly acc;
    ZPoly xs({s, 1});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * xs + ZPoly::constant(*it);
    return acc;
}

ZPoly ZPoly::scaled_arg(const Int& k) const {
    std::vector<Int> out(c_.size());
    Int pw = 1;
    for (size_t i = 0; i < c_.size(); ++i) {
        out[i] = c_[i] * pw;
        pw *= k;
    }
    return ZPoly(std::move(out));
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return ZPoly(std::move(c));
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return ZPoly(std::move(c));
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return ZPoly(std::move(c));
}

ZPoly ZPoly::operator-() const {
    std::vector<Int> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return ZPoly(std::move(c));
}

ZPoly ZPoly::scaled(const Int& k) const {
    std::vector<Int> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * k;
    return ZPoly(std::move(c));
}

std::pair<ZPoly, ZPoly> divmod_monic(const ZPoly& a, const ZPoly& b) {
    if (!b.is_monic()) throw std::invalid_argument("divmod_monic: divisor must be monic");
    std::vector<Int> r(a.coeffs());
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) return {ZPoly(), a};
    std::vector<Int> q(dq + 1, 0);
    for (int i = a.degree(); i >= db; --i) {
        Int f = r[i];
        if (f == 0) continue;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeff(j);
    }
    return {ZPoly(std::move(q)), ZPoly(std::move(r))};
}

std::vector<ZPoly> phi_adic_development(const ZPoly& f, const ZPoly& phi) {
    if (!phi.is_monic() || phi.degree() < 1)
        throw std::invalid_argument("phi_adic_development: phi must be monic of degree >= 1");
    std::vector<ZPoly> out;
    ZPoly rest = f;
    if (rest.is_zero()) {
        out.emplace_back();
        return out;
    }
    while (!rest.is_zero()) {
        auto [q, r] = divmod_monic(rest, phi);
        out.push_back(r);
        rest = q;
    }
    return out;
}

Int resultant(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    int m = a.degree(), n = b.degree();
    if (m == 0) return pow_ui(a.lc(), static_cast<unsigned long>(n));
    if (n == 0) return pow_ui(b.lc(), static_cast<unsigned long>(m));
    // Sylvester matrix determinant via Bareiss fraction-free elimination.
    // Degrees are at most 4 here, so the matrix is at most 8x8.
    int size = m + n;
    std::vector<std::vector<Int>> M(size, std::vector<Int>(size, 0));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) M[r][r + j] = a.coeff(m - j);
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) M[n + r][r + j] = b.coeff(n - j);
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < size - 1; ++k) {
        if (M[k][k] == 0) {
            int piv = -1;
            for (int r = k + 1; r < size; ++r)
                if (M[r][k] != 0) { piv = r; break; }
            if (piv < 0) return 0;
            std::swap(M[k], M[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j) {
                Int t = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                mpz_divexact(M[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            M[i][k] = 0;
        }
        prev = M[k][k];
    }
    return Int(sign) * M[size - 1][size - 1];
}

Int discriminant_monic(const ZPoly& f) {
    int n = f.degree();
    Int r = resultant(f, f.derivative());
    // disc = (-1)^{n(n-1)/2} * Res(f, f') for monic f.
    long e = static_cast<long>(n) * (n - 1) / 2;
    return (e % 2 == 0) ? r : -r;
}

}  // namespace qf
