#include "qf/algebraic_element.hpp"

#include <sstream>
#include <stdexcept>

#include "qf/arith.hpp"

namespace qf {

AlgebraicElement element_in_alpha(const Int& p, ZPoly g, long h) {
    return {p, Int(0), std::move(g), h};
}

AlgebraicElement to_alpha_form(const AlgebraicElement& w) {
    if (w.shift == 0) return w;
    return {w.p, Int(0), w.num.shifted(-w.shift), w.denom_exp};
}

std::optional<AlgebraicElement> element_from_rational(const Int& p, const std::vector<Rat>& alpha_coords) {
    long h = 0;
    std::vector<long> vals;
    for (const Rat& c : alpha_coords) {
        Int den = c.get_den();
        if (den == 1) {
            vals.push_back(0);
            continue;
        }
        auto v = valuation(den, p);
        if (v.unit != 1 && v.unit != -1) return std::nullopt;  // non p-power denominator
        vals.push_back(v.valuation);
        if (v.valuation > h) h = v.valuation;
    }
    std::vector<Int> num;
    for (size_t i = 0; i < alpha_coords.size(); ++i) {
        Rat scaled = alpha_coords[i] * Rat(pow_ui(p, h));
        if (scaled.get_den() != 1) return std::nullopt;
        num.push_back(scaled.get_num());
    }
    return element_in_alpha(p, ZPoly(std::move(num)), h);
}

std::vector<Rat> char_poly_of_element(const AlgebraicElement& w, const QuarticField& k) {
    if (w.num.is_zero()) throw std::invalid_argument("char_poly_of_element: zero numerator");
    Int ph = pow_ui(w.p == 0 ? Int(1) : w.p, w.denom_exp);
    if (w.num.degree() == 0) {
        // (Y - c/p^h)^4
        Rat c = Rat(w.num.coeff(0)) / Rat(ph);
        std::vector<Rat> out(5);
        out[4] = 1;
        out[3] = -4 * c;
        out[2] = 6 * c * c;
        out[1] = -4 * c * c * c;
        out[0] = c * c * c * c;
        return out;
    }
    ZPoly F = k.poly().shifted(w.shift);
    // C(y) = Res_X(F(X), y - g(X)) is monic quartic in y; interpolate it at
    // five integer points with exact rationals.
    std::vector<Int> ys = {-2, -1, 0, 1, 2};
    std::vector<Rat> vals;
    for (const Int& y : ys) {
        ZPoly h = ZPoly::constant(y) - w.num;
        vals.emplace_back(resultant(F, h));
    }
    // Lagrange interpolation.
    std::vector<Rat> C(5, Rat(0));
    for (size_t i = 0; i < ys.size(); ++i) {
        // basis_i(Y) = prod_{j != i} (Y - y_j) / (y_i - y_j)
        std::vector<Rat> basis = {Rat(1)};
        Rat denom = 1;
        for (size_t j = 0; j < ys.size(); ++j) {
            if (j == i) continue;
            denom *= Rat(ys[i] - ys[j]);
            std::vector<Rat> next(basis.size() + 1, Rat(0));
            for (size_t d = 0; d < basis.size(); ++d) {
                next[d + 1] += basis[d];
                next[d] -= basis[d] * Rat(ys[j]);
            }
            basis = std::move(next);
        }
        Rat scale = vals[i] / denom;
        for (size_t d = 0; d < basis.size(); ++d) C[d] += basis[d] * scale;
    }
    // w = g(theta)/p^h: substitute Y -> p^h Y and divide by p^{4h}.
    std::vector<Rat> out(5);
    for (int i = 0; i <= 4; ++i) {
        out[i] = C[i] * Rat(pow_ui(ph, i)) / Rat(pow_ui(ph, 4));
        out[i].canonicalize();
    }
    return out;
}

bool char_poly_is_integral(const std::vector<Rat>& cp) {
    for (const Rat& c : cp)
        if (c.get_den() != 1) return false;
    return true;
}

long norm_valuation(const AlgebraicElement& w, const QuarticField& k) {
    if (w.num.is_zero()) throw std::invalid_argument("norm_valuation: zero element");
    ZPoly F = k.poly().shifted(w.shift);
    Int r = resultant(F, w.num);
    if (r == 0) throw std::logic_error("norm_valuation: resultant vanished on irreducible quartic");
    return valuation(r, w.p).valuation - 4 * w.denom_exp;
}

AlgebraicElement element_mul(const AlgebraicElement& x, const AlgebraicElement& y, const QuarticField& k) {
    if (x.p != y.p) throw std::invalid_argument("element_mul: mismatched primes");
    AlgebraicElement ax = to_alpha_form(x), ay = to_alpha_form(y);
    ZPoly prod = ax.num * ay.num;
    ZPoly rem = divmod_monic(prod, k.poly()).second;
    return element_in_alpha(x.p, rem, ax.denom_exp + ay.denom_exp);
}

namespace {

std::string poly_to_string(const ZPoly& g, const std::string& var) {
    if (g.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = g.degree(); i >= 0; --i) {
        Int c = g.coeff(i);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? "+" : "-");
        else if (c < 0) os << "-";
        Int ac = abs(c);
        if (i == 0 || ac != 1) os << ac.get_str();
        if (i > 0) {
            if (ac != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}  // namespace

std::string to_string(const AlgebraicElement& w, const std::string& var, bool alpha_form) {
    AlgebraicElement e = (alpha_form || w.shift == 0) ? to_alpha_form(w) : w;
    std::string inner = poly_to_string(e.num, (e.shift == 0) ? var : "t");
    if (e.denom_exp == 0) return inner;
    Int den = pow_ui(e.p, e.denom_exp);
    return "(" + inner + ")/" + den.get_str();
}

}  // namespace qf
