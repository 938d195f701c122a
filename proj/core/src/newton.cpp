#include "qf/newton.hpp"

#include <numeric>
#include <sstream>

#include "qf/arith.hpp"

namespace qf {

namespace {

std::optional<long> poly_vp(const ZPoly& a, const Int& p) {
    std::optional<long> best;
    for (const Int& c : a.coeffs()) {
        if (c == 0) continue;
        long v = valuation(c, p).valuation;
        if (!best || v < *best) best = v;
    }
    return best;
}

FpPoly reduce_mod_p(const ZPoly& a, const Int& p) {
    return FpPoly(p, a.coeffs());
}

ZPoly lift_to_z(const FpPoly& f) { return ZPoly(f.coeffs()); }

// Exact division of every coefficient by p^v.
ZPoly divide_out(const ZPoly& a, const Int& p, long v) {
    Int pv = pow_ui(p, static_cast<unsigned long>(v));
    std::vector<Int> out;
    for (const Int& c : a.coeffs()) {
        Int q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), pv.get_mpz_t());
        out.push_back(q);
    }
    return ZPoly(std::move(out));
}

}  // namespace

NewtonPolygon build_polygon(const ZPoly& F, const ZPoly& phi, const Int& p) {
    FpPoly fbar = reduce_mod_p(F, p);
    if (fbar.is_zero()) throw std::invalid_argument("build_polygon: F vanishes mod p");
    FpPoly phibar = reduce_mod_p(phi, p);
    NewtonPolygon np{p, phi, ResidueField(phibar), {}, {}, phi_adic_development(F, phi)};
    for (size_t i = 0; i < np.dev.size(); ++i)
        np.points.push_back({static_cast<long>(i), poly_vp(np.dev[i], p)});

    // Lower convex hull over the finite points (monotone chain).
    std::vector<std::pair<long, long>> pts;
    for (auto& pt : np.points)
        if (pt.u) pts.emplace_back(pt.i, *pt.u);
    std::vector<std::pair<long, long>> hull;
    for (auto& pt : pts) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull[hull.size() - 1];
            // keep if a->b->pt turns left (strictly convex from below)
            Int cross = Int(b.first - a.first) * Int(pt.second - a.second) -
                        Int(b.second - a.second) * Int(pt.first - a.first);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    for (size_t i = 0; i + 1 < hull.size(); ++i) {
        long di = hull[i + 1].first - hull[i].first;
        long du = hull[i].second - hull[i + 1].second;
        if (du <= 0) continue;  // only negative slopes belong to N+
        long g = std::gcd(di, du);
        Side s;
        s.h = du / g;
        s.e = di / g;
        s.length = di;
        s.degree = g;
        s.start = hull[i].first;
        s.start_ord = hull[i].second;
        s.residual = {};
        np.principal.push_back(s);
        np.principal.back().residual = residual_polynomial(np, np.principal.back());
    }
    return np;
}

RFPoly residual_polynomial(const NewtonPolygon& np, const Side& s) {
    RFPoly out;
    for (long k = 0; k <= s.degree; ++k) {
        long j = s.start + k * s.e;
        long u_line = s.start_ord - k * s.h;
        const ZPoly& aj = np.dev[static_cast<size_t>(j)];
        if (aj.is_zero()) {
            out.c.push_back(np.field.zero());
            continue;
        }
        ZPoly unit = divide_out(aj, np.p, u_line);
        out.c.push_back(np.field.reduce(reduce_mod_p(unit, np.p)));
    }
    return rf_trim(out);
}

RegularityReport is_p_regular(const ZPoly& F, const Int& p) {
    if (!F.is_monic()) throw std::invalid_argument("is_p_regular: F must be monic");
    RegularityReport rep;
    FpPoly fbar = reduce_mod_p(F, p);
    for (auto& [g, mult] : factor_quartic_modp(fbar)) {
        ZPoly phi = lift_to_z(g);
        NewtonPolygon np = build_polygon(F, phi, p);
        for (size_t i = 0; i < np.principal.size(); ++i) {
            bool sf = rf_squarefree(np.field, np.principal[i].residual);
            rep.sides.push_back({phi, static_cast<int>(i), sf});
            if (!sf) rep.regular = false;
        }
    }
    return rep;
}

RegularFactorization regular_factorization(const ZPoly& F, const Int& p) {
    if (!F.is_monic()) throw std::invalid_argument("regular_factorization: F must be monic");
    RegularFactorization out{p, {}};
    FpPoly fbar = reduce_mod_p(F, p);
    for (auto& [g, mult] : factor_quartic_modp(fbar)) {
        ZPoly phi = lift_to_z(g);
        if (mult == 1) {
            out.primes.push_back({1, g.degree(), phi, 0, 1, {}});
            continue;
        }
        NewtonPolygon np = build_polygon(F, phi, p);
        long covered = 0;
        for (const Side& s : np.principal) {
            covered += s.length;
            for (auto& [psi, m] : factor_residual(np.field, s.residual)) {
                if (m != 1) throw NotPRegular("residual polynomial has a repeated factor");
                out.primes.push_back({s.e, g.degree() * psi.degree(), phi, s.h, s.e, psi});
            }
        }
        if (covered != mult)
            throw std::logic_error("regular_factorization: principal part does not span ord_phi");
    }
    long total = 0;
    for (auto& pr : out.primes) total += pr.e * pr.f;
    if (total != F.degree())
        throw std::logic_error("regular_factorization: sum e*f != deg F");
    return out;
}

std::string render_polygon(const NewtonPolygon& np) {
    std::ostringstream os;
    os << "phi-adic points (i, v_p(a_i)):\n";
    for (auto& pt : np.points) {
        os << "  (" << pt.i << ", ";
        if (pt.u)
            os << *pt.u;
        else
            os << "inf";
        os << ")\n";
    }
    os << "principal sides:\n";
    if (np.principal.empty()) os << "  (none)\n";
    for (auto& s : np.principal) {
        os << "  slope -" << s.h << "/" << s.e << "  length " << s.length << "  degree "
           << s.degree << "  from abscissa " << s.start << "\n";
    }
    return os.str();
}

}  // namespace qf
