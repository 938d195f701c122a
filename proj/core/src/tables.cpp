#include "qf/tables.hpp"

#include <stdexcept>

#include "qf/arith.hpp"
#include "qf/classify.hpp"
#include "qf/newton.hpp"

// Row dispatch and generator recipes for the complete quartic trinomial case
// analysis. Each table_* handler assumes its entry condition already holds.

namespace qf {

// ---------------------------------------------------------------------------
// Guard predicates.

std::vector<std::string> rows_matching_A(const TableACond& c) {
    std::vector<std::string> out;
    if (c.vb == 1) out.push_back("A7");
    if (c.va == 1 && c.vb >= 2) out.push_back("A3");
    if (c.va == 2 && c.vb >= 3) out.push_back("A2");
    if (c.va >= 3 && c.vb == 3) out.push_back("A1");
    if (c.vb == 2 && c.va >= 2) {
        if (c.p_is_2) {
            out.push_back("A8");
        } else if (c.chi_mb == -1) {
            out.push_back("A4");
        } else if (c.va == 2) {
            out.push_back("A5");
        } else {
            out.push_back("A6");
        }
    }
    return out;
}

std::vector<std::string> rows_matching_A8(const TableA8Cond& c) {
    std::vector<std::string> out;
    long b16 = c.b_mod64 % 16;
    long b32 = c.b_mod64 % 32;
    if (c.va == 2) out.push_back("A8.1");
    if (c.va == 3 && b16 == 12) out.push_back("A8.2");
    if (c.va == 3 && b16 == 4) out.push_back("A8.3");
    if (c.va == 4 && b32 == 4) out.push_back("A8.4");
    if (c.va == 4 && c.b_mod64 == 20) out.push_back("A8.5");
    if (c.va == 4 && c.b_mod64 == 52 && c.a_mod64 == 16) out.push_back("A8.6");
    if (c.va == 4 && c.b_mod64 == 52 && c.a_mod64 == 48) out.push_back("A8.7");
    if (c.va >= 4 && b32 == 12) out.push_back("A8.8");
    if (c.va == 4 && b32 == 28) out.push_back("A8.9");
    if (c.va >= 5 && b32 == 28) out.push_back("A8.10");
    if (c.va >= 5 && b32 == 20) out.push_back("A8.11");
    if (c.va >= 5 && c.b_mod64 == 36) out.push_back("A8.12");
    if (c.va == 5 && c.b_mod64 == 4) out.push_back("A8.13");
    if (c.va >= 6 && c.b_mod64 == 4) out.push_back("A8.14");
    return out;
}

std::vector<std::string> rows_matching_B(const TableBCond& c) {
    std::vector<std::string> out;
    if (c.pclass == 2) out.push_back("B1");
    if (c.pclass == 5) {
        if (!c.cube) out.push_back("B2");
        else if (c.chi_m3 == -1) out.push_back("B3");
        else out.push_back("B4");
    }
    if (c.pclass == 3) {
        if (c.vb >= 2) {
            if (c.a2_mod9 == 1) out.push_back("B6");
            else out.push_back("B5");
        } else if (c.b_mod9 == 6) {
            if (c.a2_mod9 == 4) out.push_back("B8");
            else out.push_back("B7");
        } else if (c.b_mod9 == 3) {
            if (c.a2_mod9 != 7) out.push_back("B9");
            else if (c.vB == 2) out.push_back("B10");
            else out.push_back("B11");
        }
    }
    return out;
}

std::vector<std::string> rows_matching_B6(const TableB6Cond& c) {
    std::vector<std::string> out;
    if (c.vB == 2) out.push_back("B6.1");
    if (c.vB >= 3) out.push_back("B6.2");
    return out;
}

std::vector<std::string> rows_matching_B11(const TableB11Cond& c) {
    std::vector<std::string> out;
    if (c.vD == 6) {
        if (c.B3_mod3 == 1) out.push_back("B11.1");
        else if (c.s_mod3 == 1) out.push_back("B11.2");
        else out.push_back("B11.3");
    } else if (c.vD % 2 == 1) {
        if (c.vD >= 9) out.push_back("B11.4.4");
        if (c.vD == 7) out.push_back("B11.4.5");
    } else if (c.vD >= 8) {
        // Printed guard for the two-factor row asks v_3(disc) = 2r with
        // r >= 5, leaving v_3(disc) = 8 uncovered; r >= 4 closes the gap and
        // the verification oracles accept it (errata ledger).
        if (c.chi_m2B3 == -1) out.push_back("B11.4.6");
        else out.push_back("B11.4.7");
    }
    return out;
}

std::vector<std::string> rows_matching_C(const TableCCond& c) {
    std::vector<std::string> out;
    if (c.pclass == 5) {
        if (c.fourth_mb) {
            out.push_back(c.chi_m1 == 1 ? "C2" : "C3");
        } else if (c.chi_mb == 1) {
            out.push_back("C4");
        } else if (c.chi_2 == 1 && c.fourth_b) {
            out.push_back("C1");
        } else if (c.fourth_4b) {
            out.push_back("C5");
        } else {
            out.push_back("C6");
        }
    }
    if (c.pclass == 3) out.push_back(c.b_mod3 == 1 ? "C7" : "C8");
    if (c.pclass == 2) {
        long a4 = c.a_mod8 % 4, b4 = c.b_mod8 % 4;
        if (b4 == 1 && a4 == 0) out.push_back("C9");
        if (b4 == 3 && a4 == 2) out.push_back("C10");
        if (b4 == 1 && a4 == 2) out.push_back("C11");
        if (c.b_mod8 == 7 && c.a_mod8 == 4) out.push_back("C12");
        if (c.b_mod8 == 7 && c.a_mod8 == 0)
            out.push_back(c.s_mod16 == 8 ? "C13" : "C14");
        if (c.b_mod8 == 3 && c.a_mod8 == 4) out.push_back("C15");
        // Unlisted combination: b = 3 mod 8, a = 0 mod 8. The polygon at
        // X - 1 has a single side of slope -1/2 with irreducible residual
        // Y^2 + Y + 1, so 2 Z_K = (2, alpha - 1)^2 with f = 2 (errata ledger).
        if (c.b_mod8 == 3 && c.a_mod8 == 0) out.push_back("C16");
    }
    return out;
}

std::vector<std::string> rows_matching_C14(const TableC14Cond& c) {
    std::vector<std::string> out;
    if (c.vA == 1) out.push_back("C14.1");
    if (c.vA >= 2) {
        if (c.vB == 2 * c.vA - 1) out.push_back("C14.2");
        else if (c.vB > 2 * c.vA) out.push_back("C14.3");
        else if (c.vB == 2 * c.vA) out.push_back("C14.4");
        else if (c.vB % 2 == 0) out.push_back("C14.5");
        // remaining shape (vB odd below 2 vA - 1) is not regular; the shift
        // search never lands here
    }
    return out;
}

std::vector<std::string> rows_matching_D(const TableDCond& c) {
    std::vector<std::string> out;
    if (c.pclass == 2) out.push_back("D1");
    if (c.pclass == 3) {
        if (c.b_mod3 == 2) out.push_back("D2");
        else if (c.a_mod3 == 1) out.push_back("D3");
        else out.push_back("D4");
        // The printed guards give a = b = 1 mod 3 for both split rows; the
        // second one's generators vanish only when a = -1 mod 3 (errata).
    }
    if (c.pclass == 5) {
        if (c.vD == 0) out.push_back("D5");
        else if (c.vD == 1) out.push_back(c.chi_m2 == 1 ? "D6" : "D7");
        else out.push_back("D8");
    }
    return out;
}

std::vector<std::string> rows_matching_D8(const TableD8Cond& c) {
    std::vector<std::string> out;
    if (c.vD % 2 == 1) {
        out.push_back(c.chi_m2 == 1 ? "D8.1" : "D8.2");
    } else if (c.chi_m2 == 1) {
        if (c.chi_m6B == -1) out.push_back("D8.3");
        else out.push_back(c.vD == 2 ? "D8.4" : "D8.5");
    } else {
        if (c.chi_m6B == -1) out.push_back("D8.6");
        else out.push_back(c.vD == 2 ? "D8.7" : "D8.8");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Generator construction helpers.

namespace {

AlgebraicElement gen_a(const Int& p, std::vector<Int> alpha_coeffs, long h = 0) {
    return element_in_alpha(p, ZPoly(std::move(alpha_coeffs)), h);
}

AlgebraicElement gen_t(const Int& p, const Int& s, std::vector<Int> theta_coeffs, long h = 0) {
    return {p, s, ZPoly(std::move(theta_coeffs)), h};
}

PrimeIdealFactor factor(long e, long f, AlgebraicElement g, bool beta = false) {
    return {e, f, std::move(g), false, beta};
}

PrimeIdealFactor inert_factor(const Int& p) {
    return {1, 4, element_in_alpha(p, ZPoly::constant(p), 0), true, false};
}

std::vector<Rat> alpha_coords(const AlgebraicElement& w) {
    AlgebraicElement aw = to_alpha_form(w);
    Int ph = pow_ui(aw.p, aw.denom_exp);
    std::vector<Rat> c(4, Rat(0));
    for (int i = 0; i <= aw.num.degree(); ++i) c[i] = Rat(aw.num.coeff(i)) / Rat(ph);
    return c;
}

std::vector<Rat> coord_mul(const QuarticField& k, const std::vector<Rat>& x,
                           const std::vector<Rat>& y) {
    ZPoly P = k.poly();
    std::vector<Rat> prod(7, Rat(0));
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) prod[i + j] += x[i] * y[j];
    for (int d = 6; d >= 4; --d) {
        Rat lead = prod[d];
        if (lead == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < 4; ++i) prod[d - 4 + i] -= lead * Rat(P.coeff(i));
    }
    prod.resize(4);
    return prod;
}

// sum cs[i] * x^i inside K, expressed back as an element over a power-of-p
// denominator.
AlgebraicElement element_poly(const QuarticField& k, const AlgebraicElement& x,
                              const std::vector<Int>& cs) {
    std::vector<Rat> xc = alpha_coords(x);
    std::vector<Rat> acc(4, Rat(0));
    std::vector<Rat> pw = {Rat(1), Rat(0), Rat(0), Rat(0)};
    for (size_t i = 0; i < cs.size(); ++i) {
        for (int j = 0; j < 4; ++j) acc[j] += Rat(cs[i]) * pw[j];
        if (i + 1 < cs.size()) pw = coord_mul(k, pw, xc);
    }
    auto e = element_from_rational(x.p, acc);
    if (!e) throw std::logic_error("element_poly: non p-power denominator");
    return *e;
}

// Some beta rows leave a second-order detail open (which lift of an
// auxiliary root to use, or whether an added theta term cancels one level
// deeper). The documented candidates are tried in printed order and the
// first one whose norm valuation is exact wins; the verification layer
// re-checks independently.
AlgebraicElement pick_exact(const QuarticField& k, long f,
                            std::vector<AlgebraicElement> cands) {
    for (auto& w : cands)
        if (norm_valuation(w, k) == f) return w;
    return cands.front();
}

[[noreturn]] void no_row(const std::string& table, const std::string& detail) {
    throw NoRowMatched("no row matched in table " + table + " (" + detail + ")");
}

std::string pick_row(const std::string& table, const std::vector<std::string>& rows,
                     const std::string& detail) {
    if (rows.empty()) no_row(table, detail);
    return rows.front();
}

long val_or_inf(const Int& x, const Int& p) {
    auto v = vp(x, p);
    return v ? *v : VAL_INF;
}

// ---------------------------------------------------------------------------
// Table A.

PrimeFactorization table_A8(const QuarticField& k, PrimeFactorization r) {
    const Int two = 2;
    TableA8Cond c{val_or_inf(k.a, two), mod(k.b, Int(64)).get_si(), mod(k.a, Int(64)).get_si()};
    r.trace.row = pick_row("A8", rows_matching_A8(c),
                           "v2(a)=" + std::to_string(c.va) + " b=" + std::to_string(c.b_mod64) + " mod 64");
    const std::string& row = r.trace.row;

    AlgebraicElement phi2 = gen_a(two, {0}, 0);
    if (row == "A8.1") phi2 = gen_a(two, {2, 0, 1}, 1);
    else if (row == "A8.2" || row == "A8.8") phi2 = gen_a(two, {0, 2, 0, 1}, 2);
    else if (row == "A8.3") phi2 = gen_a(two, {0, 2, 2, 1}, 2);
    else if (row == "A8.4" || row == "A8.12") phi2 = gen_a(two, {2, 2, 1}, 2);
    else if (row == "A8.5" || row == "A8.11") phi2 = gen_a(two, {-2, 2, 1}, 2);
    else if (row == "A8.6") phi2 = gen_a(two, {0, -2, -2, 1}, 3);
    else if (row == "A8.7") phi2 = gen_a(two, {0, 6, -2, 1}, 3);
    else if (row == "A8.9") phi2 = gen_a(two, {2, 0, 1}, 2);
    else if (row == "A8.10") phi2 = gen_a(two, {2, 12, 1}, 2);
    else if (row == "A8.13") phi2 = gen_a(two, {-4, -2, 0, 1}, 3);
    else if (row == "A8.14") phi2 = gen_a(two, {4, -2, 4, 1}, 3);

    bool quartic = row == "A8.1" || row == "A8.2" || row == "A8.3" || row == "A8.4" || row == "A8.11";
    bool square = row == "A8.5" || row == "A8.8" || row == "A8.12";
    if (quartic) {
        r.factors.push_back(factor(4, 1, phi2));
    } else if (square) {
        r.factors.push_back(factor(2, 2, phi2));
    } else {
        AlgebraicElement phi2p1 = phi2;
        phi2p1.num = phi2.num + ZPoly::constant(pow_ui(Int(2), phi2.denom_exp));
        r.factors.push_back(factor(2, 1, phi2));
        r.factors.push_back(factor(2, 1, phi2p1));
    }
    return r;
}

PrimeFactorization table_A(const QuarticField& k, const Int& p, long va, long vb) {
    PrimeFactorization r{p, k, {}, {}};
    Int bp = k.b / pow_ui(p, vb);
    Int ap = va >= VAL_INF ? Int(0) : Int(k.a / pow_ui(p, va));
    int chi = (p != 2 && vb == 2 && va >= 2) ? legendre(-bp, p) : 0;
    TableACond c{p == 2, va, vb, chi};
    std::string row = pick_row("A", rows_matching_A(c),
                               "va=" + std::to_string(va) + " vb=" + std::to_string(vb));
    if (row == "A8") return table_A8(k, std::move(r));
    r.trace.row = row;
    if (row == "A7") {
        r.factors.push_back(factor(4, 1, gen_a(p, {0, 1})));
    } else if (row == "A1") {
        r.factors.push_back(factor(4, 1, gen_a(p, {0, 0, 0, 1}, 2)));
    } else if (row == "A2") {
        Int pp = p * p;
        r.factors.push_back(factor(1, 1, gen_a(p, {0, 0, 0, 1}, 2)));
        r.factors.push_back(factor(3, 1, gen_a(p, {ap * pp, 0, 0, 1}, 2)));
        r.trace.put("a_p", ap);
    } else if (row == "A3") {
        r.factors.push_back(factor(1, 1, gen_a(p, {0, 0, 0, 1}, 1)));
        r.factors.push_back(factor(3, 1, gen_a(p, {ap * p, 0, 0, 1}, 1)));
        r.trace.put("a_p", ap);
    } else if (row == "A4") {
        r.factors.push_back(factor(2, 2, gen_a(p, {0, 0, 0, 1}, 1)));
    } else if (row == "A5") {
        auto t0 = mod_root(mod(-bp, p), 2, p);
        if (!t0) no_row("A", "A5 guard holds but -b_p has no square root");
        Int t = *t0;
        if (vp(t * t + bp, p).value_or(VAL_INF) >= 2) t += p;
        r.trace.put("t", t);
        r.factors.push_back(factor(2, 1, gen_a(p, {t * p, 0, 1}, 1)));
        r.factors.push_back(factor(2, 1, gen_a(p, {-t * p, 0, 1}, 1)));
    } else if (row == "A6") {
        auto t0 = mod_root(mod(-bp, p), 2, p);
        if (!t0) no_row("A", "A6 guard holds but -b_p has no square root");
        Int t = *t0;
        r.trace.put("t", t);
        r.factors.push_back(factor(2, 1, gen_a(p, {t * p, 0, 1, 1}, 1)));
        r.factors.push_back(factor(2, 1, gen_a(p, {-t * p, 0, 1, 1}, 1)));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Table B.

PrimeFactorization table_B6(const QuarticField& k, PrimeFactorization r, const std::string& entry) {
    // theta = alpha + a, F = P(X - a), A = a - 4a^3, B = a^4 - a^2 + b
    const Int& a = k.a;
    Int A = a - 4 * a * a * a;
    Int B = a * a * a * a - a * a + k.b;
    long vB = valuation(B, Int(3)).valuation;
    TableB6Cond c{vB};
    r.trace.row = pick_row("B6", rows_matching_B6(c), "entry " + entry + " v3(B)=" + std::to_string(vB));
    r.trace.put("A", A);
    r.trace.put("B", B);
    Int s = -a;  // theta = alpha - s
    // theta - 4a picks out the simple root of F mod 3.  Entered via b = 6 mod 9
    // the lift 4a can land one 3-adic level short; c = 4a +- 3 restores a
    // first order root, and the same c must be used in every slot that carries
    // the simple root factor (errata ledger)
    Int c4 = 4 * a;
    {
        ZPoly P = k.poly();
        if (valuation(P.eval(c4 - a), Int(3)).valuation > 1) {
            if (valuation(P.eval(c4 + 3 - a), Int(3)).valuation == 1)
                c4 += 3;
            else
                c4 -= 3;
        }
    }
    AlgebraicElement b1 = gen_t(Int(3), s, {-c4, 1});
    if (r.trace.row == "B6.1") {
        AlgebraicElement b2 = pick_exact(k, 1,
                                         {gen_t(Int(3), s, {A, 6 * a * a, -c4 + 3, 1}, 1),
                                          gen_t(Int(3), s, {A, 6 * a * a, -c4 - 3, 1}, 1),
                                          gen_t(Int(3), s, {A, 6 * a * a + 3, -c4 + 3, 1}, 1)});
        AlgebraicElement b3 = gen_t(Int(3), s, {0, 0, -c4, 1}, 1);
        r.factors.push_back(factor(1, 1, b1, true));
        r.factors.push_back(factor(2, 1, b2, true));
        r.factors.push_back(factor(1, 1, b3, true));
    } else {
        AlgebraicElement b2 = pick_exact(k, 1,
                                         {gen_t(Int(3), s, {A, 6 * a * a + 3, -c4, 1}, 1),
                                          gen_t(Int(3), s, {A, 6 * a * a - 3, -c4, 1}, 1),
                                          gen_t(Int(3), s, {A, 6 * a * a, -c4, 1}, 1)});
        AlgebraicElement b3 = gen_t(Int(3), s, {9, 0, -c4, 1}, 1);
        r.factors.push_back(factor(1, 1, b1, true));
        r.factors.push_back(factor(2, 1, b2, true));
        r.factors.push_back(factor(1, 1, b3, true));
    }
    return r;
}

PrimeFactorization table_B11(const QuarticField& k, PrimeFactorization r) {
    const Int three = 3;
    long vD = valuation(k.disc, three).valuation;
    Int M = pow_ui(three, vD + 1);
    Int b3 = k.b / 3;
    Int s = mod(-4 * b3 * invmod(k.a, M), M);
    Int A = 4 * s * s * s + k.a;
    Int B = s * s * s * s + k.a * s + k.b;
    auto vBv = valuation(B, three);
    Int B3 = vBv.unit;
    r.trace.put("s", s);
    r.trace.put("A", A);
    r.trace.put("B", B);
    int b3m = mpz_class(mod(B3, three)).get_si();
    int sm = mpz_class(mod(s, three)).get_si();
    int chi = mod(-2 * B3, three) == 1 ? 1 : -1;
    TableB11Cond c{vD, b3m, sm, chi};
    r.trace.row = pick_row("B11", rows_matching_B11(c), "v3(disc)=" + std::to_string(vD));
    const std::string& row = r.trace.row;

    if (row == "B11.1" || row == "B11.2" || row == "B11.3") {
        AlgebraicElement phi = gen_t(three, s, {A, 6 * s * s, 4 * s, 1}, 2);
        r.factors.push_back(factor(1, 1, phi));
        if (row == "B11.1") {
            r.factors.push_back(factor(1, 3, element_poly(k, phi, {-s, -1, 0, 1})));
        } else if (row == "B11.2") {
            r.factors.push_back(factor(1, 2, element_poly(k, phi, {-1, -1, 1})));
            r.factors.push_back(factor(1, 1, element_poly(k, phi, {1, 1})));
        } else {
            r.factors.push_back(factor(1, 2, element_poly(k, phi, {-1, 1, 1})));
            r.factors.push_back(factor(1, 1, element_poly(k, phi, {-1, 1})));
        }
        return r;
    }

    AlgebraicElement beta1 = gen_t(three, s, {4 * s, 1});
    // Rows 4-7 share the theta block polygon (0,vB) (1,vA) (2,1) (3,0) with
    // vB = vD - 3 and vA above the hull, so the lower hull is
    // (0,vB) (2,1) (3,0).  The printed generators cover only one lift
    // pattern of the middle residual root and fail the norm oracle on the
    // others (errata ledger); the forms below are derived from the hull and
    // certified slot by slot.  theta = -4s is the simple root throughout.
    long vB = valuation(B, three).valuation;
    ZPoly F = k.poly().shifted(s);
    auto reduced = [&](const ZPoly& n, long h) {
        return AlgebraicElement{three, s, divmod_monic(n, F).second, h};
    };
    auto pow_poly = [](const ZPoly& base, long e) {
        ZPoly out = ZPoly::constant(1);
        for (long i = 0; i < e; ++i) out = out * base;
        return out;
    };
    ZPoly t4s({4 * s, 1});
    // theta + 3c, c a unit mod 9, lifts the middle root to level two;
    // v3(N) = 4 pins it (2 from the middle slot, 2 from the deep one)
    ZPoly t3c({3, 1});
    bool lifted = false;
    for (long cc : {1, 2, 4, 5, 7, 8}) {
        if (norm_valuation(gen_t(three, s, {3 * cc, 1}), k) == 4) {
            t3c = ZPoly({Int(3 * cc), Int(1)});
            r.trace.put("c", Int(cc));
            lifted = true;
            break;
        }
    }
    if (!lifted) no_row("B11.4", "no level two lift of the middle residual root");
    // (theta+3c)(theta+4s)/3 generates the middle slot whatever the row
    AlgebraicElement pmid = reduced(t3c * t4s, 1);
    if (row == "B11.4.4" || row == "B11.4.5") {
        // vB even: the deep side has slope -(vB-1)/2, giving e = 2
        AlgebraicElement pe2 = reduced(
            ZPoly({0, 1}) * pow_poly(t3c, (vB - 4) / 2) * pow_poly(t4s, vB - 3), vB - 3);
        r.factors.push_back(factor(1, 1, beta1, true));
        r.factors.push_back(factor(1, 1, pmid, true));
        r.factors.push_back(factor(2, 1, pe2, true));
    } else if (row == "B11.4.6") {
        // vB odd with inert residual quadratic: one f = 2 slot at
        // v(theta) = (vB-1)/2
        long m = (vB - 1) / 2;
        AlgebraicElement pf2 = reduced(
            ZPoly({0, 1}) * pow_poly(t3c, m - 2) * pow_poly(t4s, 2 * m - 3), 2 * m - 3);
        r.factors.push_back(factor(1, 1, beta1, true));
        r.factors.push_back(factor(1, 2, pf2, true));
        r.factors.push_back(factor(1, 1, pmid, true));
    } else {  // B11.4.7: residual quadratic splits into -+t, t = 1 mod 3
        long m = (vB - 1) / 2;
        Int q = pow_ui(three, m);
        ZPoly tail = pow_poly(t3c, m - 1) * pow_poly(t4s, 2 * m - 1);
        auto split_slot = [&](int sign) {
            std::vector<AlgebraicElement> cands;
            for (long T : {1, 4, 7})
                cands.push_back(reduced(ZPoly({Int(sign * T * q), 1}) * tail, 2 * m - 1));
            return pick_exact(k, 1, std::move(cands));
        };
        r.factors.push_back(factor(1, 1, beta1, true));
        r.factors.push_back(factor(1, 1, pmid, true));
        r.factors.push_back(factor(1, 1, split_slot(-1), true));
        r.factors.push_back(factor(1, 1, split_slot(+1), true));
    }
    return r;
}

PrimeFactorization table_B(const QuarticField& k, const Int& p, long vb) {
    PrimeFactorization r{p, k, {}, {}};
    const Int& a = k.a;
    TableBCond c{};
    c.pclass = p == 2 ? 2 : (p == 3 ? 3 : 5);
    if (c.pclass == 5) {
        c.cube = nth_power_residue(mod(-a, p) == 0 ? Int(1) : -a, 3, p);
        c.chi_m3 = legendre(Int(-3), p);
    } else if (c.pclass == 3) {
        c.vb = vb;
        c.b_mod9 = mpz_class(mod(k.b, Int(9))).get_si();
        c.a2_mod9 = mpz_class(mod(a * a, Int(9))).get_si();
        c.vB = val_or_inf(a * a * a * a - a * a + k.b, Int(3));
    }
    std::string row = pick_row("B", rows_matching_B(c), "p class " + std::to_string(c.pclass));
    if (row == "B6" || row == "B8") return table_B6(k, std::move(r), row);
    if (row == "B11") return table_B11(k, std::move(r));
    r.trace.row = row;

    if (row == "B1") {
        r.factors.push_back(factor(1, 1, gen_a(p, {0, 1})));
        r.factors.push_back(factor(1, 1, gen_a(p, {1, 1})));
        r.factors.push_back(factor(1, 2, gen_a(p, {1, 1, 1})));
    } else if (row == "B2") {
        r.factors.push_back(factor(1, 1, gen_a(p, {0, 1})));
        r.factors.push_back(factor(1, 3, gen_a(p, {a, 0, 0, 1})));
    } else if (row == "B3") {
        auto u0 = mod_root(mod(-a, p), 3, p);
        if (!u0) no_row("B", "B3 guard holds but -a has no cube root");
        Int u = *u0;
        r.trace.put("u", u);
        r.factors.push_back(factor(1, 1, gen_a(p, {0, 1})));
        r.factors.push_back(factor(1, 1, gen_a(p, {-u, 1})));
        r.factors.push_back(factor(1, 2, gen_a(p, {u * u, u, 1})));
    } else if (row == "B4") {
        auto u0 = mod_root(mod(-a, p), 3, p);
        auto v0 = mod_root(mod(Int(-3), p), 2, p);
        if (!u0 || !v0) no_row("B", "B4 guard holds but auxiliary roots are missing");
        Int u = *u0, v = *v0;
        // three cube roots of -a: u, u w, u w^2 with w = (-1 + v) / 2
        Int inv2 = invmod(Int(2), p);
        Int r2 = mod(u * (v - 1) * inv2, p);
        Int r3 = mod(u * (-v - 1) * inv2, p);
        r.trace.put("u", u);
        r.trace.put("v", v);
        r.factors.push_back(factor(1, 1, gen_a(p, {0, 1})));
        r.factors.push_back(factor(1, 1, gen_a(p, {-u, 1})));
        r.factors.push_back(factor(1, 1, gen_a(p, {-r2, 1})));
        r.factors.push_back(factor(1, 1, gen_a(p, {-r3, 1})));
    } else if (row == "B5") {
        // Printed second generator is (3, alpha - a); the norm of alpha - a is
        // prime to 3 here, while alpha + a matches the repeated mod-3 factor
        // (errata ledger).
        r.factors.push_back(factor(1, 1, gen_a(p, {0, 1})));
        r.factors.push_back(factor(3, 1, gen_a(p, {a, 1})));
    } else if (row == "B7" || row == "B9") {
        r.factors.push_back(factor(3, 1, gen_a(p, {a, 1})));
        r.factors.push_back(factor(1, 1, gen_a(p, {0, 1})));
    } else if (row == "B10") {
        // theta = alpha + a (the printed alpha - a is on the wrong side of the
        // repeated root; errata ledger)
        Int s = -a;
        r.factors.push_back(factor(1, 1, gen_t(p, s, {-4 * a, 1})));
        r.factors.push_back(factor(3, 1, gen_t(p, s, {0, 0, -4 * a, 1}, 1)));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Table C.

PrimeFactorization table_C14(const QuarticField& k, PrimeFactorization r, const std::string& entry) {
    const Int two = 2;
    long vD = valuation(k.disc, two).valuation;
    Int bound = pow_ui(two, vD + 2);
    Int s = 0;
    long m = 0, n = 0;
    std::string row;
    for (Int mag = 1; mag <= bound; mag += 2) {
        for (int sign = 0; sign < 2; ++sign) {
            Int cand = sign ? Int(-mag) : mag;
            Int A = 4 * cand * cand * cand + k.a;
            Int B = cand * cand * cand * cand + k.a * cand + k.b;
            long vA = val_or_inf(A, two);
            long vB = valuation(B, two).valuation;  // B = P(s) != 0
            auto rows = rows_matching_C14({vA, vB});
            if (!rows.empty()) {
                s = cand;
                m = vA;
                n = vB;
                row = rows.front();
                break;
            }
        }
        if (!row.empty()) break;
    }
    if (row.empty()) no_row("C14", "no regularizing shift below the search bound");
    Int A = 4 * s * s * s + k.a;
    Int B = s * s * s * s + k.a * s + k.b;
    r.trace.row = row;
    r.trace.put("s", s);
    r.trace.put("A", A);
    r.trace.put("B", B);

    // (theta^2 + 6)/2 + theta for the e = 2 prime; the theta term can cancel
    // one level deeper, in which case (theta^2 + 6)/2 alone is the exact form
    auto b1 = [&]() {
        return pick_exact(k, 1,
                          {gen_t(two, s, {6, 2, 1}, 1), gen_t(two, s, {6, 0, 1}, 1),
                           gen_t(two, s, {10, 2, 1}, 1)});
    };
    if (row == "C14.1") {
        AlgebraicElement e3gen = pick_exact(
            k, 1, {gen_t(two, s, {A, 2, 0, 1}, 1), gen_t(two, s, {A, 0, 0, 1}, 1)});
        r.factors.push_back(factor(3, 1, e3gen, true));
        r.factors.push_back(factor(1, 1, gen_t(two, s, {4, 0, 0, 1}, 1), true));
    } else if (row == "C14.2") {
        r.factors.push_back(factor(2, 1, b1(), true));
        r.factors.push_back(factor(1, 2, pick_exact(k, 2,
                                                    {gen_t(two, s, {4, 0, 1}, 1),
                                                     gen_t(two, s, {4, 2, 1}, 1)}),
                                   true));
    } else if (row == "C14.3" || row == "C14.4") {
        Int A2 = A / pow_ui(two, m);
        Int t = mod((row == "C14.3" ? Int(1) : Int(3)) * invmod(A2, Int(4)), Int(4));
        r.trace.put("t", t);
        // Q = theta^2 + L theta + 6s^2 enters every remaining slot.  Its
        // valuation at the e = 2 prime must sit at exactly 2m - 1 for the
        // quotients below to be exact; an optional 2^(m-1) theta correction
        // restores that when the printed L = 4s lands deeper.  The valuation
        // is observable as v2(N(Q/2)) = 2m - 3 because the other two slots
        // contribute exactly zero there.
        Int qc = pow_ui(two, m - 1);
        Int L = 4 * s;
        for (long w = 0; w <= 1; ++w) {
            Int Lw = 4 * s + qc * w;
            if (norm_valuation(gen_t(two, s, {6 * s * s, Lw, 1}, 1), k) == 2 * m - 3) {
                L = Lw;
                break;
            }
        }
        // b2 = Q (theta + c) / 2^m [+ tail / 2^m], c = 2^(m-1) tc: tc odd
        // selects the wrong-digit lift at the second e = 1 prime and tail
        // repairs one level deeper; t is pinned mod 4 only, so its odd
        // translates are equally printed lifts
        Int printed_tail = row == "C14.3" ? pow_ui(two, m + 1) : Int(0);
        Int other_tail = row == "C14.3" ? Int(0) : pow_ui(two, m + 1);
        std::vector<AlgebraicElement> b2c;
        for (const Int& tail : {printed_tail, other_tail})
            for (long dt = 0; dt < 8; dt += 2) {
                Int cc = qc * (t + dt);
                b2c.push_back(gen_t(
                    two, s, {6 * s * s * cc + tail, 6 * s * s + L * cc, L + cc, 1}, m));
            }
        // b3 = theta Q / 2^m; entered with v(theta) > m at the first e = 1
        // prime (always so for vB > 2vA), theta + 2^m restores level m
        std::vector<AlgebraicElement> b3c;
        Int q2m = pow_ui(two, m);
        if (row == "C14.3") {
            for (long u = 1; u <= 3; u += 2)
                b3c.push_back(gen_t(
                    two, s,
                    {6 * s * s * u * q2m, 6 * s * s + L * u * q2m, Int(L + u * q2m), 1}, m));
        }
        b3c.push_back(gen_t(two, s, {0, 6 * s * s, L, 1}, m));
        r.factors.push_back(factor(2, 1, b1(), true));
        r.factors.push_back(factor(1, 1, pick_exact(k, 1, std::move(b2c)), true));
        r.factors.push_back(factor(1, 1, pick_exact(k, 1, std::move(b3c)), true));
    } else {  // C14.5
        long rr = n / 2;
        Int q2 = pow_ui(two, rr - 1);
        AlgebraicElement b2 = pick_exact(
            k, 1,
            {gen_t(two, s, {A, 6 * s * s, 4 * s + q2, 1}, rr),
             gen_t(two, s, {A + 2 * q2, 6 * s * s, 4 * s + q2, 1}, rr),
             gen_t(two, s, {A, 6 * s * s, 4 * s - q2, 1}, rr)});
        r.factors.push_back(factor(2, 1, b1(), true));
        r.factors.push_back(factor(2, 1, b2, true));
    }
    return r;
}

PrimeFactorization table_C(const QuarticField& k, const Int& p) {
    PrimeFactorization r{p, k, {}, {}};
    const Int& b = k.b;
    TableCCond c{};
    c.pclass = p == 2 ? 2 : (p == 3 ? 3 : 5);
    if (c.pclass == 5) {
        c.fourth_mb = nth_power_residue(-b, 4, p);
        c.chi_m1 = legendre(Int(-1), p);
        c.chi_mb = legendre(-b, p);
        c.fourth_4b = nth_power_residue(4 * b, 4, p);
        c.fourth_b = nth_power_residue(b, 4, p);
        c.chi_2 = legendre(Int(2), p);
    } else if (c.pclass == 3) {
        c.b_mod3 = mpz_class(mod(b, Int(3))).get_si();
    } else {
        c.a_mod8 = mpz_class(mod(k.a, Int(8))).get_si();
        c.b_mod8 = mpz_class(mod(b, Int(8))).get_si();
        c.s_mod16 = mpz_class(mod(1 + k.a + b, Int(16))).get_si();
    }
    std::string row = pick_row("C", rows_matching_C(c), "p class " + std::to_string(c.pclass));
    if (row == "C14" || row == "C15") return table_C14(k, std::move(r), row);
    r.trace.row = row;

    if (row == "C2") {
        Int t = *mod_root(mod(-b, p), 4, p);
        Int u = *mod_root(mod(Int(-1), p), 2, p);
        r.trace.put("t", t);
        r.trace.put("u", u);
        r.factors.push_back(factor(1, 1, gen_a(p, {t, 1})));
        r.factors.push_back(factor(1, 1, gen_a(p, {-t, 1})));
        r.factors.push_back(factor(1, 1, gen_a(p, {mod(u * t, p), 1})));
        r.factors.push_back(factor(1, 1, gen_a(p, {mod(-u * t, p), 1})));
    } else if (row == "C3") {
        Int t = *mod_root(mod(-b, p), 4, p);
        r.trace.put("t", t);
        r.factors.push_back(factor(1, 1, gen_a(p, {t, 1})));
        r.factors.push_back(factor(1, 1, gen_a(p, {-t, 1})));
        r.factors.push_back(factor(1, 2, gen_a(p, {t * t, 0, 1})));
    } else if (row == "C4") {
        Int t = *mod_root(mod(-b, p), 2, p);
        r.trace.put("t", t);
        r.factors.push_back(factor(1, 2, gen_a(p, {t, 0, 1})));
        r.factors.push_back(factor(1, 2, gen_a(p, {-t, 0, 1})));
    } else if (row == "C1" || row == "C5") {
        Int u = *mod_root(mod(4 * b, p), 4, p);
        Int t = mod(u * u * invmod(Int(2), p), p);
        r.trace.put("u", u);
        r.trace.put("t", t);
        r.factors.push_back(factor(1, 2, gen_a(p, {t, u, 1})));
        r.factors.push_back(factor(1, 2, gen_a(p, {t, mod(-u, p), 1})));
    } else if (row == "C6") {
        r.factors.push_back(inert_factor(p));
    } else if (row == "C7") {
        r.factors.push_back(factor(1, 2, gen_a(p, {-1, 1, 1})));
        r.factors.push_back(factor(1, 2, gen_a(p, {-1, -1, 1})));
    } else if (row == "C8") {
        // printed with an exponent on the first factor, but 3 does not divide
        // the discriminant here, so the splitting is unramified (errata)
        r.factors.push_back(factor(1, 2, gen_a(p, {1, 0, 1})));
        r.factors.push_back(factor(1, 1, gen_a(p, {-1, 1})));
        r.factors.push_back(factor(1, 1, gen_a(p, {1, 1})));
    } else if (row == "C9" || row == "C10") {
        r.factors.push_back(factor(4, 1, gen_a(p, {-1, 1})));
    } else if (row == "C11") {
        // the table defers this case; polygon at X - 1 has sides of slopes
        // -v and -1/3, giving e = 3 and e = 1 with the generators below
        // (derivation in the errata ledger)
        r.factors.push_back(factor(3, 1, gen_t(p, Int(1), {2, 0, 0, 1}, 1)));
        r.factors.push_back(factor(1, 1, gen_t(p, Int(1), {0, 2, 0, 1}, 1)));
    } else if (row == "C12" || row == "C16") {
        r.factors.push_back(factor(2, 2, gen_a(p, {-1, 1})));
    } else if (row == "C13") {
        AlgebraicElement phi = gen_t(p, Int(1), {0, 6, 4, 1}, 2);
        r.factors.push_back(factor(2, 1, element_poly(k, phi, {1, 1})));
        r.factors.push_back(factor(1, 2, element_poly(k, phi, {1, 1, 1})));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Table D.

PrimeFactorization table_D8(const QuarticField& k, PrimeFactorization r, long vD) {
    const Int& p = r.p;
    Int M = pow_ui(p, vD + 1);
    Int s = mod(-4 * k.b * invmod(3 * k.a, M), M);
    Int A = 4 * s * s * s + k.a;
    Int B = s * s * s * s + k.a * s + k.b;
    Int Bp = p_free_part(B, p);
    r.trace.put("s", s);
    r.trace.put("A", A);
    r.trace.put("B", B);
    int chi2 = legendre(Int(-2), p);
    int chi6 = legendre(-6 * Bp, p);
    TableD8Cond c{vD, chi2, chi6};
    r.trace.row = pick_row("D8", rows_matching_D8(c), "v_p(disc)=" + std::to_string(vD));
    const std::string& row = r.trace.row;
    Int p2 = p * p;
    Int s6 = 6 * s * s;
    long rr = (vD % 2 == 1) ? (vD - 1) / 2 : vD / 2;

    // theta - v, v = -s(2 -+ u) mod p^2, u lifting a square root of -2 mod p.
    // The printed rows mix lift precisions for u between slots; each slot
    // takes the first lift giving an exact norm valuation.
    auto linear_slot = [&](const Int& u0, int sign) {
        std::vector<AlgebraicElement> cands;
        for (const Int& u : {hensel_lift_quadratic(u0, Int(2), p, 2), u0, Int(u0 + p)}) {
            Int v = mod(-s * (2 + sign * u), p2);
            cands.push_back(gen_t(p, s, {-v, 1}));
        }
        return pick_exact(k, 1, std::move(cands));
    };
    auto cubic_beta = [&](long h, long f) {
        Int q = pow_ui(p, h);
        return pick_exact(k, f,
                          {gen_t(p, s, {0, s6, 4 * s, 1}, h),
                           gen_t(p, s, {0, s6 + q, 4 * s, 1}, h),
                           gen_t(p, s, {0, s6, 4 * s + q, 1}, h)});
    };
    auto quad_beta = [&]() {
        return pick_exact(k, 2,
                          {gen_t(p, s, {s6 + p, 4 * s, 1}), gen_t(p, s, {s6 - p, 4 * s, 1}),
                           gen_t(p, s, {s6 + p, 4 * s + p, 1})});
    };
    // The pair ((t^2+4st+6s^2)(t -+ c))/p^h + tail over the split residual
    // roots -+t; the right lift of t is whichever makes both norms exact.
    auto combined_pair = [&](bool deep) {
        long h = deep ? 1 : rr;
        Int q = pow_ui(p, h);
        std::vector<Int> tail(4, 0);
        tail[deep ? 2 : 1] = q;
        auto combined = [&](const Int& cval) {
            std::vector<Int> num = {s6 * cval, s6 + 4 * s * cval, 4 * s + cval, 1};
            for (int i = 0; i < 4; ++i) num[i] += tail[i];
            return gen_t(p, s, num, h);
        };
        auto t0 = mod_root(mod(-Bp * invmod(s6, p), p), 2, p);
        if (!t0) no_row("D8", row + ": residual root for t is missing");
        Int tex = *t0;
        if (vp(s6 * tex * tex + Bp, p).value_or(VAL_INF) >= 2) tex += p;
        Int tl = hensel_lift_quadratic(*t0, mod(Bp * invmod(s6, p2), p2), p, 2);
        std::vector<Int> tcands = {deep ? tl : tex, deep ? tex : tl, *t0,
                                   *t0 + p, p2 - tl, p - *t0};
        for (const Int& t : tcands) {
            AlgebraicElement x = combined(-q * t), y = combined(q * t);
            if (norm_valuation(x, k) == 1 && norm_valuation(y, k) == 1) {
                r.trace.put("t", t);
                return std::pair<AlgebraicElement, AlgebraicElement>{x, y};
            }
        }
        r.trace.put("t", tcands.front());
        return std::pair<AlgebraicElement, AlgebraicElement>{combined(-q * tcands.front()),
                                                             combined(q * tcands.front())};
    };

    if (row == "D8.1") {
        // the printed auxiliary u = B_p / 6s^2 equals a square root of -2
        // only when the ramified block contributes a trivial norm unit; when
        // it does not, any direct square root of -2 serves (errata ledger)
        Int u0 = mod(Bp * invmod(s6, p), p);
        if (mod(u0 * u0 + 2, p) != 0) u0 = *mod_root(mod(Int(-2), p), 2, p);
        r.trace.put("u", u0);
        r.factors.push_back(factor(1, 1, linear_slot(u0, +1), true));
        r.factors.push_back(factor(1, 1, linear_slot(u0, -1), true));
        r.factors.push_back(factor(2, 1, cubic_beta(rr, 1), true));
    } else if (row == "D8.2") {
        r.factors.push_back(factor(1, 2, quad_beta(), true));
        r.factors.push_back(factor(2, 1, cubic_beta(rr, 1), true));
    } else if (row == "D8.3") {
        Int u0 = *mod_root(mod(Int(-2), p), 2, p);
        r.trace.put("u", u0);
        r.factors.push_back(factor(1, 1, linear_slot(u0, +1), true));
        r.factors.push_back(factor(1, 1, linear_slot(u0, -1), true));
        r.factors.push_back(factor(1, 2, cubic_beta(rr - 1, 2), true));
    } else if (row == "D8.4" || row == "D8.5") {
        Int u0 = *mod_root(mod(Int(-2), p), 2, p);
        r.trace.put("u", u0);
        auto [x, y] = combined_pair(row == "D8.4");
        r.factors.push_back(factor(1, 1, linear_slot(u0, +1), true));
        r.factors.push_back(factor(1, 1, linear_slot(u0, -1), true));
        r.factors.push_back(factor(1, 1, x, true));
        r.factors.push_back(factor(1, 1, y, true));
    } else if (row == "D8.6") {
        r.factors.push_back(factor(1, 2, quad_beta(), true));
        r.factors.push_back(factor(1, 2, cubic_beta(rr - 1, 2), true));
    } else {  // D8.7, D8.8
        auto [x, y] = combined_pair(row == "D8.7");
        r.factors.push_back(factor(1, 2, quad_beta(), true));
        r.factors.push_back(factor(1, 1, x, true));
        r.factors.push_back(factor(1, 1, y, true));
    }
    return r;
}

PrimeFactorization table_D(const QuarticField& k, const Int& p) {
    PrimeFactorization r{p, k, {}, {}};
    TableDCond c{};
    c.pclass = p == 2 ? 2 : (p == 3 ? 3 : 5);
    if (c.pclass == 3) {
        c.a_mod3 = mpz_class(mod(k.a, Int(3))).get_si();
        c.b_mod3 = mpz_class(mod(k.b, Int(3))).get_si();
    } else if (c.pclass == 5) {
        c.vD = vp(k.disc, p).value_or(0);
        if (c.vD == 1) c.chi_m2 = legendre(Int(-2), p);
    }
    std::string row = pick_row("D", rows_matching_D(c), "p class " + std::to_string(c.pclass));
    if (row == "D8") return table_D8(k, std::move(r), c.vD);
    r.trace.row = row;

    if (row == "D1" || row == "D2") {
        r.factors.push_back(inert_factor(p));
    } else if (row == "D3") {
        r.factors.push_back(factor(1, 1, gen_a(p, {-1, 1})));
        r.factors.push_back(factor(1, 3, gen_a(p, {-1, 1, 1, 1})));
    } else if (row == "D4") {
        r.factors.push_back(factor(1, 1, gen_a(p, {1, 1})));
        r.factors.push_back(factor(1, 3, gen_a(p, {1, 1, -1, 1})));
    } else if (row == "D5") {
        PrimeFactorization dd = dedekind_factorization(k, p);
        r.factors = std::move(dd.factors);
    } else if (row == "D6" || row == "D7") {
        Int s = mod(-4 * k.b * invmod(3 * k.a, p), p);
        r.trace.put("s", s);
        if (row == "D6") {
            Int u = *mod_root(mod(Int(-2), p), 2, p);
            Int v1 = mod(-s * (2 + u), p);
            Int v2 = mod(-s * (2 - u), p);
            r.trace.put("u", u);
            r.trace.put("v1", v1);
            r.trace.put("v2", v2);
            r.factors.push_back(factor(1, 1, gen_t(p, s, {-v1, 1})));
            r.factors.push_back(factor(1, 1, gen_t(p, s, {-v2, 1})));
            r.factors.push_back(factor(2, 1, gen_t(p, s, {0, 1})));
        } else {
            r.factors.push_back(factor(1, 2, gen_t(p, s, {6 * s * s, 4 * s, 1})));
            r.factors.push_back(factor(2, 1, gen_t(p, s, {0, 1})));
        }
    }
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------

PrimeFactorization classify(const QuarticField& k, const Int& p) {
    if (p < 2) throw std::invalid_argument("classify: p must be a prime >= 2");
    long va = val_or_inf(k.a, p);
    long vb = valuation(k.b, p).valuation;  // b != 0 since P is irreducible
    if (va >= 3 && vb >= 4)
        throw std::invalid_argument("classify: field is not normalized at p (apply normalize first)");
    PrimeFactorization r;
    if (va >= 1 && vb >= 1) r = table_A(k, p, va, vb);
    else if (vb >= 1) r = table_B(k, p, vb);
    else if (va >= 1) r = table_C(k, p);
    else r = table_D(k, p);
    long total = r.sum_ef();
    if (total != 4)
        throw std::logic_error("classify: row " + r.trace.row + " emitted sum e*f = " +
                               std::to_string(total));
    return r;
}

}  // namespace qf
