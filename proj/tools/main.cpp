#include <CLI11.hpp>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "qf/classify.hpp"
#include "qf/json_io.hpp"
#include "qf/newton.hpp"
#include "qf/verify.hpp"

using namespace qf;

namespace {

constexpr int EXIT_OK = 0;
constexpr int EXIT_VERIFY_FAIL = 1;
constexpr int EXIT_USAGE = 2;
constexpr int EXIT_NO_ROW = 3;

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed integer: " + s);
    }
}

void require_prime(const Int& p) {
    if (p < 2 || !probably_prime(p)) throw std::invalid_argument("p = " + p.get_str() + " is not prime");
}

std::string poly_string(const Int& a, const Int& b) {
    std::ostringstream os;
    os << "X^4";
    if (a != 0) os << (a > 0 ? " + " : " - ") << Int(abs(a)).get_str() << "X";
    if (b != 0) os << (b > 0 ? " + " : " - ") << Int(abs(b)).get_str();
    return os.str();
}

struct FactorOutput {
    NormalizeResult norm;
    QuarticField field;
    PrimeFactorization result;
};

FactorOutput run_classify(const Int& a, const Int& b, const Int& p) {
    NormalizeResult norm = normalize(a, b);
    QuarticField k = make_quartic_field(norm.a, norm.b);
    return {norm, k, classify(k, p)};
}

void print_text(const FactorOutput& fo, const Int& in_a, const Int& in_b, bool alpha_flag) {
    const PrimeFactorization& r = fo.result;
    std::cout << poly_string(in_a, in_b) << ", p = " << r.p << "\n";
    if (!fo.norm.substitutions.empty()) {
        std::cout << "normalized to " << poly_string(fo.norm.a, fo.norm.b) << " via";
        for (auto& s : fo.norm.substitutions)
            std::cout << " alpha -> alpha/" << s.p << "^" << s.q;
        std::cout << "\n";
    }
    std::cout << "row " << r.trace.row;
    for (auto& [k, v] : r.trace.aux) std::cout << "  " << k << " = " << v;
    std::cout << "\n" << r.p << " Z_K =";
    for (size_t i = 0; i < r.factors.size(); ++i) {
        std::cout << " P" << i + 1;
        if (r.factors[i].e > 1) std::cout << "^" << r.factors[i].e;
    }
    std::cout << "\n";
    for (size_t i = 0; i < r.factors.size(); ++i) {
        const auto& f = r.factors[i];
        std::cout << "  P" << i + 1 << " = ";
        if (f.inert) {
            std::cout << "(" << r.p << ")";
        } else {
            const AlgebraicElement& w = f.generator;
            std::cout << "(" << r.p << ", " << to_string(w, "α", alpha_flag) << ")";
            if (!alpha_flag && w.shift != 0) {
                Int s = w.shift;
                std::cout << "   [t = α " << (s > 0 ? "- " : "+ ") << Int(abs(s)).get_str() << "]";
            }
        }
        std::cout << "   e = " << f.e << ", f = " << f.f << "\n";
    }
}

int cmd_factor(const std::string& as, const std::string& bs, const std::string& ps,
               bool all_ramified, bool json_mode, bool alpha_flag) {
    Int a = parse_int(as), b = parse_int(bs);
    if (all_ramified) {
        NormalizeResult norm = normalize(a, b);
        QuarticField k = make_quartic_field(norm.a, norm.b);
        auto all = factor_all_ramified(k);
        for (auto& [p, r] : all) {
            if (json_mode) {
                std::cout << factorization_to_json(r, a, b, norm).dump() << "\n";
            } else {
                print_text({norm, k, r}, a, b, alpha_flag);
                std::cout << "\n";
            }
        }
        return EXIT_OK;
    }
    Int p = parse_int(ps);
    require_prime(p);
    FactorOutput fo = run_classify(a, b, p);
    if (json_mode)
        std::cout << factorization_to_json(fo.result, a, b, fo.norm).dump() << "\n";
    else
        print_text(fo, a, b, alpha_flag);
    return EXIT_OK;
}

int cmd_verify(const std::string& as, const std::string& bs, const std::string& ps) {
    Int a = parse_int(as), b = parse_int(bs);
    NormalizeResult norm = normalize(a, b);
    QuarticField k = make_quartic_field(norm.a, norm.b);
    std::vector<Int> primes;
    if (!ps.empty()) {
        Int p = parse_int(ps);
        require_prime(p);
        primes.push_back(p);
    } else {
        primes = prime_factors(k.disc, Int(1000000));
    }
    bool all_ok = true;
    for (const Int& p : primes) {
        VerificationReport rep = check_factorization(classify(k, p));
        for (auto& c : rep.checks) {
            std::cout << "p = " << p << "  " << c.name << ": " << (c.pass ? "pass" : "FAIL");
            if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
            std::cout << "\n";
        }
        if (!rep.overall) all_ok = false;
    }
    return all_ok ? EXIT_OK : EXIT_VERIFY_FAIL;
}

int cmd_batch(const std::string& path) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (path != "-") {
        file.open(path);
        if (!file) throw std::invalid_argument("cannot open " + path);
        in = &file;
    }
    std::vector<std::string> lines;
    for (std::string line; std::getline(*in, line);) {
        if (!line.empty() && line.find_first_not_of(" \t") != std::string::npos)
            lines.push_back(line);
    }
    std::vector<std::string> outputs(lines.size());
    std::vector<std::string> errors(lines.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t i = next.fetch_add(1); i < lines.size(); i = next.fetch_add(1)) {
            std::istringstream ls(lines[i]);
            std::string as, bs, ps;
            if (!(ls >> as >> bs >> ps)) {
                errors[i] = "malformed line: " + lines[i];
                continue;
            }
            try {
                Int a = parse_int(as), b = parse_int(bs);
                std::ostringstream os;
                if (ps == "*") {
                    NormalizeResult norm = normalize(a, b);
                    QuarticField k = make_quartic_field(norm.a, norm.b);
                    for (auto& [p, r] : factor_all_ramified(k))
                        os << factorization_to_json(r, a, b, norm).dump() << "\n";
                } else {
                    Int p = parse_int(ps);
                    require_prime(p);
                    FactorOutput fo = run_classify(a, b, p);
                    os << factorization_to_json(fo.result, a, b, fo.norm).dump() << "\n";
                }
                outputs[i] = os.str();
            } catch (const std::exception& e) {
                errors[i] = std::string(e.what()) + " (line: " + lines[i] + ")";
            }
        }
    };
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t + 1 < n && t + 1 < lines.size(); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (size_t i = 0; i < lines.size(); ++i) {
        if (!errors[i].empty()) {
            std::cerr << "error: " << errors[i] << "\n";
            return EXIT_USAGE;
        }
        std::cout << outputs[i];
    }
    return EXIT_OK;
}

int cmd_polygon(const std::string& as, const std::string& bs, const std::string& ps,
                const std::string& phis) {
    Int a = parse_int(as), b = parse_int(bs), p = parse_int(ps);
    require_prime(p);
    NormalizeResult norm = normalize(a, b);
    QuarticField k = make_quartic_field(norm.a, norm.b);
    ZPoly P = k.poly();
    std::vector<ZPoly> phis_to_draw;
    if (!phis.empty()) {
        // ascending comma-separated coefficients, e.g. "-1,1" for X - 1
        std::vector<Int> cs;
        std::istringstream ss(phis);
        for (std::string tok; std::getline(ss, tok, ',');) cs.push_back(parse_int(tok));
        phis_to_draw.emplace_back(std::move(cs));
    } else {
        FpPoly pbar(p, P.coeffs());
        for (auto& [g, e] : factor_quartic_modp(pbar)) phis_to_draw.emplace_back(ZPoly(g.coeffs()));
    }
    for (const ZPoly& phi : phis_to_draw) {
        NewtonPolygon np = build_polygon(P, phi, p);
        std::cout << render_polygon(np);
    }
    return EXIT_OK;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"prime ideal factorization in quartic fields Q[X]/(X^4 + aX + b)"};
    app.require_subcommand(1);

    std::string as, bs, ps, phis, batch_path;
    bool json_mode = false, alpha_flag = false, all_ramified = false;

    auto* factor = app.add_subcommand("factor", "factor p Z_K into prime ideals");
    factor->add_option("-a", as)->required();
    factor->add_option("-b", bs)->required();
    factor->add_option("-p", ps);
    factor->add_flag("--all-ramified", all_ramified, "every prime dividing the discriminant");
    factor->add_flag("--json", json_mode);
    factor->add_flag("--alpha", alpha_flag, "expand generators in alpha coordinates");

    auto* verify = app.add_subcommand("verify", "run the invariant suite");
    verify->add_option("-a", as)->required();
    verify->add_option("-b", bs)->required();
    verify->add_option("-p", ps);

    auto* batch = app.add_subcommand("batch", "JSON-lines over a query file ('-' for stdin)");
    batch->add_option("file", batch_path)->required();

    auto* polygon = app.add_subcommand("polygon", "render Newton polygons (debug)");
    polygon->add_option("-a", as)->required();
    polygon->add_option("-b", bs)->required();
    polygon->add_option("-p", ps)->required();
    polygon->add_option("--phi", phis, "ascending comma-separated coefficients");

    CLI11_PARSE(app, argc, argv);

    try {
        if (factor->parsed()) {
            if (!all_ramified && ps.empty())
                throw std::invalid_argument("factor needs -p or --all-ramified");
            return cmd_factor(as, bs, ps, all_ramified, json_mode, alpha_flag);
        }
        if (verify->parsed()) return cmd_verify(as, bs, ps);
        if (batch->parsed()) return cmd_batch(batch_path);
        if (polygon->parsed()) return cmd_polygon(as, bs, ps, phis);
    } catch (const NoRowMatched& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_NO_ROW;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    }
    return EXIT_USAGE;
}
