#ifndef QF_FACTORIZATION_HPP
#define QF_FACTORIZATION_HPP

#include <string>
#include <utility>
#include <vector>

#include "qf/algebraic_element.hpp"
#include "qf/quartic_field.hpp"

namespace qf {

struct PrimeIdealFactor {
    long e;
    long f;
    AlgebraicElement generator;
    bool inert = false;  // rows printing P = (p); generator then equals p itself
    // Generators given as beta elements satisfy v_P(w) = 1 at their own prime
    // and 0 at the others, so v_p(N(w)) = f exactly; plain generators only
    // guarantee v_p(N(w)) >= f.
    bool exact_valuation = false;
};

/// Row identifier plus every auxiliary value the dispatcher used.
struct TableTrace {
    std::string row;
    std::vector<std::pair<std::string, Int>> aux;

    void put(const std::string& k, const Int& v) { aux.emplace_back(k, v); }
};

struct PrimeFactorization {
    Int p;
    QuarticField field;  // post-normalization field the result refers to
    std::vector<PrimeIdealFactor> factors;
    TableTrace trace;

    long sum_ef() const {
        long t = 0;
        for (auto& f : factors) t += f.e * f.f;
        return t;
    }
};

}  // namespace qf

#endif
