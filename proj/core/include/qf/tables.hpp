#ifndef QF_TABLES_HPP
#define QF_TABLES_HPP

#include <string>
#include <vector>

#include "qf/integers.hpp"

// Row guards, exposed as predicates over precomputed condition vectors so the
// guard audit can enumerate each table's domain and prove the dispatch
// exhaustive and overlap-free. classify() computes the condition vector from
// (a, b, p) and takes the unique matching row.

namespace qf {

// v_p(a) >= 1 and v_p(b) >= 1. va is clamped: use VAL_INF for a = 0.
inline constexpr long VAL_INF = 100;

struct TableACond {
    bool p_is_2;
    long va;     // 1..VAL_INF
    long vb;     // 1..3 (vb >= 4 forces va <= 2 by normalization)
    int chi_mb;  // Legendre (-b_p / p); 0 when p = 2 or vb != 2
};
std::vector<std::string> rows_matching_A(const TableACond& c);

struct TableA8Cond {
    long va;       // 2..VAL_INF
    long b_mod64;  // in {4, 12, ..., 60}
    long a_mod64;  // consulted only when b = 52 mod 64 and va = 4 (then 16 or 48)
};
std::vector<std::string> rows_matching_A8(const TableA8Cond& c);

struct TableBCond {
    int pclass;    // 2, 3, or 5 meaning p >= 5
    bool cube;     // p >= 5: -a is a cube mod p
    int chi_m3;    // p >= 5: Legendre (-3 / p)
    long vb;       // p = 3: v_3(b)
    long b_mod9;   // p = 3: 0, 3 or 6
    long a2_mod9;  // p = 3: a^2 mod 9, in {1, 4, 7}
    long vB;       // p = 3: v_3(a^4 - a^2 + b)
};
std::vector<std::string> rows_matching_B(const TableBCond& c);

struct TableB6Cond {
    long vB;  // v_3(a^4 - a^2 + b) >= 2
};
std::vector<std::string> rows_matching_B6(const TableB6Cond& c);

struct TableB11Cond {
    long vD;       // v_3(disc) >= 6
    int B3_mod3;   // 1 or 2
    int s_mod3;    // 1 or 2 (s is prime to 3)
    int chi_m2B3;  // Legendre-style (-2 B_3 / 3): 1 when -2 B_3 = 1 mod 3, else -1
};
std::vector<std::string> rows_matching_B11(const TableB11Cond& c);

struct TableCCond {
    int pclass;       // 2, 3, or 5 meaning p >= 5
    bool fourth_mb;   // p >= 5: -b is a fourth power mod p
    int chi_m1;       // p >= 5: Legendre (-1 / p)
    int chi_mb;       // p >= 5: Legendre (-b / p)
    bool fourth_4b;   // p >= 5: 4b is a fourth power mod p
    bool fourth_b;    // p >= 5: b is a fourth power mod p
    int chi_2;        // p >= 5: Legendre (2 / p)
    long b_mod3;      // p = 3
    long a_mod8;      // p = 2: in {0, 2, 4, 6}
    long b_mod8;      // p = 2: odd
    long s_mod16;     // p = 2: (1 + a + b) mod 16
};
std::vector<std::string> rows_matching_C(const TableCCond& c);

struct TableC14Cond {
    long vA;  // v_2(4s^3 + a) after the regularizing shift; VAL_INF when zero
    long vB;  // v_2(P(s)) >= 3
};
std::vector<std::string> rows_matching_C14(const TableC14Cond& c);

struct TableDCond {
    int pclass;   // 2, 3, or 5 meaning p >= 5
    long a_mod3;  // p = 3
    long b_mod3;  // p = 3
    long vD;      // p >= 5: v_p(disc)
    int chi_m2;   // p >= 5, vD = 1: Legendre (-2 / p)
};
std::vector<std::string> rows_matching_D(const TableDCond& c);

struct TableD8Cond {
    long vD;      // >= 2
    int chi_m2;   // Legendre (-2 / p)
    int chi_m6B;  // Legendre (-6 B_p / p); only consulted when vD is even
};
std::vector<std::string> rows_matching_D8(const TableD8Cond& c);

}  // namespace qf

#endif
