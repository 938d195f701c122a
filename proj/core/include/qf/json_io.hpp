#ifndef QF_JSON_IO_HPP
#define QF_JSON_IO_HPP

#include <json.hpp>

#include "qf/factorization.hpp"
#include "qf/quartic_field.hpp"
#include "qf/verify.hpp"

// Stable serialized form, schema_version "1":
//   { schema_version, input: {a, b, p}, normalized: {a, b, q_log},
//     factors: [{e, f, generator: {shift, numerator_coeffs, denom_exp}, inert}],
//     table_trace: {row, auxiliaries}, verification?: {checks, overall} }
// Integers are emitted as JSON numbers when they fit in 64 bits and as decimal
// strings otherwise; the parser accepts both.

namespace qf {

nlohmann::json int_to_json(const Int& x);
Int int_from_json(const nlohmann::json& j);

nlohmann::json factorization_to_json(const PrimeFactorization& r, const Int& input_a,
                                     const Int& input_b, const NormalizeResult& norm,
                                     const VerificationReport* report = nullptr);

/// Inverse of factorization_to_json (verification block excluded); used by the
/// round-trip tests and batch consumers.
PrimeFactorization factorization_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& rep);

}  // namespace qf

#endif
