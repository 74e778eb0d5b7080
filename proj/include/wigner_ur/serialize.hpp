#pragma once

#include <json.hpp>

#include "wigner_ur/cplx_mat.hpp"
#include "wigner_ur/sqrt_rational.hpp"
#include "wigner_ur/ur_basis.hpp"
#include "wigner_ur/verify.hpp"

namespace wigner_ur::serialize {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Complex scalars serialize as [re, im] pairs with 17 significant digits.
json to_json(cplx z);
cplx complex_from_json(const json& j);

json to_json(const SqrtRational& v);
SqrtRational sqrt_rational_from_json(const json& j);

json to_json(const CplxMat& m);
CplxMat cplx_mat_from_json(const json& j);

json to_json(const std::vector<urbasis::BasisVector>& basis, double r);
std::vector<urbasis::BasisVector> basis_from_json(const json& j);

json to_json(const verify::SuiteReport& rep, double tol);

/// One row per label tuple: label columns, then re/im columns.
std::string basis_csv(const std::vector<urbasis::BasisVector>& basis);
std::string matrix_csv(const CplxMat& m);

/// Number formatting used across all serializers: shortest round-trip-exact.
std::string fmt_double(double v);

}  // namespace wigner_ur::serialize
