#pragma once

#include <json.hpp>

#include <string>

#include "gssp/collect.hpp"
#include "gssp/distortion.hpp"
#include "gssp/reduction.hpp"

namespace gssp {

/// Insertion-ordered JSON keeps serialized artifacts byte-stable.
using Json = nlohmann::ordered_json;

/// Integers within int64 range serialize as numbers, larger ones as decimal
/// strings; parsing accepts both.
Json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);

Json matrix_to_json(const IntMatrix& X);
IntMatrix matrix_from_json(const Json& j);

Json zoe_to_json(const ZoeInstance& zoe);
ZoeInstance zoe_from_json(const Json& j);

Json ssp_to_json(const SspInstance& inst);
SspInstance ssp_from_json(const Json& j);

Json solve_result_to_json(const SolveResult& res);

Json plan_to_json(const DistortionPlan& plan);

Json exponent_vector_to_json(const ExponentVector& ev);

Json equivalence_report_to_json(const EquivalenceReport& rep);

Json spectral_report_to_json(const SpectralReport& rep);

std::string dump_json(const Json& j);
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace gssp
