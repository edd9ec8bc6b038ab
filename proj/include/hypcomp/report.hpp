#pragma once

#include "hypcomp/equivalence.hpp"
#include "hypcomp/family.hpp"
#include "hypcomp/smoothness.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hypcomp {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits become JSON numbers, anything else "p/q".
Json rational_json(const Rational& r);

Json check_json(const std::vector<Check>& checks);

// Every report carries claim, params, checks and verdict; witness and
// certificate appear when the underlying object has them.
Json emit_report(const ComplementCertificate& cert, const std::optional<SpotCheckResult>& spot = std::nullopt);
Json emit_report(const SingularityReport& report, const FamilyParams& params);
Json emit_report(const EquivalenceVerdict& verdict, const Polynomial& q1, const Rational& c1, const Polynomial& q2,
                 const Rational& c2);
Json emit_classification(FiberClass cls, const Polynomial& q, const Rational& c);

// Two-space indented, keys in insertion order.
std::string dump(const Json& j);

}  // namespace hypcomp
