#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fpq/brick.hpp"
#include "fpq/quiver.hpp"
#include "fpq/rep.hpp"

namespace fpq {

using Json = nlohmann::json;

/// Schema id stamped on every report. Bump on any incompatible layout change.
inline constexpr const char* kReportSchema = "fpq-report/1";

/// Matrix entries are serialized as decimal strings so rational and large
/// integer data survive JSON round trips exactly.
Json quiver_to_json(const BoundQuiver& bq);
BoundQuiver quiver_from_json(const Json& j);

Json rep_to_json(const Rep<PrimeField>& m);
Rep<PrimeField> rep_from_json(const BoundQuiver& bq, PrimeField f, const Json& j);

Json adjacency_to_json(const std::vector<std::vector<long long>>& a);
std::vector<std::vector<long long>> adjacency_from_json(const Json& j);

/// Skeleton report: schema id + command name; callers fill "inputs",
/// "results" and "certificate".
Json report_header(const std::string& command);

/// Full certificate for a brick list: field, quiver, every brick module.
Json brick_list_certificate(const BrickList& bl);

/// Full certificate for a Frobenius-Perron estimate: the brick list, the
/// winning set with its adjacency matrix, the spectral value and method.
Json fpdim_certificate(const FpEstimate& est);

struct RecheckResult {
    bool ok = true;
    std::vector<std::string> failures;
    int checks = 0;
    void fail(const std::string& msg) {
        ok = false;
        failures.push_back(msg);
    }
};

/// Recomputes every claim in a report's certificate from the certificate
/// alone: representations satisfy their relations, listed bricks are bricks,
/// the witness set is Hom-orthogonal, the adjacency matrix matches freshly
/// computed Ext dimensions, and the spectral value matches the adjacency
/// matrix within tolerance.
RecheckResult recheck_certificate(const Json& report);

}  // namespace fpq
