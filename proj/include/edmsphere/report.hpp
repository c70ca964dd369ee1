#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>
#include <json.hpp>

#include "edmsphere/decomposition.hpp"
#include "edmsphere/edm.hpp"
#include "edmsphere/orthorep.hpp"
#include "edmsphere/tolerances.hpp"

// JSON views of the toolkit's results. Node labels are 1-based.
namespace edmsphere::report {

using nlohmann::json;

json rows(const Eigen::MatrixXd& m);
json values(const Eigen::VectorXd& v);
json labels(std::span<const Index> zero_based);

json to_json(const Tolerances& tol);
json to_json(const SphericalCertificate& cert);
json to_json(const EmbeddingDimReport& rep);
json to_json(const OrthoRep& rep);
json to_json(const SignPatternReport& rep);
json to_json(const MinimalityReport& rep);
json to_json(const SimplexCertificate& sc);
json to_json(const Decomposition& dec);
json to_json(const RankinCheck& rc);
json to_json(const CrosspolytopeResult& cr);
json to_json(const RankinSampleSummary& s);

/// Reads back the "rows" layout written by `rows`.
Eigen::MatrixXd matrix_from_rows(const json& j);

}  // namespace edmsphere::report
