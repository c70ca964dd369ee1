#include "edmsphere/report.hpp"

#include <cmath>

namespace edmsphere::report {

namespace {

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

json rows(const Eigen::MatrixXd& m) {
  json out = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(finite_or_null(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

json values(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(finite_or_null(v(i)));
  return out;
}

json labels(std::span<const Index> zero_based) {
  json out = json::array();
  for (Index i : zero_based) out.push_back(i + 1);
  return out;
}

Eigen::MatrixXd matrix_from_rows(const json& j) {
  const auto n = static_cast<Index>(j.size());
  const auto cols = n == 0 ? Index{0} : static_cast<Index>(j.at(0).size());
  Eigen::MatrixXd m(n, cols);
  for (Index i = 0; i < n; ++i) {
    for (Index k = 0; k < cols; ++k) m(i, k) = j.at(i).at(k).get<double>();
  }
  return m;
}

json to_json(const Tolerances& tol) {
  return {{"psd", tol.psd},         {"rank", tol.rank}, {"cluster", tol.cluster},
          {"solve", tol.solve},     {"recon", tol.recon}, {"unit", tol.unit},
          {"sign", tol.sign},       {"support", tol.support}};
}

json to_json(const SphericalCertificate& cert) {
  json j = {{"status", to_string(cert.status)},
            {"w", values(cert.w)},
            {"etw", cert.etw},
            {"residual", cert.residual},
            {"unit", cert.unit}};
  j["radius"] = cert.radius ? json(*cert.radius) : json(nullptr);
  return j;
}

json to_json(const EmbeddingDimReport& rep) {
  return {{"dimension", rep.dimension},
          {"perron_applicable", rep.perron_applicable},
          {"lambda_max", rep.lambda_max},
          {"multiplicity", rep.multiplicity},
          {"lambda_max_is_one", rep.lambda_max_is_one},
          {"delta_w_residual", rep.delta_w_residual},
          {"delta_w_ok", rep.delta_w_ok},
          {"gram_rank", rep.gram_rank}};
}

json to_json(const OrthoRep& rep) {
  json j = {{"n", rep.graph.node_count()},
            {"k", rep.k},
            {"d", rep.dimension},
            {"points", rows(rep.points)},
            {"edm", rows(rep.edm.dist2().dense())},
            {"gram", rows(rep.gram.dense())},
            {"w", values(rep.w)},
            {"degenerate", rep.degenerate}};
  if (!rep.note.empty()) j["note"] = rep.note;
  return j;
}

json to_json(const SignPatternReport& rep) {
  json v = json::array();
  for (const auto& s : rep.violations) {
    v.push_back({{"i", s.i + 1}, {"j", s.j + 1}, {"value", s.value}, {"edge", s.is_edge}});
  }
  return {{"ok", rep.ok}, {"violations", std::move(v)}};
}

json to_json(const MinimalityReport& rep) {
  json blocks = json::array();
  for (const auto& b : rep.blocks) {
    blocks.push_back({{"indices", labels(b.indices)},
                      {"lambda_max", b.lambda_max},
                      {"contribution", b.contribution}});
  }
  return {{"n", rep.n},
          {"k", rep.k},
          {"multiplicity", rep.multiplicity},
          {"global_multiplicity", rep.global_multiplicity},
          {"lambda_max", rep.lambda_max},
          {"embedding_dim", rep.embedding_dim},
          {"edm_dim", rep.edm_dim},
          {"blocks", std::move(blocks)},
          {"holds", rep.holds},
          {"tight", rep.tight}};
}

json to_json(const SimplexCertificate& sc) {
  return {{"order", sc.order},
          {"simplex", sc.is_simplex},
          {"w", values(sc.w)},
          {"origin", to_string(sc.origin)},
          {"basis", to_string(sc.basis)},
          {"lambda_max", sc.lambda_max},
          {"gram_rank", sc.gram_rank},
          {"zero_rows", sc.zero_rows.size()}};
}

json to_json(const Decomposition& dec) {
  json blocks = json::array();
  for (const auto& b : dec.blocks) {
    blocks.push_back({{"indices", labels(b.indices)},
                      {"edm", rows(b.edm.dist2().dense())},
                      {"simplex", b.simplex.is_simplex},
                      {"w", values(b.simplex.w)},
                      {"origin", to_string(b.simplex.origin)},
                      {"subspace_dim", b.subspace_dim},
                      {"certificate", to_json(b.simplex)}});
  }
  json j = {{"permutation", labels(dec.permutation)},
            {"blocks", std::move(blocks)},
            {"cross_check", dec.cross_check},
            {"cross_gram", dec.cross_gram},
            {"embedding_dim", dec.embedding_dim}};
  json assignment = {{"isolated", labels(dec.isolated)}};
  assignment["block"] = dec.isolated_block ? json(*dec.isolated_block + 1) : json(nullptr);
  assignment["note"] =
      "zero rows of Delta go to the last block; attaching any of them to any other block "
      "also yields a valid decomposition";
  j["isolated_assignment"] = std::move(assignment);
  return j;
}

json to_json(const RankinCheck& rc) {
  return {{"holds", rc.holds},
          {"witness", {rc.i + 1, rc.j + 1}},
          {"min_offdiag", rc.min_offdiag},
          {"alarm", rc.alarm}};
}

json to_json(const CrosspolytopeResult& cr) {
  json j = {{"recognized", cr.recognized},
            {"permutation", labels(cr.permutation)},
            {"alarm", cr.alarm}};
  j["failed_block"] = cr.failed_block ? json(*cr.failed_block + 1) : json(nullptr);
  if (!cr.detail.empty()) j["detail"] = cr.detail;
  return j;
}

json to_json(const RankinSampleSummary& s) {
  return {{"r", s.r},
          {"n", s.n},
          {"trials", s.trials},
          {"seed", s.seed},
          {"margin", s.margin},
          {"worst_min_d2", s.worst_min_d2},
          {"best_min_d2", s.best_min_d2},
          {"worst_trial", s.worst_trial},
          {"certified", s.certified},
          {"violations", s.violations},
          {"passed", s.passed}};
}

}  // namespace edmsphere::report
