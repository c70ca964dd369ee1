#include "edmsphere/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "edmsphere/decomposition.hpp"
#include "edmsphere/edm.hpp"
#include "edmsphere/errors.hpp"
#include "edmsphere/generators.hpp"
#include "edmsphere/graph.hpp"
#include "edmsphere/kernels.hpp"
#include "edmsphere/matrix_io.hpp"
#include "edmsphere/orthorep.hpp"
#include "edmsphere/report.hpp"

namespace edmsphere::cli {

using nlohmann::json;

namespace {

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return os.str();
}

CommandOutcome rejected(std::string kind, std::string message) {
  CommandOutcome out;
  out.exit_code = kExitRejected;
  out.result["error"] = {{"kind", std::move(kind)}, {"message", message}};
  out.diagnostics = std::move(message);
  return out;
}

CommandOutcome fault(std::string kind, std::string message) {
  auto out = rejected(std::move(kind), std::move(message));
  out.exit_code = kExitFault;
  return out;
}

/// Runs `body`, mapping exceptions onto the exit-code contract.
template <class Body>
CommandOutcome guarded(Body&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    auto out = fault("parse", e.what());
    out.result["error"]["line"] = e.line();
    return out;
  } catch (const PreconditionError& e) {
    return rejected("precondition", e.what());
  } catch (const ConsistencyError& e) {
    return fault("consistency", e.what());
  } catch (const ConvergenceError& e) {
    return fault("convergence", e.what());
  }
}

json edm_facts(const Edm& edm) {
  json j = {{"n", edm.order()}, {"embedding_dim", edm.embedding_dim()}};
  const double lo = edm.min_offdiag();
  j["min_offdiag"] = std::isfinite(lo) ? json(lo) : json(nullptr);
  return j;
}

/// Shared prefix of decompose / check-rankin: parse, validate, certify.
struct PreparedEdm {
  std::optional<Edm> edm;
  SphericalCertificate cert;
  CommandOutcome rejection;
};

PreparedEdm prepare(std::string_view text, const Tolerances& tol) {
  PreparedEdm p;
  auto v = validate_edm(parse_matrix(text), tol);
  if (!v) {
    p.rejection = rejected("not-edm", std::string(to_string(v.reason)) + ": " + v.detail);
    return p;
  }
  p.edm = std::move(v.edm);
  p.cert = spherical_certificate(*p.edm);
  return p;
}

}  // namespace

CommandOutcome validate(std::string_view matrix_text, const Tolerances& tol) {
  return guarded([&] {
    CommandOutcome out;
    const auto m = parse_matrix(matrix_text);
    auto v = validate_edm(m, tol);
    out.result["n"] = m.rows();
    out.result["is_edm"] = static_cast<bool>(v);
    if (!v) {
      json rej = {{"reason", to_string(v.reason)}, {"detail", v.detail}};
      if (v.witness) {
        rej["witness"] = {{"eigenvalue", v.witness->first}, {"vector", report::values(v.witness->second)}};
      }
      out.result["rejection"] = std::move(rej);
      out.result["spherical"] = {{"status", to_string(SphericalStatus::not_edm)}};
      out.exit_code = kExitRejected;
      out.diagnostics = std::string("not an EDM: ") + to_string(v.reason) + ": " + v.detail;
      return out;
    }
    const auto& edm = *v.edm;
    const auto cert = spherical_certificate(edm);
    const auto delta = delta_of(edm);
    out.result.update(edm_facts(edm));
    out.result["spherical"] = report::to_json(cert);
    out.result["radius"] = cert.radius ? json(*cert.radius) : json(nullptr);
    out.result["unit_spherical"] = cert.status == SphericalStatus::spherical && cert.unit;
    out.result["delta_nonnegative"] = delta.nonnegative();
    if (cert.status == SphericalStatus::spherical && cert.unit) {
      const auto via = embedding_dim_via_delta(edm, cert);
      out.result["embedding_via_delta"] = report::to_json(via);
      out.verification["delta_dimension_matches_rank"] = via.dimension == edm.embedding_dim();
      out.verification["lambda_max_is_one"] = via.lambda_max_is_one;
      out.verification["delta_w_equals_w"] = via.delta_w_ok;
    } else if (cert.radius && *cert.radius < 1.0) {
      out.result["unit_sphere_note"] =
          "circumradius below 1: the points also lie on some radius-1 sphere, but unit "
          "spherical is read here as circumradius exactly 1";
    }
    const auto gf = gram_factor(edm);
    const double remeasured =
        (kernels::squared_distances(gf.config) - edm.dist2().dense()).cwiseAbs().maxCoeff();
    out.result["remeasured_distance_error"] = remeasured;
    out.verification["config_reproduces_distances"] = remeasured <= tol.solve * edm.dist2().scale();
    return out;
  });
}

CommandOutcome orthorep(std::string_view graph_text, const Tolerances& tol) {
  return guarded([&] {
    CommandOutcome out;
    const auto g = parse_graph(graph_text);
    const auto rep = sinajova_construct(g, tol);
    out.result = report::to_json(rep);
    out.verification["dimension_law"] = rep.dimension == g.node_count() - rep.k;
    if (rep.degenerate) {
      out.verification["caveat"] = true;
      out.diagnostics = rep.note;
      return out;
    }
    const auto cert = spherical_certificate(rep.edm);
    const auto signs = verify_sign_pattern(rep.edm, g);
    const auto bound = minimality_bound(rep.edm, g);
    out.result["radius"] = cert.radius ? json(*cert.radius) : json(nullptr);
    out.result["minimality"] = report::to_json(bound);
    out.verification["caveat"] = false;
    out.verification["unit_spherical"] = cert.unit;
    out.verification["sign_pattern"] = signs.ok;
    out.verification["minimality_holds"] = bound.holds;
    out.verification["minimality_tight"] = bound.tight;
    const bool all = cert.unit && signs.ok && bound.holds && bound.tight;
    if (!all) {
      out.exit_code = kExitFault;
      out.diagnostics = "orthorep verification failed";
    }
    return out;
  });
}

CommandOutcome decompose(std::string_view matrix_text, const Tolerances& tol) {
  return guarded([&] {
    auto p = prepare(matrix_text, tol);
    if (!p.edm) return p.rejection;
    try {
      const auto dec = kuperberg_decompose(*p.edm);
      CommandOutcome out;
      out.result = report::to_json(dec);
      out.verification["block_count"] = static_cast<Index>(dec.blocks.size()) ==
                                        p.edm->order() - p.edm->embedding_dim();
      out.verification["cross_check_ok"] = dec.cross_check <= tol.sign;
      out.verification["cross_gram_ok"] = dec.cross_gram <= tol.solve;
      return out;
    } catch (const PreconditionError& e) {
      auto out = rejected("precondition", e.what());
      json facts = edm_facts(*p.edm);
      facts["unit_spherical"] = p.cert.status == SphericalStatus::spherical && p.cert.unit;
      facts["radius"] = p.cert.radius ? json(*p.cert.radius) : json(nullptr);
      facts["codimension"] = p.edm->order() - p.edm->embedding_dim();
      out.result["precondition"] = std::move(facts);
      return out;
    }
  });
}

CommandOutcome check_rankin_file(std::string_view matrix_text, const Tolerances& tol) {
  return guarded([&] {
    auto p = prepare(matrix_text, tol);
    if (!p.edm) return p.rejection;
    const Index n = p.edm->order();
    const Index r = p.edm->embedding_dim();
    CommandOutcome out;
    out.result.update(edm_facts(*p.edm));
    bool ran = false;
    if (n == r + 2) {
      const auto rc = rankin_codimension2_check(*p.edm);
      out.result["codimension2"] = report::to_json(rc);
      out.verification["codimension2_holds"] = rc.holds;
      if (rc.alarm) {
        out.exit_code = kExitFault;
        out.diagnostics = "consistency alarm: every off-diagonal exceeds 2 at codimension 2";
      }
      ran = true;
    }
    if (n == 2 * r) {
      try {
        const auto cr = crosspolytope_recognize(*p.edm);
        out.result["crosspolytope"] = report::to_json(cr);
        out.verification["crosspolytope"] = cr.recognized;
        if (cr.alarm) {
          out.exit_code = kExitFault;
          out.diagnostics = "consistency alarm: " + cr.detail;
        }
      } catch (const PreconditionError& e) {
        // At n = r + 2 = 2r the codimension-2 check already ran.
        if (!ran) throw;
        out.result["crosspolytope"] = {{"recognized", false}, {"precondition", e.what()}};
      }
      ran = true;
    }
    if (!ran) {
      throw PreconditionError("check-rankin: needs n = r + 2 or n = 2r, got n = " +
                              std::to_string(n) + ", r = " + std::to_string(r));
    }
    return out;
  });
}

CommandOutcome check_rankin_sample(Index r, Index trials, std::uint64_t seed, const Tolerances& tol) {
  return guarded([&] {
    CommandOutcome out;
    const auto s = sample_rankin(r, trials, seed, tol.sign, tol);
    out.result = report::to_json(s);
    out.verification["all_trials_within_bound"] = s.passed;
    if (!s.passed) {
      out.exit_code = kExitFault;
      out.diagnostics = "consistency alarm: " + std::to_string(s.violations) +
                        " trials have every squared distance above 2";
    }
    return out;
  });
}

std::string generate(std::string_view kind, const std::vector<double>& params,
                     std::optional<std::uint64_t> seed, const Tolerances& tol) {
  auto need = [&](std::size_t count, const char* usage) {
    if (params.size() != count) throw PreconditionError(std::string("usage: gen ") + usage);
  };
  auto as_index = [](double v, const char* name) {
    if (!(v >= 0.0) || v != std::floor(v)) {
      throw PreconditionError(std::string(name) + " must be a nonnegative integer");
    }
    return static_cast<Index>(v);
  };
  if (kind == "simplex") {
    need(2, "simplex <n> <gamma>");
    return format_matrix_text(gen_regular_simplex(as_index(params[0], "n"), params[1], tol).dist2().dense());
  }
  if (kind == "unit-simplex") {
    need(1, "unit-simplex <n>");
    return format_matrix_text(gen_unit_simplex(as_index(params[0], "n"), tol).dist2().dense());
  }
  if (kind == "crosspolytope") {
    need(1, "crosspolytope <r>");
    return format_matrix_text(gen_crosspolytope(as_index(params[0], "r"), tol).dist2().dense());
  }
  if (kind == "random-sphere") {
    need(2, "random-sphere <n> <r> [--seed S]");
    const auto cfg = gen_random_spherical(as_index(params[0], "n"), as_index(params[1], "r"),
                                          seed.value_or(0), tol);
    return format_matrix_text(cfg.edm.dist2().dense());
  }
  throw PreconditionError("unknown generator '" + std::string(kind) +
                          "' (expected simplex, unit-simplex, crosspolytope, random-sphere)");
}

namespace {

struct ToleranceFlags {
  std::string profile;
  std::optional<double> psd, rank, cluster, sign, unit, solve;
};

Tolerances resolve(const ToleranceFlags& f) {
  Tolerances tol = tolerances_from_env();
  if (!f.profile.empty()) {
    auto preset = tolerance_preset(f.profile);
    if (!preset) throw PreconditionError("unknown tolerance profile '" + f.profile + "'");
    tol = *preset;
  }
  if (f.psd) tol.psd = *f.psd;
  if (f.rank) tol.rank = *f.rank;
  if (f.cluster) tol.cluster = *f.cluster;
  if (f.sign) tol.sign = *f.sign;
  if (f.unit) tol.unit = *f.unit;
  if (f.solve) tol.solve = *f.solve;
  return tol;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const auto started = std::chrono::steady_clock::now();
  CLI::App app{"Spherical Euclidean distance matrix toolkit", "edmsphere"};
  app.require_subcommand(1);

  ToleranceFlags flags;
  app.add_option("--profile", flags.profile, "tolerance preset: default, strict, loose");
  app.add_option("--tol-psd", flags.psd, "PSD threshold");
  app.add_option("--tol-rank", flags.rank, "numerical rank threshold");
  app.add_option("--tol-cluster", flags.cluster, "eigenvalue clustering threshold");
  app.add_option("--tol-sign", flags.sign, "distance-2 / sign separation margin");
  app.add_option("--tol-unit", flags.unit, "unit circumradius threshold");
  app.add_option("--tol-solve", flags.solve, "linear solve residual threshold");

  std::string matrix_path, graph_path, output_path, gen_kind;
  std::vector<double> gen_params;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> sample;

  auto* validate_cmd = app.add_subcommand("validate", "check EDM, sphericity and embedding dimension");
  validate_cmd->add_option("matrix", matrix_path, "matrix file")->required();
  auto* orthorep_cmd = app.add_subcommand("orthorep", "minimum-dimension orthonormal representation");
  orthorep_cmd->add_option("graph", graph_path, "edge-list file")->required();
  auto* decompose_cmd = app.add_subcommand("decompose", "split into orthogonal simplex blocks");
  decompose_cmd->add_option("matrix", matrix_path, "matrix file")->required();
  auto* gen_cmd = app.add_subcommand("gen", "write a generated EDM in the text format");
  gen_cmd->add_option("kind", gen_kind, "simplex | unit-simplex | crosspolytope | random-sphere")->required();
  gen_cmd->add_option("params", gen_params, "generator parameters");
  gen_cmd->add_option("--seed", seed, "random seed");
  gen_cmd->add_option("-o,--output", output_path, "write the matrix here instead of stdout");
  auto* rankin_cmd = app.add_subcommand("check-rankin", "check the codimension-2 and crosspolytope cases");
  rankin_cmd->add_option("matrix", matrix_path, "matrix file");
  rankin_cmd->add_option("--sample", sample, "r trials seed")->expected(3);
  app.fallthrough();

  json run_report = {{"command", json::array()}};
  for (int i = 1; i < argc; ++i) run_report["command"].push_back(argv[i]);
  auto emit = [&](CommandOutcome outcome, const Tolerances* tol, json inputs) {
    run_report["inputs"] = std::move(inputs);
    run_report["tolerances"] = tol ? report::to_json(*tol) : json(nullptr);
    run_report["result"] = std::move(outcome.result);
    run_report["verification"] = std::move(outcome.verification);
    run_report["exit_code"] = outcome.exit_code;
    run_report["wall_time_s"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    out << run_report.dump(2) << '\n';
    if (!outcome.diagnostics.empty()) err << outcome.diagnostics << '\n';
    return outcome.exit_code;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return emit(rejected("usage", e.what()), nullptr, json::array());
  }

  Tolerances tol;
  try {
    tol = resolve(flags);
  } catch (const PreconditionError& e) {
    return emit(rejected("tolerance", e.what()), nullptr, json::array());
  }

  auto with_file = [&](const std::string& path, auto&& command) {
    std::string text;
    try {
      text = read_file(path);
    } catch (const std::exception& e) {
      return emit(fault("io", e.what()), &tol, json::array({{{"path", path}}}));
    }
    json inputs = json::array({{{"path", path}, {"sha256", sha256_hex(text)}}});
    return emit(command(text), &tol, std::move(inputs));
  };

  try {
    if (*validate_cmd) return with_file(matrix_path, [&](const std::string& t) { return validate(t, tol); });
    if (*orthorep_cmd) return with_file(graph_path, [&](const std::string& t) { return orthorep(t, tol); });
    if (*decompose_cmd) return with_file(matrix_path, [&](const std::string& t) { return decompose(t, tol); });
    if (*rankin_cmd) {
      if (!sample.empty()) {
        if (!matrix_path.empty()) {
          return emit(rejected("usage", "give either a matrix file or --sample, not both"), &tol, json::array());
        }
        Index r = 0, trials = 0;
        std::uint64_t s = 0;
        try {
          r = std::stol(sample[0]);
          trials = std::stol(sample[1]);
          s = std::stoull(sample[2]);
        } catch (const std::exception&) {
          return emit(rejected("usage", "--sample expects integers: r trials seed"), &tol, json::array());
        }
        return emit(check_rankin_sample(r, trials, s, tol), &tol, json::array());
      }
      if (matrix_path.empty()) {
        return emit(rejected("usage", "check-rankin needs a matrix file or --sample r trials seed"), &tol,
                    json::array());
      }
      return with_file(matrix_path, [&](const std::string& t) { return check_rankin_file(t, tol); });
    }
    if (*gen_cmd) {
      std::string text;
      try {
        text = generate(gen_kind, gen_params, seed, tol);
      } catch (const PreconditionError& e) {
        return emit(rejected("precondition", e.what()), &tol, json::array());
      }
      if (output_path.empty()) {
        out << text;
        return kExitOk;
      }
      std::ofstream file(output_path, std::ios::binary);
      file << text;
      if (!file) return emit(fault("io", "cannot write '" + output_path + "'"), &tol, json::array());
      CommandOutcome outcome;
      outcome.result = {{"kind", gen_kind}, {"output", output_path}, {"sha256", sha256_hex(text)}};
      return emit(std::move(outcome), &tol, json::array());
    }
  } catch (const std::exception& e) {
    return emit(fault("internal", e.what()), &tol, json::array());
  }
  return emit(fault("internal", "no command ran"), &tol, json::array());
}

}  // namespace edmsphere::cli
