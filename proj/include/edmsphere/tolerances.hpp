#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace edmsphere {

using Index = Eigen::Index;

/// Every numerical threshold used by the toolkit. Absolute thresholds are
/// multiplied by `scale(M) = max(1, max |M_ij|)` where documented.
struct Tolerances {
  double psd = 1e-9;      // min eigenvalue >= -psd * scale
  double rank = 1e-8;     // |lambda| > rank * scale counts toward rank
  double cluster = 1e-8;  // |lambda - lambda_max| <= cluster counts toward multiplicity
  double solve = 1e-8;    // linear-system residual bound (times scale)
  double recon = 1e-10;   // eigendecomposition residual bound is recon * n * scale
  double unit = 1e-8;     // |2 e^T w - 1| <= unit
  double sign = 1e-7;     // separates "> 2" from "== 2" and "< 0" from "== 0"
  double support = 1e-12; // entries above this belong to the support graph

  double recon_bound(Index n, double scale) const {
    return recon * static_cast<double>(n > 0 ? n : 1) * scale;
  }
};

/// Named presets: "default", "strict", "loose".
std::optional<Tolerances> tolerance_preset(std::string_view name);
std::vector<std::string> tolerance_preset_names();

/// Preset selected by EDM_SPHERE_TOL_PROFILE, or defaults when unset.
/// Throws PreconditionError on an unknown profile name.
Tolerances tolerances_from_env();

}  // namespace edmsphere
