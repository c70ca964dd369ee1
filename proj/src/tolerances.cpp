#include "edmsphere/tolerances.hpp"

#include <cstdlib>

#include "edmsphere/errors.hpp"

namespace edmsphere {

namespace {

Tolerances scaled(double factor) {
  Tolerances t;
  t.psd *= factor;
  t.rank *= factor;
  t.cluster *= factor;
  t.solve *= factor;
  t.recon *= factor;
  t.unit *= factor;
  t.sign *= factor;
  return t;
}

}  // namespace

std::optional<Tolerances> tolerance_preset(std::string_view name) {
  if (name == "default") return Tolerances{};
  if (name == "strict") return scaled(1e-2);
  if (name == "loose") return scaled(1e2);
  return std::nullopt;
}

std::vector<std::string> tolerance_preset_names() { return {"default", "strict", "loose"}; }

Tolerances tolerances_from_env() {
  const char* profile = std::getenv("EDM_SPHERE_TOL_PROFILE");
  if (profile == nullptr || *profile == '\0') return Tolerances{};
  auto preset = tolerance_preset(profile);
  if (!preset) {
    throw PreconditionError(std::string("unknown tolerance profile '") + profile +
                            "' (expected default, strict or loose)");
  }
  return *preset;
}

}  // namespace edmsphere
