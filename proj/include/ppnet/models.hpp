#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>

#include "ppnet/geometry.hpp"

namespace ppnet {

struct PoissonModel {
  double lambda = 0.0;  // points per unit window area

  void validate() const;
};

enum class GibbsFamily { strauss, geyer, hardcore };

std::string family_name(GibbsFamily family);

/// Pairwise-interaction model with density proportional to
/// beta^n(z) * gamma^m(z), where m is the r-close pair count (Strauss),
/// its saturated version min(p(z), sat) (Geyer, saturation applied to the
/// global pair count), or a hard-core indicator (gamma = 0, r = hc).
/// Hard-core pairs at exactly distance hc are allowed; Strauss/Geyer count
/// ties at exactly r as interacting.
struct GibbsModel {
  GibbsFamily family = GibbsFamily::strauss;
  double beta = 1.0;
  double gamma = 1.0;
  double r = 0.1;    // interaction radius; equals hc for the hard-core family
  double sat = 0.0;  // geyer only

  static GibbsModel strauss(double beta, double gamma, double r);
  static GibbsModel geyer(double beta, double gamma, double r, double sat);
  static GibbsModel hardcore(double beta, double hc);

  double hc() const { return r; }
  void validate() const;
};

struct MaternModel {
  double lambda_p = 1.0;  // parent intensity
  double lambda_c = 1.0;  // mean offspring per cluster
  double R = 0.1;         // offspring disc radius

  void validate() const;
};

using Model = std::variant<PoissonModel, GibbsModel, MaternModel>;

struct McmcConfig {
  std::uint64_t n_steps = 100000;  // birth/death proposals
  std::uint64_t burn_in = 0;       // informational; the final state is the sample
  double p_birth = 0.5;
  std::uint64_t seed = 0;

  void validate() const;
};

/// log of the unnormalized density: n(z) log(beta) + m log(gamma), with the
/// normalizing factor omitted. Patterns forbidden by the model (hard core
/// violated, or gamma = 0 with interacting pairs) give -infinity.
double unnormalized_log_density(const GibbsModel& model, const PointPattern& pattern);

/// Papangelou conditional intensity: the density ratio for adding u to the
/// pattern. u must not already be a point of the pattern.
double papangelou_conditional_intensity(const GibbsModel& model, const Point& u,
                                        const PointPattern& pattern);

// Hot-path variant over raw points. For the Geyer family the caller supplies
// the pattern's current r-close pair count so global saturation is honored
// without an O(n^2) rescan.
double papangelou_conditional_intensity(const GibbsModel& model, const Point& u,
                                        std::span<const Point> points,
                                        std::size_t current_pair_count);

// Model parameter files: flat `key value` lines. Recognized keys are exactly
// family, beta, gamma, r, sat, hc, lambda, lambda_p, lambda_c, R, seed;
// anything else is rejected.
struct ModelSpec {
  Model model;
  std::uint64_t seed = 0;
  bool has_seed = false;
};

ModelSpec load_model_spec(const std::filesystem::path& path);
void save_model_spec(const ModelSpec& spec, const std::filesystem::path& path);

}  // namespace ppnet
