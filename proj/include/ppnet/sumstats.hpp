#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ppnet/geometry.hpp"

namespace ppnet {

enum class Statistic { K, L, G };

std::string statistic_name(Statistic s);

/// A summary statistic evaluated on a distance grid. Grid points where the
/// estimator is undefined (e.g. no qualifying points for the border-corrected
/// G) carry defined = false and NaN values.
struct SummaryCurve {
  Statistic statistic = Statistic::K;
  std::vector<double> r_grid;
  std::vector<double> values;
  std::vector<char> defined;
  std::string correction;
  std::size_t n_points = 0;
};

/// Default distance grid: `n` equally spaced values on [0, r_max].
std::vector<double> default_r_grid(const Window& window, std::size_t n = 128);
std::vector<double> linspace(double lo, double hi, std::size_t n);

/// Largest admissible K-function argument: a quarter of the shorter window
/// side (translation weights degenerate beyond).
double k_validity_bound(const Window& window);

/// Translation-edge-corrected Ripley K estimator with intensity n/|W|.
SummaryCurve estimate_K(const PointPattern& pattern, const std::vector<double>& r_grid);

/// L(r) = sqrt(K(r)/pi), applied pointwise to a K curve.
SummaryCurve K_to_L(const SummaryCurve& k_curve);

SummaryCurve estimate_L(const PointPattern& pattern, const std::vector<double>& r_grid);

/// Border-corrected (reduced-sample) nearest-neighbour distance CDF
/// estimator: among points at least r from the boundary, the fraction whose
/// nearest neighbour is within r.
SummaryCurve estimate_G(const PointPattern& pattern, const std::vector<double>& r_grid);

/// Poisson baseline G(r) = 1 - exp(-pi * lambda * r^2).
double theoretical_G_poisson(double lambda, double r);

// SummaryCurve CSV: `# statistic <name> correction <tag> n_points <n>`,
// then header `r,value,defined` and one row per grid point.
void save_curve(const SummaryCurve& curve, const std::filesystem::path& path);
SummaryCurve load_curve(const std::filesystem::path& path);

}  // namespace ppnet
