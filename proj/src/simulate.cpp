#include "ppnet/simulate.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace ppnet {

namespace {

Point uniform_in_window(Rng& rng, const Window& w) {
  return {rng.uniform(w.x_min, w.x_max), rng.uniform(w.y_min, w.y_max)};
}

std::vector<Point> poisson_points(Rng& rng, double lambda, const Window& w) {
  const std::uint64_t n = rng.poisson(lambda * w.area());
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) pts.push_back(uniform_in_window(rng, w));
  return pts;
}

}  // namespace

Point uniform_in_disc(Rng& rng, double R) {
  const double rad = R * std::sqrt(rng.uniform01());
  const double angle = 2.0 * std::numbers::pi * rng.uniform01();
  return {rad * std::cos(angle), rad * std::sin(angle)};
}

PointPattern sample_poisson(const PoissonModel& model, const Window& window, std::uint64_t seed) {
  model.validate();
  Rng rng(seed);
  return PointPattern(poisson_points(rng, model.lambda, window), window);
}

PointPattern sample_gibbs(const GibbsModel& model, const Window& window, const McmcConfig& cfg) {
  model.validate();
  cfg.validate();
  Rng rng(cfg.seed);
  const double area = window.area();

  std::vector<Point> pts = poisson_points(rng, model.beta, window);
  if (model.family == GibbsFamily::hardcore) {
    // the chain must start from a feasible (positive-density) state
    std::vector<Point> kept;
    kept.reserve(pts.size());
    for (const Point& p : pts) {
      if (close_neighbour_count_strict(p, kept, model.r) == 0) kept.push_back(p);
    }
    pts = std::move(kept);
  }

  // running r-close pair count, kept incrementally for Geyer's global saturation
  std::size_t pair_count =
      model.family == GibbsFamily::geyer ? close_pair_count(pts, model.r) : 0;

  const double death_over_birth = (1.0 - cfg.p_birth) / cfg.p_birth;

  for (std::uint64_t step = 0; step < cfg.n_steps; ++step) {
    if (rng.uniform01() < cfg.p_birth) {
      const Point cand = uniform_in_window(rng, window);
      const double lambda_cond =
          papangelou_conditional_intensity(model, cand, pts, pair_count);
      const double ratio =
          lambda_cond * area * death_over_birth / static_cast<double>(pts.size() + 1);
      if (ratio >= 1.0 || rng.uniform01() < ratio) {
        if (model.family == GibbsFamily::geyer) {
          pair_count += close_neighbour_count(cand, pts, model.r);
        }
        pts.push_back(cand);
      }
    } else if (!pts.empty()) {
      const std::size_t idx = rng.uniform_index(pts.size());
      const Point victim = pts[idx];
      pts[idx] = pts.back();
      pts.pop_back();
      const std::size_t pairs_minus =
          model.family == GibbsFamily::geyer
              ? pair_count - close_neighbour_count(victim, pts, model.r)
              : 0;
      const double lambda_cond =
          papangelou_conditional_intensity(model, victim, pts, pairs_minus);
      bool accept = true;
      if (lambda_cond > 0.0) {
        const double ratio = static_cast<double>(pts.size() + 1) /
                             (death_over_birth * area * lambda_cond);
        accept = ratio >= 1.0 || rng.uniform01() < ratio;
      }
      // lambda_cond == 0 means the removed point was infeasible; always accept
      if (accept) {
        if (model.family == GibbsFamily::geyer) pair_count = pairs_minus;
      } else {
        pts.push_back(victim);
      }
    }
  }

  return PointPattern(std::move(pts), window);
}

PointPattern sample_matern(const MaternModel& model, const Window& window, std::uint64_t seed) {
  model.validate();
  Rng rng(seed);
  const Window parent_window = window.dilated(model.R);
  const std::uint64_t n_parents = rng.poisson(model.lambda_p * parent_window.area());
  std::vector<Point> pts;
  for (std::uint64_t i = 0; i < n_parents; ++i) {
    const Point parent = uniform_in_window(rng, parent_window);
    const std::uint64_t n_offspring = rng.poisson(model.lambda_c);
    for (std::uint64_t j = 0; j < n_offspring; ++j) {
      const Point offset = uniform_in_disc(rng, model.R);
      const Point child{parent.x + offset.x, parent.y + offset.y};
      if (window.contains(child)) pts.push_back(child);
    }
  }
  return PointPattern(std::move(pts), window);
}

PointPattern sample_model(const Model& model, const Window& window, std::uint64_t seed,
                          const McmcConfig& gibbs_cfg) {
  if (const auto* p = std::get_if<PoissonModel>(&model)) {
    return sample_poisson(*p, window, seed);
  }
  if (const auto* g = std::get_if<GibbsModel>(&model)) {
    McmcConfig cfg = gibbs_cfg;
    cfg.seed = seed;
    return sample_gibbs(*g, window, cfg);
  }
  return sample_matern(std::get<MaternModel>(model), window, seed);
}

}  // namespace ppnet
