#pragma once

#include <cstdint>

#include "ppnet/geometry.hpp"
#include "ppnet/models.hpp"
#include "ppnet/rng.hpp"

namespace ppnet {

/// Homogeneous Poisson process: Poisson(lambda * |W|) points i.i.d. uniform.
PointPattern sample_poisson(const PoissonModel& model, const Window& window, std::uint64_t seed);

/// Metropolis-Hastings birth-death chain for a Gibbs model. The initial
/// state is a PPP(beta) draw (thinned to a feasible configuration for the
/// hard-core family); the state after cfg.n_steps proposals is returned.
PointPattern sample_gibbs(const GibbsModel& model, const Window& window, const McmcConfig& cfg);

/// Matern cluster process: Poisson parents on the R-dilated window, each
/// with Poisson(lambda_c) offspring uniform in a disc of radius R; offspring
/// outside the window are discarded and parents are not part of the output.
PointPattern sample_matern(const MaternModel& model, const Window& window, std::uint64_t seed);

/// One sample from any model variant (Gibbs models use cfg with its seed
/// replaced by `seed`).
PointPattern sample_model(const Model& model, const Window& window, std::uint64_t seed,
                          const McmcConfig& gibbs_cfg = {});

// Uniform draw in the disc of radius R centred at the origin; the radial
// distance has density 2r/R^2 on [0, R].
Point uniform_in_disc(Rng& rng, double R);

}  // namespace ppnet
