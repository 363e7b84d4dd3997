#include "ppnet/models.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ppnet/errors.hpp"

namespace ppnet {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

void PoissonModel::validate() const {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("poisson: lambda must be finite and >= 0");
  }
}

std::string family_name(GibbsFamily family) {
  switch (family) {
    case GibbsFamily::strauss: return "strauss";
    case GibbsFamily::geyer: return "geyer";
    case GibbsFamily::hardcore: return "hardcore";
  }
  return "?";
}

GibbsModel GibbsModel::strauss(double beta, double gamma, double r) {
  GibbsModel m{GibbsFamily::strauss, beta, gamma, r, 0.0};
  m.validate();
  return m;
}

GibbsModel GibbsModel::geyer(double beta, double gamma, double r, double sat) {
  GibbsModel m{GibbsFamily::geyer, beta, gamma, r, sat};
  m.validate();
  return m;
}

GibbsModel GibbsModel::hardcore(double beta, double hc) {
  GibbsModel m{GibbsFamily::hardcore, beta, 0.0, hc, 0.0};
  m.validate();
  return m;
}

void GibbsModel::validate() const {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw std::invalid_argument("gibbs: beta must be > 0");
  if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("gibbs: r must be > 0");
  switch (family) {
    case GibbsFamily::strauss:
      // density is integrable only for gamma in [0, 1]
      if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw std::invalid_argument("strauss: gamma must be in [0, 1]");
      }
      break;
    case GibbsFamily::geyer:
      if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
        throw std::invalid_argument("geyer: gamma must be >= 0");
      }
      if (!(sat >= 0.0) || !std::isfinite(sat)) {
        throw std::invalid_argument("geyer: sat must be >= 0");
      }
      break;
    case GibbsFamily::hardcore:
      if (gamma != 0.0) throw std::invalid_argument("hardcore: gamma must be 0");
      break;
  }
}

void MaternModel::validate() const {
  if (!(lambda_p > 0.0)) throw std::invalid_argument("matern: lambda_p must be > 0");
  if (!(lambda_c > 0.0)) throw std::invalid_argument("matern: lambda_c must be > 0");
  if (!(R > 0.0)) throw std::invalid_argument("matern: R must be > 0");
}

void McmcConfig::validate() const {
  if (n_steps < 1) throw std::invalid_argument("mcmc: n_steps must be >= 1");
  if (!(p_birth > 0.0 && p_birth < 1.0)) {
    throw std::invalid_argument("mcmc: p_birth must be in (0, 1)");
  }
}

double unnormalized_log_density(const GibbsModel& model, const PointPattern& pattern) {
  model.validate();
  const double n = static_cast<double>(pattern.size());
  if (model.family == GibbsFamily::hardcore) {
    if (has_close_pair_strict(pattern.points(), model.r)) return kNegInf;
    return n * std::log(model.beta);
  }
  const std::size_t pairs = close_pair_count(pattern, model.r);
  double m = static_cast<double>(pairs);
  if (model.family == GibbsFamily::geyer) m = std::min(m, model.sat);
  if (model.gamma == 0.0) {
    return m > 0.0 ? kNegInf : n * std::log(model.beta);
  }
  return n * std::log(model.beta) + m * std::log(model.gamma);
}

double papangelou_conditional_intensity(const GibbsModel& model, const Point& u,
                                        std::span<const Point> points,
                                        std::size_t current_pair_count) {
  switch (model.family) {
    case GibbsFamily::hardcore:
      return close_neighbour_count_strict(u, points, model.r) == 0 ? model.beta : 0.0;
    case GibbsFamily::strauss: {
      const auto t = close_neighbour_count(u, points, model.r);
      if (t == 0) return model.beta;
      if (model.gamma == 0.0) return 0.0;
      return model.beta * std::pow(model.gamma, static_cast<double>(t));
    }
    case GibbsFamily::geyer: {
      const auto t = close_neighbour_count(u, points, model.r);
      const double p_before = std::min(static_cast<double>(current_pair_count), model.sat);
      const double p_after =
          std::min(static_cast<double>(current_pair_count + t), model.sat);
      const double exponent = p_after - p_before;
      if (exponent == 0.0) return model.beta;
      if (model.gamma == 0.0) return 0.0;
      return model.beta * std::pow(model.gamma, exponent);
    }
  }
  return 0.0;
}

double papangelou_conditional_intensity(const GibbsModel& model, const Point& u,
                                        const PointPattern& pattern) {
  model.validate();
  for (const Point& p : pattern.points()) {
    if (p.x == u.x && p.y == u.y) {
      throw std::invalid_argument("papangelou: u is already a point of the pattern");
    }
  }
  const std::size_t pairs =
      model.family == GibbsFamily::geyer ? close_pair_count(pattern, model.r) : 0;
  return papangelou_conditional_intensity(model, u, pattern.points(), pairs);
}

namespace {

const char* const kModelKeys[] = {"family",  "beta",     "gamma",    "r",    "sat", "hc",
                                  "lambda",  "lambda_p", "lambda_c", "R",    "seed"};

bool known_key(const std::string& key) {
  for (const char* k : kModelKeys) {
    if (key == k) return true;
  }
  return false;
}

double require(const std::map<std::string, double>& kv, const std::string& key,
               const std::filesystem::path& path) {
  auto it = kv.find(key);
  if (it == kv.end()) throw data_error(path.string() + ": missing key '" + key + "'");
  return it->second;
}

}  // namespace

ModelSpec load_model_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open model file: " + path.string());
  std::string family;
  std::map<std::string, double> kv;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string key, value;
    row >> key >> value;
    if (key.empty() || value.empty()) {
      throw data_error(path.string() + ":" + std::to_string(lineno) + ": malformed line");
    }
    if (!known_key(key)) {
      throw data_error(path.string() + ":" + std::to_string(lineno) + ": unknown key '" + key +
                       "'");
    }
    if (key == "family") {
      family = value;
    } else {
      try {
        kv[key] = std::stod(value);
      } catch (const std::exception&) {
        throw data_error(path.string() + ":" + std::to_string(lineno) + ": bad value for '" + key +
                         "'");
      }
    }
  }
  if (family.empty()) throw data_error(path.string() + ": missing key 'family'");

  ModelSpec spec;
  if (auto it = kv.find("seed"); it != kv.end()) {
    spec.seed = static_cast<std::uint64_t>(it->second);
    spec.has_seed = true;
  }
  if (family == "poisson") {
    PoissonModel m{require(kv, "lambda", path)};
    m.validate();
    spec.model = m;
  } else if (family == "strauss") {
    spec.model = GibbsModel::strauss(require(kv, "beta", path), require(kv, "gamma", path),
                                     require(kv, "r", path));
  } else if (family == "geyer") {
    spec.model = GibbsModel::geyer(require(kv, "beta", path), require(kv, "gamma", path),
                                   require(kv, "r", path), require(kv, "sat", path));
  } else if (family == "hardcore") {
    spec.model = GibbsModel::hardcore(require(kv, "beta", path), require(kv, "hc", path));
  } else if (family == "matern") {
    MaternModel m{require(kv, "lambda_p", path), require(kv, "lambda_c", path),
                  require(kv, "R", path)};
    m.validate();
    spec.model = m;
  } else {
    throw data_error(path.string() + ": unknown family '" + family + "'");
  }
  return spec;
}

void save_model_spec(const ModelSpec& spec, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw data_error("cannot open model file for writing: " + path.string());
  char buf[96];
  auto put = [&](const char* key, double v) {
    std::snprintf(buf, sizeof buf, "%s %.17g\n", key, v);
    out << buf;
  };
  if (const auto* p = std::get_if<PoissonModel>(&spec.model)) {
    out << "family poisson\n";
    put("lambda", p->lambda);
  } else if (const auto* g = std::get_if<GibbsModel>(&spec.model)) {
    out << "family " << family_name(g->family) << "\n";
    put("beta", g->beta);
    if (g->family == GibbsFamily::hardcore) {
      put("hc", g->r);
    } else {
      put("gamma", g->gamma);
      put("r", g->r);
      if (g->family == GibbsFamily::geyer) put("sat", g->sat);
    }
  } else if (const auto* m = std::get_if<MaternModel>(&spec.model)) {
    out << "family matern\n";
    put("lambda_p", m->lambda_p);
    put("lambda_c", m->lambda_c);
    put("R", m->R);
  }
  if (spec.has_seed) out << "seed " << spec.seed << "\n";
  if (!out) throw data_error("write failed: " + path.string());
}

}  // namespace ppnet
