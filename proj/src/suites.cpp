#include "hardy/suites.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hardy/generators.hpp"
#include "hardy/lp.hpp"
#include "hardy/parallel.hpp"
#include "hardy/sharpness.hpp"
#include "hardy/sum.hpp"

namespace hardy {

namespace {

using gen::Rng;

// Reduces per-instance values: max for residuals, min for margins.
SuiteSummary summarize(std::string name, const std::vector<double>& values, double tol, bool residual) {
  SuiteSummary s;
  s.name = std::move(name);
  s.instances = values.size();
  s.tolerance = tol;
  s.worst = values.empty() ? 0.0 : values[0];
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    const bool worse = residual ? (v > s.worst || std::isnan(v)) : (v < s.worst || std::isnan(v));
    if (worse) {
      s.worst = v;
      s.worst_instance = i;
    }
  }
  s.pass = residual ? s.worst <= tol : s.worst >= -tol;
  if (std::isnan(s.worst)) s.pass = false;
  return s;
}

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); }

Graph random_graph(Rng& rng, std::size_t max_vertices) {
  const std::size_t n = pick(rng, std::min<std::size_t>(40, max_vertices), max_vertices);
  return std::bernoulli_distribution(0.5)(rng) ? gen::random_tree(n, rng) : gen::random_sparse_graph(n, rng);
}

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

SuiteSummary identity_suite(IdentitySpec spec, std::size_t instances, std::uint64_t seed, double tol,
                            std::size_t max_vertices, int threads) {
  std::vector<double> rel(instances);
  parallel_for(
      instances,
      [&](std::size_t i) {
        Rng rng(seed + i);
        const auto in = gen::make_identity_instance(spec, rng, max_vertices);
        rel[i] = identity_residual(in.g, in.V, in.f, in.u, spec).relative();
      },
      threads);
  return summarize(spec.name(), rel, tol, true);
}

SuiteSummary lemma21_suite(std::size_t instances, std::uint64_t seed, double tol, std::size_t max_vertices, int threads) {
  std::vector<double> rel(instances);
  parallel_for(
      instances,
      [&](std::size_t i) {
        Rng rng(seed + i);
        const Graph g = random_graph(rng, max_vertices);
        const auto V = gen::uniform_function(g.num_vertices(), -1.0, 1.0, rng);
        const auto f = gen::uniform_function(g.num_vertices(), -1.0, 1.0, rng);
        rel[i] = lemma21_residual(g, V, f);
      },
      threads);
  return summarize("lemma21", rel, tol, true);
}

SuiteSummary green_leibniz_suite(std::size_t instances, std::uint64_t seed, double tol, std::size_t max_vertices,
                                 int threads) {
  std::vector<double> rel(instances);
  parallel_for(
      instances,
      [&](std::size_t i) {
        Rng rng(seed + i);
        const Graph g = random_graph(rng, max_vertices);
        const auto f = gen::uniform_function(g.num_vertices(), -1.0, 1.0, rng);
        const auto h = gen::uniform_function(g.num_vertices(), -1.0, 1.0, rng);
        rel[i] = leibniz_green_residual(g, f, h).relative();
      },
      threads);
  return summarize("green-leibniz", rel, tol, true);
}

SuiteSummary identity_suite_on(const Graph& g, IdentitySpec spec, std::size_t instances, std::uint64_t seed, double tol,
                               int threads) {
  std::vector<double> rel(instances);
  parallel_for(
      instances,
      [&](std::size_t i) {
        Rng rng(seed + i);
        for (int attempt = 0; attempt < 200; ++attempt) {
          if (auto in = gen::identity_instance_on(g, spec, rng)) {
            rel[i] = identity_residual(in->g, in->V, in->f, in->u, spec).relative();
            return;
          }
        }
        throw std::invalid_argument("graph admits no instance of " + spec.name() + " (too small for the stencil reach)");
      },
      threads);
  return summarize(spec.name(), rel, tol, true);
}

SuiteSummary lemma21_suite_on(const Graph& g, std::size_t instances, std::uint64_t seed, double tol, int threads) {
  std::vector<double> rel(instances);
  parallel_for(
      instances,
      [&](std::size_t i) {
        Rng rng(seed + i);
        const auto V = gen::uniform_function(g.num_vertices(), -1.0, 1.0, rng);
        const auto f = gen::uniform_function(g.num_vertices(), -1.0, 1.0, rng);
        rel[i] = lemma21_residual(g, V, f);
      },
      threads);
  return summarize("lemma21", rel, tol, true);
}

SuiteSummary green_leibniz_suite_on(const Graph& g, std::size_t instances, std::uint64_t seed, double tol, int threads) {
  std::vector<double> rel(instances);
  parallel_for(
      instances,
      [&](std::size_t i) {
        Rng rng(seed + i);
        const auto f = gen::uniform_function(g.num_vertices(), -1.0, 1.0, rng);
        const auto h = gen::uniform_function(g.num_vertices(), -1.0, 1.0, rng);
        rel[i] = leibniz_green_residual(g, f, h).relative();
      },
      threads);
  return summarize("green-leibniz", rel, tol, true);
}

// ---- inequalities on N ------------------------------------------------------------------

std::string InequalityForm::name() const {
  switch (kind) {
    case Kind::Rellich: return "rellich(ell=" + std::to_string(ell) + ")";
    case Kind::ShiftedHardy: return "shifted-hardy(alpha=" + fmt(alpha) + ")";
    case Kind::DirectHardy: return "direct-hardy(alpha=" + fmt(alpha) + ")";
    case Kind::Leray: return "leray";
  }
  return "?";
}

Index InequalityForm::first_free() const {
  switch (kind) {
    case Kind::Rellich: return ell;
    case Kind::ShiftedHardy: return 2;
    case Kind::DirectHardy: return 1;
    case Kind::Leray: return 2;
  }
  return 0;
}

namespace {

FormValue make_value(double lhs, double rhs) {
  FormValue v;
  v.lhs = lhs;
  v.rhs = rhs;
  v.margin = lhs - rhs;
  v.scale = std::abs(lhs) + std::abs(rhs);
  return v;
}

void require_vanishing(const FiniteSequence& u, Index first) {
  if (!u.is_zero() && u.first_index() < first)
    throw std::invalid_argument("sequence must vanish for n < " + std::to_string(first) + " (found u_" +
                                std::to_string(u.first_index()) + " != 0)");
}

double pw(Index n, double e) { return std::pow(static_cast<double>(n), e); }

}  // namespace

FormValue evaluate_form(const InequalityForm& form, const FiniteSequence& u) {
  require_vanishing(u, form.first_free());
  if (u.is_zero()) return {};
  const Index last = u.last_index();
  const double a = form.alpha;
  const double c = (a - 1.0) * (a - 1.0) / 4.0;
  switch (form.kind) {
    case InequalityForm::Kind::Rellich: {
      const int ell = form.ell;
      if (ell < 1) throw std::invalid_argument("rellich form: ell >= 1");
      const double lhs = sum_squares_from(half_laplace_power(u, BoundaryOrder(ell)), ell - 1);
      const double rhs =
          sharp_constant(ell) * weighted_sum(u, u, [ell](Index n) { return pw(n, -2.0 * ell); }, IndexRange{ell, last});
      return make_value(lhs, rhs);
    }
    case InequalityForm::Kind::ShiftedHardy: {
      if (!(a < 0.0)) throw std::invalid_argument("shifted Hardy form requires alpha < 0");
      const FiniteSequence g = grad(u);
      const double lhs = weighted_sum(g, g, [a](Index n) { return pw(n - 1, a); }, IndexRange{2, last + 1});
      const double rhs = c * weighted_sum(u, u, [a](Index n) { return pw(n, a - 2.0); }, IndexRange{2, last});
      return make_value(lhs, rhs);
    }
    case InequalityForm::Kind::DirectHardy: {
      if (!(a >= 0.0)) throw std::invalid_argument("direct Hardy form requires alpha >= 0");
      const FiniteSequence g = grad(u);
      const double lhs = weighted_sum(g, g, [a](Index n) { return pw(n, a); }, IndexRange{1, last + 1});
      const double rhs = c * weighted_sum(u, u, [a](Index n) { return pw(n, a - 2.0); }, IndexRange{1, last});
      return make_value(lhs, rhs);
    }
    case InequalityForm::Kind::Leray: {
      const FiniteSequence g = grad(u);
      const double lhs = weighted_sum(g, g, [](Index n) { return static_cast<double>(n); }, IndexRange{2, last + 1});
      const double rhs = 0.25 * weighted_sum(
                                    u, u,
                                    [](Index n) {
                                      const double l = std::log(static_cast<double>(n));
                                      return 1.0 / (static_cast<double>(n) * l * l);
                                    },
                                    IndexRange{2, last});
      return make_value(lhs, rhs);
    }
  }
  throw std::invalid_argument("unknown form");
}

FormValue weight_form(const WeightModel& model, const FiniteSequence& u) {
  using F = WeightModel::Family;
  const double a = model.param();
  WeightFn V;
  switch (model.family()) {
    case F::Kpp: V = [](Index) { return 1.0; }; break;
    case F::ShiftedHardy: V = [a](Index n) { return pw(n - 1, a); }; break;
    case F::DirectHardy: V = [a](Index n) { return pw(n, a); }; break;
    case F::Leray: V = [](Index n) { return static_cast<double>(n); }; break;
    default: throw std::invalid_argument("weight_form: " + model.name() + " is not a first-order weight");
  }
  const Index first = model.leading_zeros();
  require_vanishing(u, first);
  if (u.is_zero()) return {};
  const FiniteSequence g = grad(u);
  const double lhs = weighted_sum(g, g, V, IndexRange{first, u.last_index() + 1});
  const double rhs = weighted_sum(u, u, [&model](Index n) { return model(n); }, IndexRange{first, u.last_index()});
  return make_value(lhs, rhs);
}

FiniteSequence random_admissible(const InequalityForm& form, std::size_t kind, std::uint64_t seed) {
  Rng rng(seed);
  const Index first = form.first_free();
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<double> v;
  switch (kind % 4) {
    case 0: {
      v.resize(pick(rng, 1, 80));
      for (auto& x : v) x = unif(rng);
      break;
    }
    case 1: {
      v.assign(pick(rng, 1, 200), 0.0);
      const std::size_t spikes = pick(rng, 1, 4);
      for (std::size_t s = 0; s < spikes; ++s) v[pick(rng, 0, v.size() - 1)] = unif(rng);
      v.back() = unif(rng);
      break;
    }
    case 2: {
      v.resize(pick(rng, 1, 100));
      double w = 0.0;
      for (auto& x : v) x = (w += 0.5 * (unif(rng) + 1.0));
      break;
    }
    default: {
      // Profile of the extremal sequence times a cutoff at M.
      const auto M = static_cast<Index>(pick(rng, 8, 500));
      const double a = form.alpha;
      for (Index n = first; n < first + M; ++n) {
        const double t = static_cast<double>(n - first + 1) / static_cast<double>(M + 1);
        const double cut = (1.0 - t) * (1.0 - t);
        double g = 1.0;
        switch (form.kind) {
          case InequalityForm::Kind::Rellich: g = std::pow(static_cast<double>(n), form.ell - 0.5); break;
          case InequalityForm::Kind::ShiftedHardy:
          case InequalityForm::Kind::DirectHardy: g = std::pow(static_cast<double>(n), (1.0 - a) / 2.0); break;
          case InequalityForm::Kind::Leray: g = std::sqrt(std::log(static_cast<double>(n))); break;
        }
        v.push_back(g * cut);
      }
      break;
    }
  }
  return FiniteSequence(first, std::move(v));
}

SuiteSummary inequality_suite(const InequalityForm& form, std::size_t trials, std::uint64_t seed, double tol,
                              int threads) {
  std::vector<double> rel(trials);
  parallel_for(
      trials, [&](std::size_t i) { rel[i] = evaluate_form(form, random_admissible(form, i, seed + i)).relative(); },
      threads);
  return summarize(form.name(), rel, tol, false);
}

SuiteSummary weight_form_suite(const WeightModel& model, std::size_t trials, std::uint64_t seed, double tol,
                               int threads) {
  InequalityForm shape = InequalityForm::direct_hardy(std::max(0.0, model.param()));
  if (model.leading_zeros() == 2) shape = InequalityForm::leray();
  std::vector<double> rel(trials);
  parallel_for(
      trials, [&](std::size_t i) { rel[i] = weight_form(model, random_admissible(shape, i, seed + i)).relative(); },
      threads);
  return summarize("weight-form " + model.name(), rel, tol, false);
}

// ---- ℓ^p --------------------------------------------------------------------------------------

SuiteSummary picone_suite(double p, std::size_t edges, std::uint64_t seed, double tol) {
  std::vector<double> rel(edges);
  for (std::size_t i = 0; i < edges; ++i) {
    Rng rng(seed + i);
    std::uniform_real_distribution<double> fdist(0.1, 3.0), udist(0.0, 2.0);
    const Graph g = gen::path_graph(2, std::uniform_real_distribution<double>(0.5, 2.0)(rng));
    VertexFunction f{fdist(rng), fdist(rng)};
    VertexFunction u{udist(rng), udist(rng)};
    switch (i % 4) {
      case 1: u[pick(rng, 0, 1)] = 0.0; break;
      case 2: {
        const double c = udist(rng);
        u = {c * f[0], c * f[1]};
        break;
      }
      case 3: {
        const double c = udist(rng);
        u = {c * f[0], c * f[1] * (1.0 + 1e-3 * (udist(rng) - 1.0))};
        break;
      }
      default: break;
    }
    const double r = picone_residual(g, u, f, p, 0, 1);
    const double q = signed_power(u[0], p) / std::pow(f[0], p - 1.0) - signed_power(u[1], p) / std::pow(f[1], p - 1.0);
    const double scale = std::pow(std::abs(u[0] - u[1]), p) + std::abs(q * signed_power(f[0] - f[1], p - 1.0));
    rel[i] = scale > 0.0 ? r / scale : r;
  }
  return summarize("picone(p=" + fmt(p) + ")", rel, tol, false);
}

SuiteSummary landau_suite(double p, std::size_t trials, std::uint64_t seed, double tol, int threads) {
  std::vector<double> rel(trials);
  parallel_for(
      trials,
      [&](std::size_t i) {
        Rng rng(seed + i);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        std::vector<double> a(pick(rng, 1, 100), 0.0);
        switch (i % 4) {
          case 0:
            for (auto& x : a) x = unif(rng);
            break;
          case 1:
            for (std::size_t s = pick(rng, 1, 4); s > 0; --s) a[pick(rng, 0, a.size() - 1)] = unif(rng);
            break;
          case 2:
            for (std::size_t n = 0; n < a.size(); ++n) a[n] = std::pow(static_cast<double>(n + 1), -1.0 / p);
            break;
          default:
            std::fill(a.begin(), a.end(), unif(rng));
        }
        const LandauResult r = landau_check(FiniteSequence(1, std::move(a)), p);
        rel[i] = r.scale > 0.0 ? r.margin / r.scale : 0.0;
      },
      threads);
  return summarize("landau(p=" + fmt(p) + ")", rel, tol, false);
}

SuiteSummary p2_reduction_suite(std::size_t instances, std::uint64_t seed, double tol) {
  std::vector<double> dev(instances);
  for (std::size_t i = 0; i < instances; ++i) {
    Rng rng(seed + i);
    const Graph g = random_graph(rng, 60);
    const std::size_t n = g.num_vertices();
    const auto u = gen::uniform_function(n, -1.0, 1.0, rng);
    const auto V = gen::uniform_function(n, 0.5, 2.0, rng);
    const auto f = gen::uniform_function(n, 0.5, 2.0, rng);
    double worst = 0.0;
    for (Vertex x = 0; x < n; ++x) {
      const double a = lp_grad_norm(g, u, 2.0, x);
      const double b = grad_pairing(g, u, u, x);
      worst = std::max(worst, std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}));
      double mag = 0.0;
      for (const auto& nb : g.neighbors(x)) mag += 0.5 * nb.b * (V[x] + V[nb.v]) * std::abs(f[x] - f[nb.v]);
      const double w = lp_hardy_weight(g, V, f, 2.0, x);
      const double t = t_functional(g, V, f, x) / f[x];
      if (mag > 0.0) worst = std::max(worst, std::abs(w - t) / (mag / f[x]));
    }
    dev[i] = worst;
  }
  return summarize("p2-reduction", dev, tol, true);
}

SuiteSummary lp_hardy_suite(double p, std::size_t instances, std::uint64_t seed, double tol) {
  std::vector<double> rel(instances);
  for (std::size_t i = 0; i < instances; ++i) {
    Rng rng(seed + i);
    const Graph g = random_graph(rng, 60);
    const std::size_t n = g.num_vertices();
    const auto V = gen::uniform_function(n, 0.5, 2.0, rng);
    const auto f = gen::uniform_function(n, 0.5, 2.0, rng);
    auto u = gen::random_local_function(g, pick(rng, 0, n - 1), static_cast<int>(pick(rng, 0, 3)), rng);
    for (auto& x : u) x = std::abs(x);
    const LpHardyCheck r = lp_hardy_check(g, V, f, u, p);
    rel[i] = r.scale > 0.0 ? r.margin / r.scale : 0.0;
  }
  return summarize("lp-hardy(p=" + fmt(p) + ")", rel, tol, false);
}

}  // namespace hardy
