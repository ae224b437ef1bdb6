#include "hardy/generators.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace hardy::gen {

namespace {

double edge_weight(Rng& rng) { return std::uniform_real_distribution<double>(0.5, 2.0)(rng); }

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

int eccentricity(const Graph& g, Vertex c) {
  int e = 0;
  for (int d : bfs_distance(g, {c})) e = std::max(e, d);
  return e;
}

}  // namespace

Graph path_graph(std::size_t n, double b) {
  Graph g(n);
  for (std::size_t i = 1; i < n; ++i) g.add_edge(i - 1, i, b);
  return g;
}

Graph star_graph(std::size_t leaves, double b) {
  Graph g(leaves + 1);
  for (std::size_t i = 1; i <= leaves; ++i) g.add_edge(0, i, b);
  return g;
}

Graph random_tree(std::size_t n, Rng& rng, std::size_t window) {
  if (window == 0) throw std::invalid_argument("random_tree: window must be positive");
  Graph g(n);
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t lo = i > window ? i - window : 0;
    g.add_edge(i, pick(rng, lo, i - 1), edge_weight(rng));
  }
  return g;
}

Graph random_sparse_graph(std::size_t n, Rng& rng, double chord_prob, std::size_t reach) {
  Graph g = random_tree(n, rng);
  std::bernoulli_distribution coin(chord_prob);
  for (std::size_t i = 2; i < n; ++i) {
    if (!coin(rng)) continue;
    const std::size_t lo = i > reach ? i - reach : 0;
    const Vertex j = pick(rng, lo, i - 1);
    if (g.weight(i, j) == 0.0) g.add_edge(i, j, edge_weight(rng));
  }
  return g;
}

VertexFunction uniform_function(std::size_t n, double lo, double hi, Rng& rng) {
  std::uniform_real_distribution<double> d(lo, hi);
  VertexFunction f(n);
  for (double& x : f) x = d(rng);
  return f;
}

VertexFunction random_local_function(const Graph& g, Vertex center, int radius, Rng& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  VertexFunction u(g.num_vertices(), 0.0);
  for (Vertex x : ball(g, {center}, radius)) u[x] = d(rng);
  if (u[center] == 0.0) u[center] = 0.5;
  return u;
}

GroundState dirichlet_ground_state(const Graph& g, const std::vector<Vertex>& region) {
  const auto k = static_cast<Eigen::Index>(region.size());
  if (k == 0) throw std::invalid_argument("dirichlet_ground_state: empty region");
  std::unordered_map<Vertex, Eigen::Index> local;
  for (Eigen::Index i = 0; i < k; ++i) local.emplace(region[i], i);
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (const auto& nb : g.neighbors(region[i])) {
      K(i, i) += nb.b;
      if (auto it = local.find(nb.v); it != local.end()) K(i, it->second) -= nb.b;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(K);
  if (es.info() != Eigen::Success) throw std::runtime_error("dirichlet_ground_state: eigensolver failed");
  Eigen::VectorXd v = es.eigenvectors().col(0);
  if (v.sum() < 0.0) v = -v;
  const double peak = v.maxCoeff();
  GroundState gs;
  gs.lambda = es.eigenvalues()(0);
  gs.phi.assign(g.num_vertices(), 0.0);
  for (Eigen::Index i = 0; i < k; ++i) gs.phi[region[i]] = v(i) / peak;
  return gs;
}

std::optional<IdentityInstance> identity_instance_on(const Graph& g, IdentitySpec spec, Rng& rng) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return std::nullopt;
  IdentityInstance in;
  in.g = g;
  in.V = uniform_function(n, 0.5, 2.0, rng);
  const int r = static_cast<int>(pick(rng, 0, 2));
  const Vertex c = pick(rng, 0, n - 1);
  in.u = random_local_function(g, c, r, rng);

  if (spec.kind == IdentityKind::FirstOrder || spec.kind == IdentityKind::SecondOrder) {
    in.f = uniform_function(n, 0.5, 2.0, rng);
    return in;
  }
  const int R = r + 2 * spec.m + 2;
  if (eccentricity(g, c) <= R) return std::nullopt;
  in.f = dirichlet_ground_state(g, ball(g, {c}, R)).phi;
  try {
    (void)identity_residual(g, in.V, in.f, in.u, spec);
  } catch (const HypothesisError&) {
    return std::nullopt;
  }
  return in;
}

IdentityInstance make_identity_instance(IdentitySpec spec, Rng& rng, std::size_t max_vertices) {
  const std::size_t min_vertices = std::min<std::size_t>(max_vertices, 40);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const std::size_t n = pick(rng, min_vertices, max_vertices);
    const Graph g = std::bernoulli_distribution(0.5)(rng) ? random_tree(n, rng) : random_sparse_graph(n, rng);
    if (auto in = identity_instance_on(g, spec, rng)) return std::move(*in);
  }
  throw std::runtime_error("make_identity_instance: no admissible instance found");
}

}  // namespace hardy::gen
