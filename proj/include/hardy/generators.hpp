// Seedable random graphs, functions and identity instances for property runs.
#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "hardy/graph.hpp"
#include "hardy/identities.hpp"

namespace hardy::gen {

using Rng = std::mt19937_64;

// Vertices 0..n-1 joined consecutively.
Graph path_graph(std::size_t n, double b = 1.0);
// Vertex 0 joined to 1..leaves.
Graph star_graph(std::size_t leaves, double b = 1.0);
// Random tree of large diameter: vertex i attaches to one of the `window`
// previous vertices. Edge weights uniform in [0.5, 2].
Graph random_tree(std::size_t n, Rng& rng, std::size_t window = 3);
// Random tree plus local chords (each vertex gains a chord with probability
// `chord_prob` to a vertex at most `reach` positions back).
Graph random_sparse_graph(std::size_t n, Rng& rng, double chord_prob = 0.3, std::size_t reach = 6);

VertexFunction uniform_function(std::size_t n, double lo, double hi, Rng& rng);
// Values uniform in [-1,1] on the ball, 0 elsewhere (never identically 0).
VertexFunction random_local_function(const Graph& g, Vertex center, int radius, Rng& rng);

struct GroundState {
  VertexFunction phi;  // normalized to max 1, zero outside the region
  double lambda = 0.0;
};
// Lowest Dirichlet eigenpair of the Laplacian restricted to `region`.
GroundState dirichlet_ground_state(const Graph& g, const std::vector<Vertex>& region);

struct IdentityInstance {
  Graph g;
  VertexFunction V, f, u;
};

// Random instance whose f satisfies the hypotheses of `spec` near supp u.
// Graphs have at most max_vertices vertices.
// One random (V, f, u) on a fixed graph; nullopt when the hypotheses of
// `spec` cannot be met around the sampled centre.
std::optional<IdentityInstance> identity_instance_on(const Graph& g, IdentitySpec spec, Rng& rng);
IdentityInstance make_identity_instance(IdentitySpec spec, Rng& rng, std::size_t max_vertices = 200);

}  // namespace hardy::gen
