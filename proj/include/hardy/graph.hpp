// Locally finite weighted graphs and the pointwise operators of the graph
// calculus: Laplacian, gradient pairing, edge divergence, T and F functionals.
#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

namespace hardy {

using VertexId = std::int64_t;  // external, opaque
using Vertex = std::size_t;     // dense internal index

struct Neighbor {
  Vertex v;
  double b;
  std::size_t rev;  // slot of the reverse edge in neighbors(v)
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n_vertices);  // ids 0..n-1

  Vertex add_vertex(VertexId id);
  // Adds the symmetric edge x~y with weight b > 0. Rejects loops and duplicates.
  void add_edge(Vertex x, Vertex y, double b);
  void add_edge_by_id(VertexId x, VertexId y, double b);

  [[nodiscard]] std::size_t num_vertices() const { return adj_.size(); }
  [[nodiscard]] std::size_t num_edges() const { return n_edges_; }
  [[nodiscard]] const std::vector<Neighbor>& neighbors(Vertex x) const;
  [[nodiscard]] double weight(Vertex x, Vertex y) const;  // 0 when not adjacent
  [[nodiscard]] double weighted_degree(Vertex x) const;
  [[nodiscard]] VertexId id(Vertex x) const { return ids_.at(x); }
  [[nodiscard]] Vertex index_of(VertexId id) const;
  [[nodiscard]] bool has_id(VertexId id) const { return index_.count(id) != 0; }
  [[nodiscard]] bool is_connected() const;
  void check_vertex(Vertex x) const;

  // Text interchange: one edge "x y b" per line; '#' starts a comment.
  static Graph read(std::istream& in);
  static Graph read_file(const std::string& path);
  void write(std::ostream& out) const;

 private:
  std::vector<VertexId> ids_;
  std::unordered_map<VertexId, Vertex> index_;
  std::vector<std::vector<Neighbor>> adj_;
  std::size_t n_edges_ = 0;
};

// Dense function on vertices; indices beyond the stored size read as 0.
using VertexFunction = std::vector<double>;

// Values F(x,y) on ordered adjacent pairs, laid out parallel to adjacency lists.
class EdgeFunction {
 public:
  EdgeFunction() = default;
  explicit EdgeFunction(const Graph& g);
  static EdgeFunction from(const Graph& g, const std::function<double(Vertex, Vertex)>& fn);
  static EdgeFunction gradient(const Graph& g, const VertexFunction& f);

  [[nodiscard]] double at_slot(Vertex x, std::size_t slot) const { return values_.at(x).at(slot); }
  double& at_slot(Vertex x, std::size_t slot) { return values_.at(x).at(slot); }
  [[nodiscard]] double value(const Graph& g, Vertex x, Vertex y) const;
  [[nodiscard]] bool is_antisymmetric(const Graph& g, double tol = 0.0) const;
  [[nodiscard]] std::size_t rows() const { return values_.size(); }
  [[nodiscard]] std::size_t slots(Vertex x) const { return values_.at(x).size(); }

 private:
  std::vector<std::vector<double>> values_;
};

double vf(const VertexFunction& f, Vertex x);

double graph_laplacian(const Graph& g, const VertexFunction& f, Vertex x);
VertexFunction graph_laplacian(const Graph& g, const VertexFunction& f);
VertexFunction graph_laplacian_power(const Graph& g, const VertexFunction& f, int k);

double grad_pairing(const Graph& g, const VertexFunction& f, const VertexFunction& h, Vertex x);
double edge_divergence(const Graph& g, const EdgeFunction& F, Vertex x);

// T(V,f)(x) = V(x) Δf(x) - <∇f,∇V>_x.
double t_functional(const Graph& g, const VertexFunction& V, const VertexFunction& f, Vertex x);
VertexFunction t_functional(const Graph& g, const VertexFunction& V, const VertexFunction& f);
// Divergence form: -div(V ∇f)(x) using the edge function (x,y) -> V(x)(f(x)-f(y)).
double t_functional_divergence_form(const Graph& g, const VertexFunction& V, const VertexFunction& f,
                                    Vertex x);

// F(V,f,u). Pairs with u(x) = u(y) = 0 contribute 0; elsewhere f must be
// positive on supp u and nonnegative on its neighbors (std::domain_error).
double f_functional(const Graph& g, const VertexFunction& V, const VertexFunction& f,
                    const VertexFunction& u);

// Sum over x of V(x)|∇u|^2(x).
double weighted_dirichlet_energy(const Graph& g, const VertexFunction& V, const VertexFunction& u);

// Inner product <f,g> over vertices, compensated.
double vertex_inner(const VertexFunction& f, const VertexFunction& h);

std::vector<Vertex> support(const VertexFunction& u);
// Vertices within graph distance r of the seed set.
std::vector<Vertex> ball(const Graph& g, const std::vector<Vertex>& seeds, int r);
std::vector<int> bfs_distance(const Graph& g, const std::vector<Vertex>& seeds);

}  // namespace hardy
