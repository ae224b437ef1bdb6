#include "hardy/graph.hpp"

#include <cmath>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hardy/sum.hpp"

namespace hardy {

Graph::Graph(std::size_t n_vertices) {
  for (std::size_t i = 0; i < n_vertices; ++i) add_vertex(static_cast<VertexId>(i));
}

Vertex Graph::add_vertex(VertexId id) {
  auto it = index_.find(id);
  if (it != index_.end()) return it->second;
  const Vertex v = adj_.size();
  ids_.push_back(id);
  index_.emplace(id, v);
  adj_.emplace_back();
  return v;
}

void Graph::check_vertex(Vertex x) const {
  if (x >= adj_.size()) throw std::out_of_range("unknown vertex " + std::to_string(x));
}

void Graph::add_edge(Vertex x, Vertex y, double b) {
  check_vertex(x);
  check_vertex(y);
  if (x == y) throw std::invalid_argument("self-loops are not allowed");
  if (!(b > 0.0) || !std::isfinite(b)) throw std::invalid_argument("edge weight must be positive and finite");
  if (weight(x, y) != 0.0) throw std::invalid_argument("duplicate edge");
  adj_[x].push_back({y, b, adj_[y].size()});
  adj_[y].push_back({x, b, adj_[x].size() - 1});
  ++n_edges_;
}

void Graph::add_edge_by_id(VertexId x, VertexId y, double b) {
  const Vertex vx = add_vertex(x);
  const Vertex vy = add_vertex(y);
  add_edge(vx, vy, b);
}

const std::vector<Neighbor>& Graph::neighbors(Vertex x) const {
  check_vertex(x);
  return adj_[x];
}

double Graph::weight(Vertex x, Vertex y) const {
  for (const auto& nb : neighbors(x))
    if (nb.v == y) return nb.b;
  return 0.0;
}

double Graph::weighted_degree(Vertex x) const {
  double d = 0.0;
  for (const auto& nb : neighbors(x)) d += nb.b;
  return d;
}

Vertex Graph::index_of(VertexId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw std::out_of_range("unknown vertex id " + std::to_string(id));
  return it->second;
}

bool Graph::is_connected() const {
  if (adj_.empty()) return true;
  auto d = bfs_distance(*this, {0});
  for (int x : d)
    if (x < 0) return false;
  return true;
}

Graph Graph::read(std::istream& in) {
  Graph g;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ss(line);
    VertexId x, y;
    double b;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!(ss >> x)) throw std::invalid_argument("graph line " + std::to_string(lineno) + ": expected 'x y b'");
    if (!(ss >> y >> b)) throw std::invalid_argument("graph line " + std::to_string(lineno) + ": expected 'x y b'");
    if (x < 0 || y < 0) throw std::invalid_argument("graph line " + std::to_string(lineno) + ": negative vertex id");
    std::string rest;
    if (ss >> rest) throw std::invalid_argument("graph line " + std::to_string(lineno) + ": trailing tokens");
    g.add_edge_by_id(x, y, b);
  }
  return g;
}

Graph Graph::read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file " + path);
  return read(in);
}

void Graph::write(std::ostream& out) const {
  out.precision(17);
  for (Vertex x = 0; x < adj_.size(); ++x)
    for (const auto& nb : adj_[x])
      if (x < nb.v) out << ids_[x] << ' ' << ids_[nb.v] << ' ' << nb.b << '\n';
}

EdgeFunction::EdgeFunction(const Graph& g) : values_(g.num_vertices()) {
  for (Vertex x = 0; x < g.num_vertices(); ++x) values_[x].assign(g.neighbors(x).size(), 0.0);
}

EdgeFunction EdgeFunction::from(const Graph& g, const std::function<double(Vertex, Vertex)>& fn) {
  EdgeFunction F(g);
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    const auto& nbs = g.neighbors(x);
    for (std::size_t s = 0; s < nbs.size(); ++s) F.values_[x][s] = fn(x, nbs[s].v);
  }
  return F;
}

EdgeFunction EdgeFunction::gradient(const Graph& g, const VertexFunction& f) {
  return from(g, [&](Vertex x, Vertex y) { return vf(f, x) - vf(f, y); });
}

double EdgeFunction::value(const Graph& g, Vertex x, Vertex y) const {
  const auto& nbs = g.neighbors(x);
  for (std::size_t s = 0; s < nbs.size(); ++s)
    if (nbs[s].v == y) return values_.at(x).at(s);
  throw std::out_of_range("edge function queried on a non-edge");
}

bool EdgeFunction::is_antisymmetric(const Graph& g, double tol) const {
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    const auto& nbs = g.neighbors(x);
    for (std::size_t s = 0; s < nbs.size(); ++s) {
      const double a = values_[x][s];
      const double b = values_[nbs[s].v][nbs[s].rev];
      if (std::abs(a + b) > tol * (std::abs(a) + std::abs(b))) return false;
    }
  }
  return true;
}

double vf(const VertexFunction& f, Vertex x) { return x < f.size() ? f[x] : 0.0; }

double graph_laplacian(const Graph& g, const VertexFunction& f, Vertex x) {
  CompensatedSum s;
  const double fx = vf(f, x);
  for (const auto& nb : g.neighbors(x)) s.add_product(nb.b, fx - vf(f, nb.v));
  return s.value();
}

VertexFunction graph_laplacian(const Graph& g, const VertexFunction& f) {
  VertexFunction r(g.num_vertices());
  for (Vertex x = 0; x < g.num_vertices(); ++x) r[x] = graph_laplacian(g, f, x);
  return r;
}

VertexFunction graph_laplacian_power(const Graph& g, const VertexFunction& f, int k) {
  if (k < 0) throw std::invalid_argument("negative Laplacian power");
  VertexFunction r = f;
  r.resize(g.num_vertices(), 0.0);
  for (int i = 0; i < k; ++i) r = graph_laplacian(g, r);
  return r;
}

double grad_pairing(const Graph& g, const VertexFunction& f, const VertexFunction& h, Vertex x) {
  CompensatedSum s;
  const double fx = vf(f, x);
  const double hx = vf(h, x);
  for (const auto& nb : g.neighbors(x)) {
    const double df = fx - vf(f, nb.v);
    const double dh = hx - vf(h, nb.v);
    if (df == 0.0 || dh == 0.0) continue;
    s.add_product(0.5 * nb.b, df * dh);
  }
  return s.value();
}

double edge_divergence(const Graph& g, const EdgeFunction& F, Vertex x) {
  const auto& nbs = g.neighbors(x);
  if (F.rows() != g.num_vertices() || F.slots(x) != nbs.size())
    throw std::invalid_argument("edge function does not cover the edges at x");
  CompensatedSum s;
  for (std::size_t k = 0; k < nbs.size(); ++k) {
    const double fyx = F.at_slot(nbs[k].v, nbs[k].rev);
    const double fxy = F.at_slot(x, k);
    s.add_product(0.5 * nbs[k].b, fyx);
    s.add_product(-0.5 * nbs[k].b, fxy);
  }
  return s.value();
}

double t_functional(const Graph& g, const VertexFunction& V, const VertexFunction& f, Vertex x) {
  // V(x)Δf(x) - <∇f,∇V>_x summed edge by edge as (1/2) b (V(x)+V(y)) (f(x)-f(y)).
  CompensatedSum s;
  const double vx = vf(V, x);
  const double fx = vf(f, x);
  for (const auto& nb : g.neighbors(x)) {
    const double df = fx - vf(f, nb.v);
    if (df == 0.0) continue;
    const double vy = vf(V, nb.v);
    s.add_product(nb.b * vx, df);
    s.add_product(-0.5 * nb.b * (vx - vy), df);
  }
  return s.value();
}

VertexFunction t_functional(const Graph& g, const VertexFunction& V, const VertexFunction& f) {
  VertexFunction r(g.num_vertices());
  for (Vertex x = 0; x < g.num_vertices(); ++x) r[x] = t_functional(g, V, f, x);
  return r;
}

double t_functional_divergence_form(const Graph& g, const VertexFunction& V, const VertexFunction& f,
                                    Vertex x) {
  // Only the edges at x and at its neighbours are read.
  EdgeFunction F(g);
  auto fill = [&](Vertex a) {
    const auto& nbs = g.neighbors(a);
    for (std::size_t k = 0; k < nbs.size(); ++k) F.at_slot(a, k) = vf(V, a) * (vf(f, a) - vf(f, nbs[k].v));
  };
  fill(x);
  for (const auto& nb : g.neighbors(x)) fill(nb.v);
  return -edge_divergence(g, F, x);
}

double f_functional(const Graph& g, const VertexFunction& V, const VertexFunction& f,
                    const VertexFunction& u) {
  CompensatedSum s;
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    const double ux = vf(u, x);
    for (const auto& nb : g.neighbors(x)) {
      const double uy = vf(u, nb.v);
      if (ux == 0.0 && uy == 0.0) continue;
      const double fx = vf(f, x);
      const double fy = vf(f, nb.v);
      if (fx < 0.0 || fy < 0.0 || (ux != 0.0 && !(fx > 0.0)) || (uy != 0.0 && !(fy > 0.0)))
        throw std::domain_error("f_functional: nonpositive f at vertex " + std::to_string(ux != 0.0 && !(fx > 0.0) ? x : nb.v));
      const double a = uy != 0.0 ? std::sqrt(fx / fy) * uy : 0.0;
      const double c = ux != 0.0 ? std::sqrt(fy / fx) * ux : 0.0;
      const double d = a - c;
      if (d == 0.0) continue;
      s.add_product(0.5 * nb.b * vf(V, x), d * d);
    }
  }
  return s.value();
}

double weighted_dirichlet_energy(const Graph& g, const VertexFunction& V, const VertexFunction& u) {
  CompensatedSum s;
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    const double vx = vf(V, x);
    if (vx == 0.0) continue;
    const double ux = vf(u, x);
    for (const auto& nb : g.neighbors(x)) {
      const double d = ux - vf(u, nb.v);
      if (d == 0.0) continue;
      s.add_product(0.5 * nb.b * vx, d * d);
    }
  }
  return s.value();
}

double vertex_inner(const VertexFunction& f, const VertexFunction& h) { return compensated_dot(f, h); }

std::vector<Vertex> support(const VertexFunction& u) {
  std::vector<Vertex> s;
  for (Vertex x = 0; x < u.size(); ++x)
    if (u[x] != 0.0) s.push_back(x);
  return s;
}

std::vector<int> bfs_distance(const Graph& g, const std::vector<Vertex>& seeds) {
  std::vector<int> d(g.num_vertices(), -1);
  std::deque<Vertex> q;
  for (Vertex s : seeds) {
    g.check_vertex(s);
    if (d[s] < 0) {
      d[s] = 0;
      q.push_back(s);
    }
  }
  while (!q.empty()) {
    const Vertex x = q.front();
    q.pop_front();
    for (const auto& nb : g.neighbors(x))
      if (d[nb.v] < 0) {
        d[nb.v] = d[x] + 1;
        q.push_back(nb.v);
      }
  }
  return d;
}

std::vector<Vertex> ball(const Graph& g, const std::vector<Vertex>& seeds, int r) {
  const auto d = bfs_distance(g, seeds);
  std::vector<Vertex> out;
  for (Vertex x = 0; x < d.size(); ++x)
    if (d[x] >= 0 && d[x] <= r) out.push_back(x);
  return out;
}

}  // namespace hardy
