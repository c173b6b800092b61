#include "abelcut/graph.hpp"

#include <queue>
#include <sstream>

#include "abelcut/errors.hpp"

namespace abelcut {

namespace {
constexpr int64_t kMaxDenseVertices = 1 << 13;
}

Graph Graph::from_edges(int64_t n, std::span<const WeightedEdge> edges, std::string name) {
  if (n < 1) throw ValidationError("graph needs at least one vertex");
  if (n > kMaxDenseVertices) throw SizeGuardError("dense graph storage limited to 8192 vertices");
  std::vector<int64_t> adj(static_cast<size_t>(n * n), 0);
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) throw ValidationError("edge endpoint out of range");
    if (e.mult <= 0) throw ValidationError("edge multiplicity must be positive");
    adj[static_cast<size_t>(e.u * n + e.v)] += e.mult;
    if (e.u != e.v) adj[static_cast<size_t>(e.v * n + e.u)] += e.mult;
  }
  return from_adjacency(n, std::move(adj), std::move(name));
}

Graph Graph::from_adjacency(int64_t n, std::vector<int64_t> adjacency, std::string name) {
  if (n < 1) throw ValidationError("graph needs at least one vertex");
  if (static_cast<int64_t>(adjacency.size()) != n * n) throw ValidationError("adjacency size mismatch");
  for (int64_t u = 0; u < n; ++u) {
    for (int64_t v = 0; v < n; ++v) {
      const int64_t a = adjacency[static_cast<size_t>(u * n + v)];
      if (a < 0) throw ValidationError("negative adjacency entry");
      if (a != adjacency[static_cast<size_t>(v * n + u)]) {
        std::ostringstream os;
        os << "adjacency not symmetric at (" << u << "," << v << ")";
        throw ValidationError(os.str());
      }
    }
  }
  Graph g;
  g.n_ = n;
  g.adj_ = std::move(adjacency);
  g.name_ = std::move(name);
  g.finalize();
  return g;
}

void Graph::finalize() {
  degree_.assign(static_cast<size_t>(n_), 0);
  nbr_offset_.assign(static_cast<size_t>(n_) + 1, 0);
  nbrs_.clear();
  volume_ = 0;
  for (int64_t u = 0; u < n_; ++u) {
    nbr_offset_[static_cast<size_t>(u)] = nbrs_.size();
    for (int64_t v = 0; v < n_; ++v) {
      const int64_t a = adj_[static_cast<size_t>(u * n_ + v)];
      if (a == 0) continue;
      degree_[static_cast<size_t>(u)] += a;
      nbrs_.push_back({v, a});
    }
    volume_ += degree_[static_cast<size_t>(u)];
  }
  nbr_offset_[static_cast<size_t>(n_)] = nbrs_.size();
}

std::optional<int64_t> Graph::regular_degree() const {
  if (n_ == 0) return std::nullopt;
  for (auto d : degree_) {
    if (d != degree_[0]) return std::nullopt;
  }
  return degree_[0];
}

std::span<const Graph::Neighbor> Graph::neighbors(int64_t u) const {
  const size_t b = nbr_offset_[static_cast<size_t>(u)];
  const size_t e = nbr_offset_[static_cast<size_t>(u) + 1];
  return {nbrs_.data() + b, e - b};
}

Graph build_cayley(const AbelianGroup& group, const GeneratorMultiset& gens) {
  const auto violations = validate_generators(group, gens);
  if (!violations.empty()) {
    std::ostringstream os;
    os << "generator multiset is not symmetric; first offending element index "
       << group.index(violations.front().element) << " has multiplicity " << violations.front().mult
       << " but its inverse has " << violations.front().inverse_mult;
    throw ValidationError(os.str());
  }
  const int64_t n = group.order();
  if (n > kMaxDenseVertices) throw SizeGuardError("dense graph storage limited to 8192 vertices");
  Graph g;
  g.n_ = n;
  g.adj_.assign(static_cast<size_t>(n * n), 0);
  for (const auto& gen : gens.entries()) {
    const int64_t s = group.index(gen.element);
    for (int64_t x = 0; x < n; ++x) {
      g.adj_[static_cast<size_t>(x * n + group.add_index(x, s))] += gen.mult;
    }
  }
  g.provenance_ = CayleyProvenance{group, gens};
  g.name_ = "Cay(" + group.describe() + ",d=" + std::to_string(gens.degree()) + ")";
  g.finalize();
  return g;
}

std::vector<int64_t> component_labels(const Graph& g) {
  const int64_t n = g.size();
  std::vector<int64_t> label(static_cast<size_t>(n), -1);
  int64_t next = 0;
  std::queue<int64_t> q;
  for (int64_t s = 0; s < n; ++s) {
    if (label[static_cast<size_t>(s)] >= 0) continue;
    label[static_cast<size_t>(s)] = next;
    q.push(s);
    while (!q.empty()) {
      const int64_t u = q.front();
      q.pop();
      for (const auto& nb : g.neighbors(u)) {
        if (label[static_cast<size_t>(nb.vertex)] < 0) {
          label[static_cast<size_t>(nb.vertex)] = next;
          q.push(nb.vertex);
        }
      }
    }
    ++next;
  }
  return label;
}

int64_t connectivity(const Graph& g) {
  int64_t count = 0;
  for (auto l : component_labels(g)) count = std::max(count, l + 1);
  return count;
}

Graph cycle_graph(int64_t n) {
  AbelianGroup z({n});
  auto g = build_cayley(z, GeneratorMultiset::standard(z));
  g.set_name("C" + std::to_string(n));
  return g;
}

Graph hypercube_graph(int k) {
  auto z = AbelianGroup::power(2, k);
  auto g = build_cayley(z, GeneratorMultiset::standard(z));
  g.set_name("Q" + std::to_string(k));
  return g;
}

Graph torus_graph(std::span<const int64_t> dims) {
  AbelianGroup z(std::vector<int64_t>(dims.begin(), dims.end()));
  auto g = build_cayley(z, GeneratorMultiset::standard(z));
  std::string name = "T";
  for (size_t j = 0; j < dims.size(); ++j) name += (j ? "x" : "") + std::to_string(dims[j]);
  g.set_name(name);
  return g;
}

Graph complete_graph(int64_t n) {
  AbelianGroup z({n});
  std::vector<Generator> gens;
  for (int64_t s = 1; s < n; ++s) gens.push_back({GroupElement{{s}}, 1});
  auto g = build_cayley(z, GeneratorMultiset(std::move(gens)));
  g.set_name("K" + std::to_string(n));
  return g;
}

}  // namespace abelcut
