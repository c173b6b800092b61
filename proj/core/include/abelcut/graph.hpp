#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "abelcut/group.hpp"

namespace abelcut {

struct CayleyProvenance {
  AbelianGroup group;
  GeneratorMultiset generators;
};

struct WeightedEdge {
  int64_t u = 0;
  int64_t v = 0;
  int64_t mult = 1;
};

/// Undirected multigraph with dense integer adjacency. A self-loop of
/// multiplicity k adds k to the diagonal entry and k to the vertex degree.
///
/// Graphs built from a group carry their provenance and are d-regular; graphs
/// built from edge lists have none and may be irregular.
class Graph {
 public:
  Graph() = default;

  /// Edges are undirected; {u, v, k} adds k to both (u,v) and (v,u).
  static Graph from_edges(int64_t n, std::span<const WeightedEdge> edges, std::string name = {});

  /// Takes a full symmetric adjacency matrix (row-major, n*n).
  static Graph from_adjacency(int64_t n, std::vector<int64_t> adjacency, std::string name = {});

  int64_t size() const { return n_; }
  int64_t adjacency(int64_t u, int64_t v) const { return adj_[static_cast<size_t>(u * n_ + v)]; }
  std::span<const int64_t> row(int64_t u) const {
    return {adj_.data() + u * n_, static_cast<size_t>(n_)};
  }
  int64_t degree(int64_t u) const { return degree_[static_cast<size_t>(u)]; }
  std::span<const int64_t> degrees() const { return degree_; }
  int64_t total_volume() const { return volume_; }

  /// Common degree if regular.
  std::optional<int64_t> regular_degree() const;

  /// Nonzero entries of row u as (neighbor, multiplicity), self-loops included.
  struct Neighbor {
    int64_t vertex;
    int64_t mult;
  };
  std::span<const Neighbor> neighbors(int64_t u) const;

  const std::optional<CayleyProvenance>& provenance() const { return provenance_; }
  bool is_cayley() const { return provenance_.has_value(); }

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

 private:
  friend Graph build_cayley(const AbelianGroup&, const GeneratorMultiset&);
  void finalize();

  int64_t n_ = 0;
  std::vector<int64_t> adj_;
  std::vector<int64_t> degree_;
  int64_t volume_ = 0;
  std::vector<size_t> nbr_offset_;
  std::vector<Neighbor> nbrs_;
  std::optional<CayleyProvenance> provenance_;
  std::string name_;
};

/// Cay(group, gens): vertex x adjacent to x + s for every s with multiplicity.
/// Throws ValidationError if gens is not symmetric.
Graph build_cayley(const AbelianGroup& group, const GeneratorMultiset& gens);

int64_t connectivity(const Graph& g);

/// Component label per vertex, labels numbered in order of first vertex.
std::vector<int64_t> component_labels(const Graph& g);

/// Common families.
Graph cycle_graph(int64_t n);
Graph hypercube_graph(int k);
Graph torus_graph(std::span<const int64_t> dims);
Graph complete_graph(int64_t n);

}  // namespace abelcut
