#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "abelcut/cut.hpp"
#include "abelcut/graph.hpp"
#include "abelcut/special_cases.hpp"

namespace abelcut::cli {

using nlohmann::json;

/// Cayley graphs are written in group form, everything else as an edge list.
json graph_to_json(const Graph& g);

/// Accepts
///   {"group": {"moduli": [..]}, "generators": [{"element": [..], "mult": k}, ..]}
///   {"n": N, "edges": [[u, v, mult], ..]}
///   {"n": N, "adjacency": [[..], ..]}
/// plus an optional "name". Asymmetric generators or adjacency throw ValidationError.
Graph graph_from_json(const json& j);

Graph load_graph(const std::string& path);
json load_json(const std::string& path);
std::string read_text(const std::string& path);

/// Write to path.tmp, then rename over path.
void write_text_atomic(const std::string& path, const std::string& content);

/// {"vertices": [..]}, or a bare array of vertices.
Cut cut_from_json(const json& j, int64_t n);
json cut_to_json(const Graph& g, const Cut& q);

/// Family descriptors:
///   cycle:N  hypercube:K  torus:AxB[x..]  complete:N  zpn:P:DIM
///   random:M1xM2..:D  (random symmetric generators, reseeded until connected)
///   code:hamming74 | code:identity:K | code:repetition:N | code:parity:K
///   code:random:K:LEN | code:FILE
///   file:PATH  or a path ending in .json
Graph graph_from_family(const std::string& spec, uint64_t seed);

BinaryLinearCode code_from_spec(const std::string& spec, uint64_t seed);

}  // namespace abelcut::cli
