#include "abelcut_cli/graph_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "abelcut/cuts.hpp"
#include "abelcut/errors.hpp"

namespace abelcut::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

int64_t to_int(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    const int64_t v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw ValidationError("bad " + what + ": '" + s + "'");
  }
}

std::vector<int64_t> to_dims(const std::string& s) {
  std::vector<int64_t> dims;
  for (const auto& part : split(s, 'x')) dims.push_back(to_int(part, "dimension"));
  if (dims.empty()) throw ValidationError("empty dimension list");
  return dims;
}

}  // namespace

json graph_to_json(const Graph& g) {
  json j;
  if (!g.name().empty()) j["name"] = g.name();
  if (const auto& prov = g.provenance()) {
    j["group"]["moduli"] = std::vector<int64_t>(prov->group.moduli().begin(), prov->group.moduli().end());
    json gens = json::array();
    for (const auto& s : prov->generators.entries()) gens.push_back({{"element", s.element.residues}, {"mult", s.mult}});
    j["generators"] = gens;
    return j;
  }
  j["n"] = g.size();
  json edges = json::array();
  for (int64_t u = 0; u < g.size(); ++u)
    for (int64_t v = u; v < g.size(); ++v)
      if (const int64_t m = g.adjacency(u, v)) edges.push_back({u, v, m});
  j["edges"] = edges;
  return j;
}

Graph graph_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("graph JSON must be an object");
  const std::string name = j.value("name", std::string{});
  try {
    if (j.contains("group")) {
      const AbelianGroup group(j.at("group").at("moduli").get<std::vector<int64_t>>());
      std::vector<Generator> gens;
      for (const auto& e : j.at("generators")) {
        GroupElement x{e.at("element").get<std::vector<int64_t>>()};
        gens.push_back({std::move(x), e.value("mult", int64_t{1})});
      }
      const GeneratorMultiset set(std::move(gens));
      const auto bad = validate_generators(group, set);
      if (!bad.empty()) {
        std::ostringstream os;
        os << "generators not symmetric: element (";
        for (size_t i = 0; i < bad[0].element.residues.size(); ++i) os << (i ? "," : "") << bad[0].element.residues[i];
        os << ") has multiplicity " << bad[0].mult << " but its inverse has " << bad[0].inverse_mult;
        throw ValidationError(os.str());
      }
      Graph g = build_cayley(group, set);
      if (!name.empty()) g.set_name(name);
      return g;
    }
    const int64_t n = j.at("n").get<int64_t>();
    if (n < 1) throw ValidationError("n must be positive");
    if (j.contains("adjacency")) {
      const auto rows = j.at("adjacency").get<std::vector<std::vector<int64_t>>>();
      if (static_cast<int64_t>(rows.size()) != n) throw ValidationError("adjacency has wrong row count");
      std::vector<int64_t> flat;
      flat.reserve(static_cast<size_t>(n * n));
      for (const auto& r : rows) {
        if (static_cast<int64_t>(r.size()) != n) throw ValidationError("adjacency has wrong row length");
        flat.insert(flat.end(), r.begin(), r.end());
      }
      return Graph::from_adjacency(n, std::move(flat), name);
    }
    std::vector<WeightedEdge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3) throw ValidationError("edge must be [u, v] or [u, v, mult]");
      const int64_t u = e[0].get<int64_t>(), v = e[1].get<int64_t>();
      const int64_t m = e.size() == 3 ? e[2].get<int64_t>() : 1;
      if (u < 0 || v < 0 || u >= n || v >= n) throw ValidationError("edge endpoint out of range");
      if (m < 1) throw ValidationError("edge multiplicity must be positive");
      edges.push_back({u, v, m});
    }
    return Graph::from_edges(n, edges, name);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("graph JSON: ") + e.what());
  }
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json load_json(const std::string& path) {
  try {
    return json::parse(read_text(path));
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

Graph load_graph(const std::string& path) {
  Graph g = graph_from_json(load_json(path));
  if (g.name().empty()) g.set_name(std::filesystem::path(path).stem().string());
  return g;
}

void write_text_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot write " + tmp);
    out << content;
    out.flush();
    if (!out) throw ValidationError("write failed: " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

Cut cut_from_json(const json& j, int64_t n) {
  std::vector<int64_t> verts;
  try {
    verts = (j.is_array() ? j : j.at("vertices")).get<std::vector<int64_t>>();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("cut JSON: ") + e.what());
  }
  for (int64_t v : verts)
    if (v < 0 || v >= n) throw ValidationError("cut vertex " + std::to_string(v) + " out of range");
  return Cut::from_vertices(n, verts);
}

json cut_to_json(const Graph& g, const Cut& q) {
  return {{"vertices", q.vertices()}, {"conductance", conductance(g, q)}, {"sparsity", sparsity(g, q)}};
}

BinaryLinearCode code_from_spec(const std::string& spec, uint64_t seed) {
  const auto parts = split(spec, ':');
  const std::string kind = parts.empty() ? "" : parts[0];
  if (kind == "hamming74") return BinaryLinearCode::hamming74();
  if (kind == "identity" && parts.size() == 2) return BinaryLinearCode::identity(to_int(parts[1], "k"));
  if (kind == "repetition" && parts.size() == 2) return BinaryLinearCode::repetition(to_int(parts[1], "length"));
  if (kind == "parity" && parts.size() == 2) return BinaryLinearCode::parity(to_int(parts[1], "k"));
  if (kind == "random" && parts.size() == 3)
    return BinaryLinearCode::random(to_int(parts[1], "k"), to_int(parts[2], "length"), seed);
  return BinaryLinearCode::parse(read_text(spec));
}

Graph graph_from_family(const std::string& spec, uint64_t seed) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "file") return load_graph(rest);
  if (colon == std::string::npos && spec.size() > 5 && spec.ends_with(".json")) return load_graph(spec);
  if (kind == "cycle") return cycle_graph(to_int(rest, "n"));
  if (kind == "hypercube") return hypercube_graph(static_cast<int>(to_int(rest, "k")));
  if (kind == "complete") return complete_graph(to_int(rest, "n"));
  if (kind == "torus") {
    const auto dims = to_dims(rest);
    return torus_graph(dims);
  }
  if (kind == "zpn") {
    const auto parts = split(rest, ':');
    if (parts.size() != 2) throw ValidationError("zpn:P:DIM expected");
    const AbelianGroup group = AbelianGroup::power(to_int(parts[0], "p"), static_cast<int>(to_int(parts[1], "dim")));
    return build_cayley(group, GeneratorMultiset::standard(group));
  }
  if (kind == "random") {
    const auto parts = split(rest, ':');
    if (parts.size() != 2) throw ValidationError("random:MODULI:DEGREE expected");
    const AbelianGroup group(to_dims(parts[0]));
    const int64_t degree = to_int(parts[1], "degree");
    for (uint64_t attempt = 0; attempt < 1000; ++attempt) {
      Graph g = build_cayley(group, random_generators(group, degree, seed + attempt));
      if (connectivity(g) != 1) continue;
      g.set_name("random(" + group.describe() + ",d=" + std::to_string(degree) + ",seed=" + std::to_string(seed + attempt) + ")");
      return g;
    }
    throw ValidationError("no connected random Cayley graph found for " + spec);
  }
  if (kind == "code") return code_to_cayley(code_from_spec(rest, seed));
  throw ValidationError("unknown graph family '" + spec + "'");
}

}  // namespace abelcut::cli
