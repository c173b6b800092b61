#include "abelcut/cut.hpp"

#include <algorithm>
#include <sstream>

#include "abelcut/errors.hpp"

namespace abelcut {

Cut::Cut(std::vector<uint8_t> membership) : members_(std::move(membership)) {
  for (auto& m : members_) {
    m = m ? 1 : 0;
    size_ += m;
  }
}

Cut Cut::from_vertices(int64_t n, std::span<const int64_t> vertices) {
  std::vector<uint8_t> m(static_cast<size_t>(n), 0);
  for (auto v : vertices) {
    if (v < 0 || v >= n) throw ValidationError("cut vertex out of range");
    m[static_cast<size_t>(v)] = 1;
  }
  return Cut(std::move(m));
}

Cut Cut::from_mask(int64_t n, uint64_t mask) {
  std::vector<uint8_t> m(static_cast<size_t>(n), 0);
  for (int64_t v = 0; v < n; ++v) m[static_cast<size_t>(v)] = (mask >> v) & 1U;
  return Cut(std::move(m));
}

std::vector<int64_t> Cut::vertices() const {
  std::vector<int64_t> out;
  out.reserve(static_cast<size_t>(size_));
  for (size_t v = 0; v < members_.size(); ++v) {
    if (members_[v]) out.push_back(static_cast<int64_t>(v));
  }
  return out;
}

Cut Cut::complement() const {
  std::vector<uint8_t> m(members_.size());
  for (size_t v = 0; v < members_.size(); ++v) m[v] = members_[v] ? 0 : 1;
  return Cut(std::move(m));
}

Cut Cut::smaller_side() const {
  const int64_t n = universe();
  if (2 * size_ < n) return *this;
  if (2 * size_ > n) return complement();
  return (n > 0 && contains(0)) ? *this : complement();
}

int64_t Cut::symmetric_difference(const Cut& other) const {
  if (other.universe() != universe()) throw ValidationError("cuts over different vertex sets");
  int64_t d = 0;
  for (size_t v = 0; v < members_.size(); ++v) d += members_[v] != other.members_[v];
  return d;
}

std::string Cut::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto v : vertices()) {
    os << (first ? "" : ",") << v;
    first = false;
  }
  os << "}";
  return os.str();
}

bool lex_less(const Cut& a, const Cut& b) {
  const auto va = a.vertices();
  const auto vb = b.vertices();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

}  // namespace abelcut
