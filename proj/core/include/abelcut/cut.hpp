#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace abelcut {

/// Vertex subset of [n] stored as a 0/1 membership vector.
class Cut {
 public:
  Cut() = default;
  explicit Cut(std::vector<uint8_t> membership);
  static Cut from_vertices(int64_t n, std::span<const int64_t> vertices);
  /// Bit i of mask is vertex i; n <= 64.
  static Cut from_mask(int64_t n, uint64_t mask);

  int64_t universe() const { return static_cast<int64_t>(members_.size()); }
  int64_t size() const { return size_; }
  bool contains(int64_t v) const { return members_[static_cast<size_t>(v)] != 0; }
  bool proper() const { return size_ > 0 && size_ < universe(); }
  const std::vector<uint8_t>& membership() const { return members_; }

  std::vector<int64_t> vertices() const;
  Cut complement() const;
  /// The side with at most n/2 vertices; ties go to the side holding vertex 0.
  Cut smaller_side() const;
  int64_t symmetric_difference(const Cut& other) const;

  std::string to_string() const;

  bool operator==(const Cut& other) const { return members_ == other.members_; }

 private:
  std::vector<uint8_t> members_;
  int64_t size_ = 0;
};

/// Lexicographic order on the sorted vertex lists; used as the tie-break
/// everywhere a deterministic choice between equal-valued cuts is needed.
bool lex_less(const Cut& a, const Cut& b);

}  // namespace abelcut
