#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace abelcut {

/// An element of a product of cyclic groups, one residue per factor.
struct GroupElement {
  std::vector<int64_t> residues;

  bool operator==(const GroupElement&) const = default;
  auto operator<=>(const GroupElement&) const = default;
};

/// Z_{m_1} x ... x Z_{m_k}. Elements are indexed in mixed radix with the last
/// modulus varying fastest, so (0,1) -> 1 and (1,0) -> m_k.
class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<int64_t> moduli);

  /// Z_m^k.
  static AbelianGroup power(int64_t m, int k);

  std::span<const int64_t> moduli() const { return moduli_; }
  size_t rank() const { return moduli_.size(); }
  int64_t order() const { return order_; }

  int64_t index(const GroupElement& x) const;
  GroupElement element(int64_t index) const;

  GroupElement identity() const;
  GroupElement negate(const GroupElement& x) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement scale(const GroupElement& x, int64_t k) const;
  bool is_identity(const GroupElement& x) const;

  /// Index arithmetic without materializing elements.
  int64_t add_index(int64_t a, int64_t b) const;
  int64_t negate_index(int64_t a) const;

  /// Least common multiple of the moduli; character phases live in Z_lcm.
  int64_t exponent() const { return exponent_; }

  /// <g, x> as an integer modulo exponent(): sum_j g_j x_j (exponent / m_j).
  int64_t pairing(const GroupElement& g, const GroupElement& x) const;

  std::string describe() const;

  bool operator==(const AbelianGroup& other) const { return moduli_ == other.moduli_; }

 private:
  void check(const GroupElement& x) const;

  std::vector<int64_t> moduli_;
  std::vector<int64_t> strides_;
  int64_t order_ = 1;
  int64_t exponent_ = 1;
};

struct Generator {
  GroupElement element;
  int64_t mult = 1;
};

/// Multiset of generators. Repeated entries for the same element are merged.
class GeneratorMultiset {
 public:
  GeneratorMultiset() = default;
  explicit GeneratorMultiset(std::vector<Generator> entries);

  /// {+x, -x} for each x, or a single copy when x is self-inverse.
  static GeneratorMultiset symmetric_closure(const AbelianGroup& group,
                                             std::span<const GroupElement> elements);
  /// {+-e_1, ..., +-e_k}; for Z_2 factors a single e_j.
  static GeneratorMultiset standard(const AbelianGroup& group);

  std::span<const Generator> entries() const { return entries_; }
  int64_t degree() const { return degree_; }
  int64_t multiplicity(const GroupElement& x) const;

 private:
  std::vector<Generator> entries_;
  int64_t degree_ = 0;
};

struct SymmetryViolation {
  GroupElement element;
  int64_t mult = 0;
  int64_t inverse_mult = 0;
};

/// Empty result means the multiset is symmetric: mult(x) == mult(-x) for all x.
/// Residues out of range and non-positive multiplicities throw ValidationError.
std::vector<SymmetryViolation> validate_generators(const AbelianGroup& group,
                                                   const GeneratorMultiset& gens);

/// Symmetric multiset of total multiplicity `degree` drawn from non-identity
/// elements: +-x pairs, and self-inverse x singly. Odd degree needs a
/// self-inverse element. Not necessarily generating.
GeneratorMultiset random_generators(const AbelianGroup& group, int64_t degree, uint64_t seed);

}  // namespace abelcut
