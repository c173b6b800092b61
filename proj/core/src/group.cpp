#include "abelcut/group.hpp"

#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "abelcut/errors.hpp"

namespace abelcut {

AbelianGroup::AbelianGroup(std::vector<int64_t> moduli) : moduli_(std::move(moduli)) {
  strides_.assign(moduli_.size(), 1);
  for (size_t j = moduli_.size(); j-- > 0;) {
    if (moduli_[j] < 2) {
      throw ValidationError("group modulus must be >= 2, got " + std::to_string(moduli_[j]));
    }
    strides_[j] = order_;
    if (order_ > (int64_t{1} << 40) / moduli_[j]) {
      throw SizeGuardError("group order too large");
    }
    order_ *= moduli_[j];
    exponent_ = std::lcm(exponent_, moduli_[j]);
  }
}

AbelianGroup AbelianGroup::power(int64_t m, int k) {
  return AbelianGroup(std::vector<int64_t>(static_cast<size_t>(k), m));
}

void AbelianGroup::check(const GroupElement& x) const {
  if (x.residues.size() != moduli_.size()) {
    throw ValidationError("element has " + std::to_string(x.residues.size()) +
                          " residues, group has rank " + std::to_string(moduli_.size()));
  }
  for (size_t j = 0; j < moduli_.size(); ++j) {
    if (x.residues[j] < 0 || x.residues[j] >= moduli_[j]) {
      throw ValidationError("residue " + std::to_string(x.residues[j]) + " out of range for Z_" +
                            std::to_string(moduli_[j]));
    }
  }
}

int64_t AbelianGroup::index(const GroupElement& x) const {
  check(x);
  int64_t idx = 0;
  for (size_t j = 0; j < moduli_.size(); ++j) idx += x.residues[j] * strides_[j];
  return idx;
}

GroupElement AbelianGroup::element(int64_t index) const {
  if (index < 0 || index >= order_) throw ValidationError("element index out of range");
  GroupElement x;
  x.residues.resize(moduli_.size());
  for (size_t j = 0; j < moduli_.size(); ++j) {
    x.residues[j] = (index / strides_[j]) % moduli_[j];
  }
  return x;
}

GroupElement AbelianGroup::identity() const {
  return GroupElement{std::vector<int64_t>(moduli_.size(), 0)};
}

GroupElement AbelianGroup::negate(const GroupElement& x) const {
  check(x);
  GroupElement r = x;
  for (size_t j = 0; j < moduli_.size(); ++j) r.residues[j] = (moduli_[j] - x.residues[j]) % moduli_[j];
  return r;
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  check(a);
  check(b);
  GroupElement r = a;
  for (size_t j = 0; j < moduli_.size(); ++j) r.residues[j] = (a.residues[j] + b.residues[j]) % moduli_[j];
  return r;
}

GroupElement AbelianGroup::scale(const GroupElement& x, int64_t k) const {
  check(x);
  GroupElement r = x;
  for (size_t j = 0; j < moduli_.size(); ++j) {
    r.residues[j] = ((x.residues[j] * (k % moduli_[j])) % moduli_[j] + moduli_[j]) % moduli_[j];
  }
  return r;
}

bool AbelianGroup::is_identity(const GroupElement& x) const {
  check(x);
  for (auto r : x.residues) {
    if (r != 0) return false;
  }
  return true;
}

int64_t AbelianGroup::add_index(int64_t a, int64_t b) const {
  int64_t r = 0;
  for (size_t j = 0; j < moduli_.size(); ++j) {
    const int64_t s = ((a / strides_[j]) % moduli_[j] + (b / strides_[j]) % moduli_[j]) % moduli_[j];
    r += s * strides_[j];
  }
  return r;
}

int64_t AbelianGroup::negate_index(int64_t a) const {
  int64_t r = 0;
  for (size_t j = 0; j < moduli_.size(); ++j) {
    const int64_t s = (moduli_[j] - (a / strides_[j]) % moduli_[j]) % moduli_[j];
    r += s * strides_[j];
  }
  return r;
}

int64_t AbelianGroup::pairing(const GroupElement& g, const GroupElement& x) const {
  int64_t acc = 0;
  for (size_t j = 0; j < moduli_.size(); ++j) {
    const int64_t w = exponent_ / moduli_[j];
    acc = (acc + (g.residues[j] * x.residues[j] % moduli_[j]) * w) % exponent_;
  }
  return acc;
}

std::string AbelianGroup::describe() const {
  std::ostringstream os;
  for (size_t j = 0; j < moduli_.size(); ++j) {
    if (j) os << "x";
    os << "Z" << moduli_[j];
  }
  return os.str();
}

GeneratorMultiset::GeneratorMultiset(std::vector<Generator> entries) {
  std::map<GroupElement, int64_t> merged;
  std::vector<GroupElement> order;
  for (auto& e : entries) {
    if (e.mult <= 0) throw ValidationError("generator multiplicity must be positive");
    auto [it, inserted] = merged.emplace(e.element, 0);
    if (inserted) order.push_back(e.element);
    it->second += e.mult;
  }
  for (auto& x : order) {
    const int64_t m = merged[x];
    entries_.push_back({x, m});
    degree_ += m;
  }
}

GeneratorMultiset GeneratorMultiset::symmetric_closure(const AbelianGroup& group,
                                                       std::span<const GroupElement> elements) {
  std::vector<Generator> out;
  for (const auto& x : elements) {
    const GroupElement neg = group.negate(x);
    out.push_back({x, 1});
    if (neg != x) out.push_back({neg, 1});
  }
  return GeneratorMultiset(std::move(out));
}

GeneratorMultiset GeneratorMultiset::standard(const AbelianGroup& group) {
  std::vector<GroupElement> basis;
  for (size_t j = 0; j < group.rank(); ++j) {
    GroupElement e = group.identity();
    e.residues[j] = 1;
    basis.push_back(std::move(e));
  }
  return symmetric_closure(group, basis);
}

int64_t GeneratorMultiset::multiplicity(const GroupElement& x) const {
  for (const auto& e : entries_) {
    if (e.element == x) return e.mult;
  }
  return 0;
}

std::vector<SymmetryViolation> validate_generators(const AbelianGroup& group,
                                                   const GeneratorMultiset& gens) {
  std::vector<SymmetryViolation> out;
  if (gens.degree() < 1) throw ValidationError("generator multiset is empty");
  for (const auto& e : gens.entries()) {
    const GroupElement neg = group.negate(e.element);
    const int64_t inv = gens.multiplicity(neg);
    if (inv != e.mult) out.push_back({e.element, e.mult, inv});
  }
  return out;
}

GeneratorMultiset random_generators(const AbelianGroup& group, int64_t degree, uint64_t seed) {
  if (degree < 1) throw ValidationError("degree must be positive");
  if (group.order() < 2) throw ValidationError("trivial group has no non-identity generators");
  bool has_involution = false;
  for (int64_t i = 1; i < group.order() && !has_involution; ++i)
    has_involution = group.negate_index(i) == i;
  if (degree % 2 == 1 && !has_involution)
    throw ValidationError("odd degree needs a self-inverse element, " + group.describe() + " has none");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int64_t> pick(1, group.order() - 1);
  std::vector<Generator> out;
  int64_t left = degree;
  while (left > 0) {
    const int64_t i = pick(rng);
    const int64_t neg = group.negate_index(i);
    if (neg == i) {
      out.push_back({group.element(i), 1});
      left -= 1;
    } else if (left >= 2) {
      out.push_back({group.element(i), 1});
      out.push_back({group.element(neg), 1});
      left -= 2;
    }
  }
  return GeneratorMultiset(std::move(out));
}

}  // namespace abelcut
