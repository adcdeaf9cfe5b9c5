#pragma once

#include <optional>
#include <vector>

#include "nilmult/magnus.hpp"

namespace nilmult {

// Echelonized generating set for a subgroup of the truncated free group
// image: one slot per basis index, each filled slot holding an element
// whose exponent vector starts at that index with a positive coefficient.
// Because leading coefficients add under multiplication inside each weight
// filtration layer, sifting is integer Euclid on them, and on a certified
// table (closed under commutation with the ambient generators) an element
// belongs to the subgroup exactly when its residual is the identity.
class SubgroupTable {
 public:
  explicit SubgroupTable(const LyndonBasis* basis);

  const LyndonBasis& basis() const { return *basis_; }
  int slots() const { return static_cast<int>(entries_.size()); }
  bool filled(int i) const { return entries_[i].has_value(); }
  const GroupElement& entry(int i) const;
  const Int& lead_coeff(int i) const;
  std::vector<int> filled_slots() const;

  // Sift g into the table; true if the table changed. Invalidates
  // certification.
  bool insert(GroupElement g);

  // Reduce g by the filled slots as far as leading coefficients allow.
  GroupElement residual(GroupElement g) const;

  // Exact membership; only meaningful on certified tables.
  bool contains(const GroupElement& g) const;

  bool certified() const { return certified_; }
  void mark_certified() { certified_ = true; }

  // Index of the subgroup in the full truncated group: the product of the
  // leading coefficients when every slot is filled, infinite otherwise.
  std::optional<Int> quotient_order() const;

  // Reduce each entry's later coordinates modulo the later leading
  // coefficients (Hermite style); canonical for the subgroup. Quadratic in
  // table size, so meant for small tables and tests, not the main pipeline.
  void canonicalize();

  long mutations() const { return mutations_; }

 private:
  struct Entry {
    GroupElement g;
    Int coeff;
  };
  const LyndonBasis* basis_;
  std::vector<std::optional<Entry>> entries_;
  bool certified_ = false;
  long mutations_ = 0;
};

// Smallest subgroup containing gens and closed under commutation with the
// ambient generators (and hence normal, the ambient group being generated
// by them). Result is certified.
SubgroupTable normal_closure(const std::vector<GroupElement>& gens,
                             const std::vector<GroupElement>& ambient,
                             const LyndonBasis& basis);

// [P(t), ambient]: normal closure of the commutators of the entries with
// the ambient generators.
SubgroupTable commutator_with_ambient(const SubgroupTable& t,
                                      const std::vector<GroupElement>& ambient);

// Entries of weight >= min_weight; equals the intersection of P(t) with
// the corresponding weight filtration layer.
SubgroupTable tail_intersection(const SubgroupTable& t, int min_weight);

// Invariant factors of P(a)/P(b) for b inside a, both supported on weights
// >= min_weight with 2*min_weight > K, where that layer is abelian and
// exponent vectors add.
AbelianGroup abelian_section(const SubgroupTable& a, const SubgroupTable& b,
                             int min_weight);

}  // namespace nilmult
