#pragma once

#include "finmat/groups/matfp.hpp"

#include <cstddef>
#include <map>
#include <unordered_map>
#include <vector>

namespace finmat {

struct ConjClass {
  int rep = 0;               // minimal member index
  std::vector<int> members;  // sorted
  int order = 1;             // element order
};

// Finite group held by its Cayley table; identity is element 0.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  static FiniteGroup from_matrices(const std::vector<MatFp>& gens, std::size_t cap = 200000);
  // table[a * n + b] = index of a*b; element 0 must be the identity.
  static FiniteGroup from_table(int n, std::vector<int> table, std::vector<int> gens);

  int order() const { return n_; }
  const std::vector<int>& generators() const { return gens_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int pow(int a, long k) const;
  int elem_order(int a) const { return ord_[a]; }
  int exponent() const;
  int conj(int x, int g) const { return mul(mul(inv(g), x), g); }  // g^-1 x g

  const std::vector<ConjClass>& classes() const { return classes_; }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  int class_of(int x) const { return class_of_[x]; }
  int power_class(int c, long k) const { return class_of_[pow(classes_[c].rep, k)]; }

  bool has_matrices() const { return !mats_.empty(); }
  const std::vector<MatFp>& matrices() const { return mats_; }
  const MatFp& matrix(int i) const { return mats_[i]; }
  int index_of(const MatFp& m) const;  // -1 when absent

  // Word in generator positions, evaluated left to right.
  std::vector<int> word(int x) const;
  // Sorted element indices of the subgroup generated by gens.
  std::vector<int> subgroup_elements(const std::vector<int>& gens) const;
  // Subgroup on the given element set (must be a subgroup containing 0), as its own group.
  FiniteGroup restrict_to(const std::vector<int>& elems, const std::vector<int>& gens) const;
  bool is_abelian() const;
  std::vector<int> center() const;
  std::vector<int> derived_subgroup() const;

 private:
  void finish(std::vector<int> gens);
  void build_classes();

  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<int> ord_;
  std::vector<int> gens_;
  std::vector<int> parent_;
  std::vector<int> pgen_;
  std::vector<ConjClass> classes_;
  std::vector<int> class_of_;
  std::vector<MatFp> mats_;
  std::unordered_map<MatFp, int, MatFpHash> index_;
};

struct IsoInvariants {
  int order = 0;
  int exponent = 0;
  std::vector<int> abelianization;  // sorted element orders in G/G'
  std::vector<int> class_sizes;     // sorted
  std::map<int, int> order_histogram;
  int center_order = 0;
  std::vector<int> derived_series;  // |G|, |G'|, |G''|, ... until stable
  friend bool operator==(const IsoInvariants&, const IsoInvariants&) = default;
};

IsoInvariants iso_invariants(const FiniteGroup& G);

}  // namespace finmat
