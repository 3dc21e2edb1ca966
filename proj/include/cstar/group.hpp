// Finite groups by multiplication table, finite abelian structure with its
// dual group, characters, pairings, subgroups and annihilators.
#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "cstar/types.hpp"

namespace cstar {

struct DualCharacter {
  std::vector<int> gamma;  // one residue per invariant factor
};

/// Z_{d_1} x ... x Z_{d_r}; elements and characters are indexed 0..order-1
/// in mixed radix with the first factor most significant (index 0 is the
/// identity / trivial character).
class AbelianStructure {
 public:
  explicit AbelianStructure(std::vector<int> factors);

  const std::vector<int>& factors() const { return factors_; }
  int order() const { return order_; }

  std::vector<int> tuple_of(int index) const;
  int index_of(const std::vector<int>& tuple) const;
  int add(int a, int b) const;
  int negate(int a) const;

  DualCharacter character(int gamma_index) const { return {tuple_of(gamma_index)}; }

  /// <t, gamma> = exp(2 pi i sum_j t_j gamma_j / d_j)
  Cplx pairing(int t, int gamma_index) const;
  Cplx pairing(int t, const DualCharacter& gamma) const;
  /// exact integer test, no floating point
  bool pairing_is_one(int t, int gamma_index) const;

  /// {gamma : <t,gamma> = 1 for all t in H}, as sorted dual indices
  std::vector<int> annihilator(const std::vector<int>& subgroup) const;

 private:
  std::vector<int> factors_;
  std::vector<int> strides_;
  int order_;
  long long lcm_;
};

class FiniteGroup {
 public:
  /// Validates: Latin square, identity at index 0, inverses, associativity.
  static FiniteGroup from_table(const std::vector<std::vector<int>>& table);
  static FiniteGroup from_abelian_factors(const std::vector<int>& factors);
  static FiniteGroup trivial();

  int order() const { return order_; }
  int identity() const { return 0; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  bool is_abelian() const;
  const std::optional<AbelianStructure>& abelian() const { return abelian_; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  std::vector<int> subgroup_generated(const std::vector<int>& elements) const;
  bool is_subgroup(const std::vector<int>& subset) const;
  /// one representative per left coset of H; throws if H is not a subgroup
  std::vector<int> quotient_transversal(const std::vector<int>& H) const;
  std::vector<std::vector<int>> all_subgroups() const;

 private:
  FiniteGroup() = default;

  int order_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
  std::optional<AbelianStructure> abelian_;
};

}  // namespace cstar
