#include "cstar/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cstar {

namespace {
long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }
}

AbelianStructure::AbelianStructure(std::vector<int> factors) : factors_(std::move(factors)) {
  order_ = 1;
  lcm_ = 1;
  for (int d : factors_) {
    if (d < 2) throw InputError("abelian invariant factors must be >= 2");
    order_ *= d;
    lcm_ = lcm_ll(lcm_, d);
  }
  strides_.assign(factors_.size(), 1);
  for (int j = int(factors_.size()) - 2; j >= 0; --j)
    strides_[j] = strides_[j + 1] * factors_[j + 1];
}

std::vector<int> AbelianStructure::tuple_of(int index) const {
  std::vector<int> t(factors_.size());
  for (size_t j = 0; j < factors_.size(); ++j) {
    t[j] = (index / strides_[j]) % factors_[j];
  }
  return t;
}

int AbelianStructure::index_of(const std::vector<int>& tuple) const {
  if (tuple.size() != factors_.size()) throw InputError("tuple arity mismatch");
  int idx = 0;
  for (size_t j = 0; j < factors_.size(); ++j) {
    int v = ((tuple[j] % factors_[j]) + factors_[j]) % factors_[j];
    idx += v * strides_[j];
  }
  return idx;
}

int AbelianStructure::add(int a, int b) const {
  auto ta = tuple_of(a), tb = tuple_of(b);
  for (size_t j = 0; j < factors_.size(); ++j) ta[j] = (ta[j] + tb[j]) % factors_[j];
  return index_of(ta);
}

int AbelianStructure::negate(int a) const {
  auto t = tuple_of(a);
  for (size_t j = 0; j < factors_.size(); ++j) t[j] = (factors_[j] - t[j]) % factors_[j];
  return index_of(t);
}

Cplx AbelianStructure::pairing(int t, int gamma_index) const {
  auto tt = tuple_of(t), gg = tuple_of(gamma_index);
  double phase = 0.0;
  for (size_t j = 0; j < factors_.size(); ++j)
    phase += double(tt[j]) * double(gg[j]) / double(factors_[j]);
  double angle = 6.283185307179586476925287 * phase;
  return Cplx(std::cos(angle), std::sin(angle));
}

Cplx AbelianStructure::pairing(int t, const DualCharacter& gamma) const {
  return pairing(t, index_of(gamma.gamma));
}

bool AbelianStructure::pairing_is_one(int t, int gamma_index) const {
  auto tt = tuple_of(t), gg = tuple_of(gamma_index);
  long long total = 0;
  for (size_t j = 0; j < factors_.size(); ++j)
    total += (lcm_ / factors_[j]) * (long long)tt[j] * gg[j];
  return total % lcm_ == 0;
}

std::vector<int> AbelianStructure::annihilator(const std::vector<int>& subgroup) const {
  std::vector<int> out;
  for (int gamma = 0; gamma < order_; ++gamma) {
    bool kills = true;
    for (int t : subgroup)
      if (!pairing_is_one(t, gamma)) {
        kills = false;
        break;
      }
    if (kills) out.push_back(gamma);
  }
  return out;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table) {
  FiniteGroup g;
  g.order_ = int(table.size());
  if (g.order_ < 1) throw InputError("group table must be nonempty");
  for (const auto& row : table) {
    if (int(row.size()) != g.order_) throw InputError("group table must be square");
    for (int v : row)
      if (v < 0 || v >= g.order_) throw InputError("group table entry out of range");
  }
  g.table_ = table;
  for (int j = 0; j < g.order_; ++j)
    if (table[0][j] != j || table[j][0] != j)
      throw InputError("group identity must be element 0");
  // Latin square
  for (int i = 0; i < g.order_; ++i) {
    std::set<int> row(table[i].begin(), table[i].end());
    std::set<int> col;
    for (int j = 0; j < g.order_; ++j) col.insert(table[j][i]);
    if (int(row.size()) != g.order_ || int(col.size()) != g.order_)
      throw InputError("group table is not a Latin square");
  }
  g.inv_.assign(g.order_, -1);
  for (int a = 0; a < g.order_; ++a)
    for (int b = 0; b < g.order_; ++b)
      if (table[a][b] == 0) g.inv_[a] = b;
  for (int a = 0; a < g.order_; ++a)
    if (g.inv_[a] < 0 || table[g.inv_[a]][a] != 0) throw InputError("group element lacks an inverse");
  for (int a = 0; a < g.order_; ++a)
    for (int b = 0; b < g.order_; ++b)
      for (int c = 0; c < g.order_; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw InputError("group table is not associative");
  return g;
}

FiniteGroup FiniteGroup::from_abelian_factors(const std::vector<int>& factors) {
  if (factors.empty()) return trivial();
  AbelianStructure st(factors);
  std::vector<std::vector<int>> table(st.order(), std::vector<int>(st.order()));
  for (int a = 0; a < st.order(); ++a)
    for (int b = 0; b < st.order(); ++b) table[a][b] = st.add(a, b);
  FiniteGroup g = from_table(table);
  g.abelian_ = st;
  return g;
}

FiniteGroup FiniteGroup::trivial() {
  FiniteGroup g;
  g.order_ = 1;
  g.table_ = {{0}};
  g.inv_ = {0};
  return g;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

std::vector<int> FiniteGroup::subgroup_generated(const std::vector<int>& elements) const {
  std::set<int> closure{0};
  for (int e : elements) {
    if (e < 0 || e >= order_) throw InputError("group element out of range");
    closure.insert(e);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> current(closure.begin(), closure.end());
    for (int a : current)
      for (int b : current)
        if (closure.insert(table_[a][b]).second) grew = true;
  }
  return {closure.begin(), closure.end()};
}

bool FiniteGroup::is_subgroup(const std::vector<int>& subset) const {
  std::set<int> s(subset.begin(), subset.end());
  if (!s.count(0)) return false;
  for (int a : s)
    for (int b : s)
      if (!s.count(table_[a][b])) return false;
  return true;
}

std::vector<int> FiniteGroup::quotient_transversal(const std::vector<int>& H) const {
  if (!is_subgroup(H)) throw InputError("not a subgroup");
  std::vector<bool> covered(order_, false);
  std::vector<int> reps;
  for (int g = 0; g < order_; ++g) {
    if (covered[g]) continue;
    reps.push_back(g);
    for (int h : H) covered[table_[g][h]] = true;
  }
  return reps;
}

std::vector<std::vector<int>> FiniteGroup::all_subgroups() const {
  std::set<std::vector<int>> found;
  int subsets = 1 << order_;
  for (int mask = 0; mask < subsets; ++mask) {
    std::vector<int> gens;
    for (int e = 0; e < order_; ++e)
      if (mask & (1 << e)) gens.push_back(e);
    found.insert(subgroup_generated(gens));
  }
  return {found.begin(), found.end()};
}

}  // namespace cstar
