#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "chss/character.hpp"

namespace chss {

// Sparse column-major matrix over Q(i).
struct SparseMat {
  int rows = 0, cols = 0;
  std::vector<std::vector<std::pair<int, QI>>> col;  // col[j] = {(i, v)}

  static SparseMat zero(int r, int c) {
    SparseMat m;
    m.rows = r;
    m.cols = c;
    m.col.resize(c);
    return m;
  }
  void add(int i, int j, const QI& v);
  QI get(int i, int j) const;
  std::map<int, QI> apply(const std::map<int, QI>& v) const;  // sparse vector
  SparseMat transpose_negate() const;
  friend SparseMat commutator(const SparseMat& a, const SparseMat& b);  // ab - ba
  bool equals_diagonal(const std::vector<QI>& d) const;
};

// Concrete based module: labeled weight basis plus exact Chevalley operator
// matrices e_i / f_i per simple factor node, charges carried in the weights.
struct ExplicitModule {
  ReductiveRank rank;
  std::vector<std::string> labels;
  std::vector<Weight> weights;
  // raising[f][i], lowering[f][i]: node i of factor f
  std::vector<std::vector<SparseMat>> raising, lowering;

  int dim() const { return (int)labels.size(); }
  FormalCharacter character() const;
  int index_of(const std::string& label) const;  // -1 if absent
  void check_structure() const;  // [e_i,f_i] = h_i and weight shifts, exact
};

ExplicitModule dual_module(const ExplicitModule& m);
ExplicitModule tensor_module(const ExplicitModule& a, const ExplicitModule& b);
ExplicitModule sym_module(const ExplicitModule& m, int k);
ExplicitModule ext_module(const ExplicitModule& m, int k);

// Basis relabeling helper (labels only; structure untouched).
ExplicitModule relabel(const ExplicitModule& m, const std::vector<std::string>& labels);

// Highest-weight-vector space at lambda: the weight slice intersected with the
// kernels of all raising operators.
struct HwvSpace {
  Weight lambda;
  long long ambient_multiplicity = 0;  // multiplicity of lambda (0 = absent)
  std::vector<int> slice;              // ambient indices of the weight slice
  // each vector: sparse coefficients over ambient basis indices
  std::vector<std::map<int, QI>> basis;
};

HwvSpace highest_weight_space(const ExplicitModule& m, const Weight& lambda);
std::set<std::string> support_monomials(const ExplicitModule& m, const HwvSpace& h);

// Exact kernel of a dense matrix over Q(i); columns of the result form a
// basis, reduced with deterministic pivoting.
std::vector<std::vector<QI>> kernel_basis(const std::vector<std::vector<QI>>& mat);
int rank_of(const std::vector<std::vector<QI>>& mat);

}  // namespace chss
