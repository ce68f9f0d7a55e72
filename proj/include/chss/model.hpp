#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chss/comp_algebra.hpp"
#include "chss/explicit_module.hpp"

namespace chss {

// Symmetric bilinear form B on the tangent space; q(v) = v^T B v.
struct Quadric {
  std::vector<std::vector<QI>> B;

  int dim() const { return (int)B.size(); }
  QI eval(const std::vector<QI>& v) const;                          // q(v,v)
  QI eval(const std::vector<QI>& v, const std::vector<QI>& w) const;  // polarized
};

// Polynomial chart: per normal coordinate, a polynomial in the tangent
// coordinates with exact coefficients (keys are sorted index multisets).
using Poly = std::map<std::vector<int>, QI>;

struct GraphChart {
  int n = 0;
  std::vector<std::string> normal_labels;
  std::vector<Poly> polys;
};

struct BertiniStep {
  std::string quadric_label;           // weight-basis normal label
  std::vector<std::string> span_labels;  // tangent weight-basis labels spanning L
};

struct Model {
  std::string name;
  int n = 0;  // dim T
  int a = 0;  // dim N
  ReductiveRank rank;
  RootData rd;

  ExplicitModule T, N;  // weight bases, charges T -> 1, N -> 2

  // coordinate presentation (identical to the weight basis for the
  // Grassmannian and spinor models)
  std::vector<std::string> tangent_coord_labels;
  std::vector<std::string> normal_coord_labels;
  std::vector<std::vector<QI>> T_weight_to_coord;  // columns: weight vectors in coords
  std::vector<std::vector<QI>> N_weight_to_coord;

  GraphChart chart;                 // in coordinate bases
  std::vector<Quadric> II_coord;    // indexed by normal_coord_labels
  std::vector<Quadric> II_weight;   // indexed by N.labels, tangent weight basis

  IrrSum r_in_TTstar, r_in_NNstar;  // the symmetry algebra inside T*T*, N*N*

  // Seg(P2xP2): weight involution of the disconnected symmetry; component
  // classes are orbits under it.
  std::optional<std::function<Weight(const Weight&)>> swap_involution;

  std::vector<BertiniStep> curated_script;
  std::string conventions_note;

  // Severi payload (unset otherwise)
  std::optional<CompAlgebra> algebra;
  std::vector<std::vector<QI>> null_frame_vectors;  // e1, e1bar, e2 in coords
  std::vector<std::string> null_frame_names;

  bool is_severi() const { return algebra.has_value(); }
  int tangent_weight_index(const std::string& label) const;
  int normal_weight_index(const std::string& label) const;
  std::vector<QI> tangent_coord_of_weight_vec(const std::map<int, QI>& wv) const;

  void check_ii_invariance() const;  // exact annihilation by every generator
};

// Registry names: G(2,m) for m >= 5, S10, Seg(P2xP2), G(2,6)_AP2, OP2.
// The quadric hypersurface is rejected with a message.
Model build_model(const std::string& name);
std::vector<std::string> model_registry_names();

// Builders (used by the registry; exposed for tests)
Model build_grassmannian(int m);
Model build_spinor10();
Model build_severi(int alg_dim);  // 2 -> Seg(P2xP2), 4 -> G(2,6)_AP2, 8 -> OP2

// Paper null frame of the Severi models: e1 = 1 + i*eps1, e1bar, e2 = 1 + i*eps2
// in the a-copy, each individually null (d >= 4 for e2).
struct NullFrame {
  std::vector<std::string> names;
  std::vector<std::vector<QI>> vectors_coord;  // tangent coordinate basis
};
NullFrame null_frame(const Model& model);

}  // namespace chss
