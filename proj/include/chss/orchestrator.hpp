#pragma once

#include "chss/bertini.hpp"

namespace chss {

// S^k T* ⊗ N as an explicit module with slot bookkeeping.
struct CoeffModule {
  int k = 0, n = 0, a = 0;
  ExplicitModule mod;  // sym(dual T, k) ⊗ N
  std::vector<std::vector<int>> sym_basis;

  int index_of(const CoeffSlot& s) const;
  CoeffSlot slot_of(int idx) const;
};
CoeffModule build_coeff_module(const Model& m, int k);

struct Elimination {
  Weight weight;
  long long mult = 1;
  std::string reason;    // normalized | occurrence-filter | hwv-bertini
  std::string evidence;
};

struct OrderReport {
  int k = 0;
  IrrSum decomposition;
  std::vector<std::pair<Weight, long long>> normalized_away;
  IrrSum after_normalization;
  int classes_after_normalization = 0;  // swap-orbit classes for Seg
  std::vector<Elimination> eliminations;
  IrrSum survivors_after_filter;  // state after normalization + factor-Bertini + filter
  IrrSum survivors;
  std::string filter_note;
};

struct RigidityReport {
  std::string model;
  std::string verdict;  // RIGID | INCOMPLETE
  std::vector<OrderReport> orders;
  std::vector<std::string> bertini_certificates;
  std::vector<std::string> dimension_checks;
  std::vector<std::string> notes;
  unsigned long long seed = 0;
  int samples = 0;
};

struct PipelineOptions {
  unsigned long long seed = 20240501;
  int samples = 32;
  bool enable_closure = true;
  bool enable_fallback = true;
};

RigidityReport rigidity_verdict(const Model& m, const PipelineOptions& opt = {});

// ---- building blocks (exposed for tests and the tables module) ------------

IrrSum decompose_product(const RootData& rd, const FormalCharacter& a, const FormalCharacter& b);

// (X ⊗ X*)^{r^c}: remove the adjoint of every simple factor acting on X and
// one trivial summand per independent central charge on X.
IrrSum complement_in_endo(const RootData& rd, const ExplicitModule& X, bool require_adjoints);

IrrSum t_tensor_nstar(const Model& m);                    // decompose(T ⊗ N*)
IrrSum tn_star_complement(const Model& m);                // (T ⊗ N*)^{T*c}
IrrSum sk_tstar(const Model& m, int k);                   // decompose(S^k T*)
IrrSum sk_tstar_n(const Model& m, int k);                 // decompose(S^k T* ⊗ N)
Weight highest_weight_of(const RootData& rd, const ExplicitModule& X);
Weight ndual_weight(const Model& m);                      // sl-dual of hw(N), charge -2

// Cartan naming over {T-components, their duals, N, N-dual}.
struct CartanName {
  std::vector<std::pair<std::string, int>> parts;  // (generator name, power)
  std::string to_string() const;
};
std::optional<CartanName> cartan_name(const Model& m, const Weight& w);
bool is_ndual_multiple(const Model& m, const Weight& w);

// order-k occurrence filter contents
IrrSum occurrence_filter_set(const Model& m, int k);

// Seg-aware class count of an IrrSum (orbit classes under the swap).
int component_classes(const Model& m, const IrrSum& s);

}  // namespace chss
