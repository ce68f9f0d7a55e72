#pragma once

#include <optional>
#include <set>

#include "chss/model.hpp"

namespace chss {

// A coefficient slot of S^k T* ⊗ N in the weight bases: normal index plus a
// sorted tangent multi-index.
struct CoeffSlot {
  int normal = 0;
  std::vector<int> tangent;

  friend bool operator<(const CoeffSlot& a, const CoeffSlot& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.tangent < b.tangent;
  }
  friend bool operator==(const CoeffSlot& a, const CoeffSlot& b) {
    return a.normal == b.normal && a.tangent == b.tangent;
  }
};

std::string slot_to_string(const Model& m, const CoeffSlot& s);

// One family of vanishing identities, e.g. r^{45}_{(13)(13)*} = 0.
struct VanishingFamily {
  int order = 3;
  std::optional<int> normal;      // nullopt: all normal directions
  std::vector<int> span;          // tangent weight-basis indices spanning L
  int fixed = 2;                  // slots filled from the span
  std::string provenance;         // e.g. "Bertini part 2, q=q^{45}, L=<e(13)>"

  std::set<CoeffSlot> materialize(const Model& m) const;
  std::string to_string(const Model& m) const;
};

struct VanishingSet {
  std::vector<VanishingFamily> families;
  std::set<CoeffSlot> slots(const Model& m, int order) const;
  std::vector<std::string> to_strings(const Model& m) const;
};

// Exact kernel of the polarized form.
std::vector<std::vector<QI>> quadric_singular_space(const Quadric& q);

bool in_base_locus(const std::vector<Quadric>& system, const std::vector<QI>& v);
bool base_contains_span(const std::vector<Quadric>& system, const std::vector<std::vector<QI>>& vectors);
bool sing_contains(const Quadric& q, const std::vector<QI>& v);

int quadric_rank(const Quadric& q);

// Genericity by seeded max-rank sampling over the span of the system.
struct GenericityResult {
  bool generic = false;
  int rank = 0;
  int max_rank_seen = 0;
  int samples = 0;
  unsigned long long seed = 0;
  std::vector<Rat> witness;  // coefficients of a max-rank combination
};
GenericityResult is_generic_quadric(const std::vector<Quadric>& system, int q_index,
                                    unsigned long long seed, int samples = 32);

// Verifies the hypotheses of the higher-order Bertini parts exactly and emits
// the licensed identity families with provenance.  L must be spanned by
// weight-basis vectors (coefficient families are then coordinate slots).
//   part 1 (needs genericity): all orders <= max_order, all normal slots,
//          every multi-index from L;
//   part 2: order 3, q-slot, two slots from L;
//   parts 3/4 (order 4, need f3_zero): q-slot, three (resp. two) slots from L.
struct BertiniOptions {
  unsigned long long seed = 20240501;
  int samples = 32;
  bool f3_established = false;  // licenses parts 3 and 4 at order 4
};
VanishingSet bertini_vanishings(const Model& m, const std::string& quadric_label,
                                const std::vector<std::string>& span_labels, int max_order,
                                const BertiniOptions& opt = {});

}  // namespace chss
