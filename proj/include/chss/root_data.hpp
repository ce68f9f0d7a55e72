#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "chss/weight.hpp"

namespace chss {

// Root data for one simple factor of type A or D, Bourbaki numbering.
struct FactorRootData {
  SimpleFactor factor;
  std::vector<std::vector<int>> cartan;      // C[i][j] = <alpha_i, alpha_j^vee>
  std::vector<std::vector<Rat>> cartan_inv;  // exact inverse
  // positive roots, each stored in simple-root coordinates k and
  // fundamental-weight coordinates f = C*k (simply laced: coroot functional = k)
  struct Root {
    std::vector<int> simple_coords;
    std::vector<int> fund_coords;
  };
  std::vector<Root> positive_roots;
  std::vector<int> rho;  // (1,...,1)

  // <lambda, alpha^vee> for a positive root given in simple-root coords
  long long coroot_pairing(const std::vector<int>& lam, const Root& r) const;
  // W-invariant form normalized to <alpha,alpha> = 2, fundamental coords.
  Rat form(const std::vector<int>& a, const std::vector<int>& b) const;
  // -w0 action on fundamental coordinates (duality involution)
  std::vector<int> dual_coords(const std::vector<int>& lam) const;
};

struct RootData {
  ReductiveRank rank;
  std::vector<FactorRootData> factors;

  Weight rho() const;
  Weight dual_weight(const Weight& w) const;  // highest weight of the dual module
};

// Rejects unsupported series/rank combinations (D requires rank >= 3).
RootData build_root_data(const ReductiveRank& rk);

// Reflects w into the dominant chamber using the rho-shifted algorithm: returns
// nothing when w + rho hits a wall, otherwise the dominant representative
// (unshifted) together with the sign of the Weyl element used.
std::optional<std::pair<Weight, int>> to_dominant_with_sign(const RootData& rd, const Weight& w);

bool is_dominant(const Weight& w);

}  // namespace chss
