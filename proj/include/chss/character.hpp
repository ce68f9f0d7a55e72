#pragma once

#include <map>
#include <vector>

#include "chss/root_data.hpp"

namespace chss {

// Finite multiset of weight-lattice points; nonzero integer multiplicities.
using FormalCharacter = std::map<Weight, long long>;

// Dominant highest weights with positive multiplicities.
using IrrSum = std::map<Weight, long long>;

void add_to(FormalCharacter& chi, const Weight& w, long long m);

Int char_mass(const FormalCharacter& chi);
FormalCharacter char_product(const FormalCharacter& a, const FormalCharacter& b);
FormalCharacter char_sum(const FormalCharacter& a, const FormalCharacter& b);

Int weyl_dimension(const RootData& rd, const Weight& lam);
Int irrsum_dimension(const RootData& rd, const IrrSum& s);

// Full weight multiset of the irreducible with highest weight lam (Freudenthal
// per factor, assembled across factors; every weight carries lam's charges).
FormalCharacter irr_character(const RootData& rd, const Weight& lam);

// Peel-highest-weight decomposition. The next weight to peel is the dominant
// support weight maximal for the dominance order; ties within an antichain are
// broken by (height, then lex) so reports are reproducible.
IrrSum decompose(const RootData& rd, const FormalCharacter& chi);

// Klimyk: accumulate reflected translates of wt(V_lam) around mu.
IrrSum tensor_decompose(const RootData& rd, const Weight& lam, const Weight& mu);

FormalCharacter adams(const FormalCharacter& chi, int k);
FormalCharacter sym_power(const RootData& rd, const FormalCharacter& chi, int k);
FormalCharacter ext_power(const RootData& rd, const FormalCharacter& chi, int k);
IrrSum sym_power_decompose(const RootData& rd, const Weight& lam, int k);

Weight cartan_component(const Weight& lam, const Weight& mu);

FormalCharacter irrsum_character(const RootData& rd, const IrrSum& s);

// Multiplicity of V(nu) in chi by the Weyl alternating sum; independent of the
// peel loop, used as a second route in tests and for single-component queries.
// Requires the product Weyl group to be enumerable (|W| capped).
long long mult_in_character(const RootData& rd, const FormalCharacter& chi, const Weight& nu);
bool weyl_enumerable(const RootData& rd, long long cap = 4000000);

}  // namespace chss
