#pragma once

#include "chss/orchestrator.hpp"

namespace chss {

// Small expression grammar over a model's modules:
//   atoms:   T, T*, N, N*
//   product: ⊗ or x  (the '*' character is reserved for duals)
//   powers:  S<k>(...), L<k>(...) (exterior)
//   complements: (...)^frc on X⊗X*, (...)^T*c on T⊗N*
// Returns the decomposition into irreducibles.
IrrSum evaluate_expression(const Model& m, const std::string& expr);

}  // namespace chss
