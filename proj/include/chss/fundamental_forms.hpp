#pragma once

#include "chss/model.hpp"

namespace chss {

// Degree-k coefficients of a graph chart: map (normal label index, sorted
// tangent multi-index) -> coefficient, "coefficient of the monomial"
// convention.
struct FundForm {
  int order = 2;
  int n = 0;
  std::vector<std::string> normal_labels;
  std::map<std::pair<int, std::vector<int>>, QI> coeff;

  bool is_zero() const { return coeff.empty(); }
};

// k in {2,3,4}; absent coefficients are zero.
FundForm extract(const GraphChart& chart, int k);

// Full or partial polarized evaluation.  With k vectors: the normal-space
// value (one entry per normal label).  With j < k vectors: the residual form
// of order k - j.
std::vector<QI> evaluate(const FundForm& f, const std::vector<std::vector<QI>>& vectors);
FundForm partial_evaluate(const FundForm& f, const std::vector<std::vector<QI>>& vectors);

std::string fundform_to_string(const FundForm& f);

}  // namespace chss
