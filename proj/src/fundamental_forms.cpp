#include "chss/fundamental_forms.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chss {

FundForm extract(const GraphChart& chart, int k) {
  if (k < 2 || k > 4) throw std::invalid_argument("extract: order must be 2, 3 or 4");
  FundForm f;
  f.order = k;
  f.n = chart.n;
  f.normal_labels = chart.normal_labels;
  for (size_t mu = 0; mu < chart.polys.size(); ++mu)
    for (const auto& [key, c] : chart.polys[mu])
      if ((int)key.size() == k && !c.is_zero()) f.coeff[{(int)mu, key}] = c;
  return f;
}

namespace {

// multinomial coefficient of a sorted multi-index
Int monomial_symmetry(const std::vector<int>& key) {
  Int fact = 1;
  for (int i = 2; i <= (int)key.size(); ++i) fact *= i;
  Int rep = 1;
  int run = 1;
  for (size_t i = 1; i <= key.size(); ++i) {
    if (i < key.size() && key[i] == key[i - 1]) {
      ++run;
    } else {
      Int f = 1;
      for (int t = 2; t <= run; ++t) f *= t;
      rep *= f;
      run = 1;
    }
  }
  return fact / rep;
}

}  // namespace

FundForm partial_evaluate(const FundForm& f, const std::vector<std::vector<QI>>& vectors) {
  int j = (int)vectors.size();
  if (j > f.order) throw std::invalid_argument("evaluate: too many vectors");
  // Work with the symmetric tensor S: S_{i1..ik} = coeff(key) / multinomial(key).
  // Contracting j slots and re-collecting monomial coefficients keeps all
  // arithmetic exact.
  FundForm out;
  out.order = f.order - j;
  out.n = f.n;
  out.normal_labels = f.normal_labels;
  std::map<std::pair<int, std::vector<int>>, QI> acc;  // sym-tensor convention
  for (const auto& [slot, c] : f.coeff) {
    const auto& [mu, key] = slot;
    QI base = c / QI(Rat(monomial_symmetry(key), 1));
    // distribute: choose which j slots (with multiplicity) are contracted
    // enumerate ordered picks over distinct permutations via recursion on the
    // contracted multiset
    std::function<void(std::vector<int>, int, QI)> rec = [&](std::vector<int> rest, int step, QI val) {
      if (step == j) {
        std::sort(rest.begin(), rest.end());
        Int sym = monomial_symmetry(rest);
        auto k2 = std::make_pair(mu, rest);
        QI& slot2 = acc[k2];
        slot2 += val;
        return;
      }
      // contract one slot: for the symmetric tensor, rest determines the
      // contracted index uniquely, so each distinct pick contributes once
      for (size_t p = 0; p < rest.size(); ++p) {
        if (p > 0 && rest[p] == rest[p - 1]) continue;
        QI vi = vectors[step][rest[p]];
        if (vi.is_zero()) continue;
        std::vector<int> next = rest;
        next.erase(next.begin() + p);
        rec(next, step + 1, val * vi);
      }
    };
    rec(key, 0, base);
  }
  for (auto& [slot, v] : acc) {
    if (v.is_zero()) continue;
    QI monomial = v * QI(Rat(monomial_symmetry(slot.second), 1));
    out.coeff[slot] = monomial;
  }
  return out;
}

std::vector<QI> evaluate(const FundForm& f, const std::vector<std::vector<QI>>& vectors) {
  if ((int)vectors.size() != f.order) throw std::invalid_argument("evaluate: need exactly order-many vectors");
  FundForm r = partial_evaluate(f, vectors);
  std::vector<QI> out(f.normal_labels.size());
  for (const auto& [slot, c] : r.coeff) out[slot.first] = c;
  return out;
}

std::string fundform_to_string(const FundForm& f) {
  std::ostringstream os;
  for (const auto& [slot, c] : f.coeff) {
    os << f.normal_labels[slot.first] << ":";
    for (int i : slot.second) os << " " << i;
    os << " -> " << to_string(c) << "\n";
  }
  return os.str();
}

}  // namespace chss
