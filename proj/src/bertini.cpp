#include "chss/bertini.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace chss {

std::string slot_to_string(const Model& m, const CoeffSlot& s) {
  std::string t;
  for (int i : s.tangent) t += m.T.labels[i];
  return "r^{" + m.N.labels[s.normal] + "}_{" + t + "}";
}

std::set<CoeffSlot> VanishingFamily::materialize(const Model& m) const {
  std::set<CoeffSlot> out;
  int wild = order - fixed;
  std::vector<int> pick(fixed, 0);
  std::function<void(int, int, std::vector<int>&)> rec_fixed = [&](int pos, int start, std::vector<int>& acc) {
    if (pos == fixed) {
      // extend with `wild` arbitrary tangent indices
      std::vector<int> w(wild, 0);
      std::function<void(int, int)> rec_wild = [&](int wpos, int wstart) {
        if (wpos == wild) {
          CoeffSlot s;
          s.tangent = acc;
          s.tangent.insert(s.tangent.end(), w.begin(), w.end());
          std::sort(s.tangent.begin(), s.tangent.end());
          if (normal) {
            s.normal = *normal;
            out.insert(s);
          } else {
            for (int mu = 0; mu < m.a; ++mu) {
              s.normal = mu;
              out.insert(s);
            }
          }
          return;
        }
        for (int v = wstart; v < m.n; ++v) {
          w[wpos] = v;
          rec_wild(wpos + 1, v);
        }
      };
      rec_wild(0, 0);
      return;
    }
    for (size_t i = (pos == 0 ? 0 : start); i < span.size(); ++i) {
      acc.push_back(span[i]);
      rec_fixed(pos + 1, (int)i, acc);
      acc.pop_back();
    }
  };
  std::vector<int> acc;
  rec_fixed(0, 0, acc);
  return out;
}

std::string VanishingFamily::to_string(const Model& m) const {
  std::string t;
  for (size_t i = 0; i < span.size(); ++i) {
    if (i) t += ",";
    t += m.T.labels[span[i]];
  }
  std::string head = "r^{";
  head += normal ? m.N.labels[*normal] : std::string("mu");
  head += "}_{";
  for (int i = 0; i < fixed; ++i) head += "L";
  for (int i = fixed; i < order; ++i) head += "*";
  head += "} = 0";
  if (!normal) head += " for all mu";
  return head + " with L in <" + t + "> [" + provenance + "]";
}

std::set<CoeffSlot> VanishingSet::slots(const Model& m, int order) const {
  std::set<CoeffSlot> out;
  for (const auto& f : families) {
    if (f.order != order) continue;
    auto s = f.materialize(m);
    out.insert(s.begin(), s.end());
  }
  return out;
}

std::vector<std::string> VanishingSet::to_strings(const Model& m) const {
  std::vector<std::string> out;
  for (const auto& f : families) out.push_back(f.to_string(m));
  return out;
}

std::vector<std::vector<QI>> quadric_singular_space(const Quadric& q) {
  return kernel_basis(q.B);
}

bool in_base_locus(const std::vector<Quadric>& system, const std::vector<QI>& v) {
  for (const auto& q : system)
    if (!q.eval(v).is_zero()) return false;
  return true;
}

bool base_contains_span(const std::vector<Quadric>& system, const std::vector<std::vector<QI>>& vectors) {
  for (const auto& q : system)
    for (size_t i = 0; i < vectors.size(); ++i)
      for (size_t j = i; j < vectors.size(); ++j)
        if (!q.eval(vectors[i], vectors[j]).is_zero()) return false;
  return true;
}

bool sing_contains(const Quadric& q, const std::vector<QI>& v) {
  int n = q.dim();
  for (int j = 0; j < n; ++j) {
    QI s;
    for (int i = 0; i < n; ++i) s += q.B[i][j] * v[i];
    if (!s.is_zero()) return false;
  }
  return true;
}

int quadric_rank(const Quadric& q) { return rank_of(q.B); }

GenericityResult is_generic_quadric(const std::vector<Quadric>& system, int q_index,
                                    unsigned long long seed, int samples) {
  GenericityResult res;
  res.seed = seed;
  res.samples = samples;
  res.rank = quadric_rank(system[q_index]);
  res.max_rank_seen = res.rank;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  int n = system[0].dim();
  for (int s = 0; s < samples; ++s) {
    std::vector<Rat> coeff;
    Quadric q;
    q.B.assign(n, std::vector<QI>(n));
    for (const auto& sys_q : system) {
      Rat c((long long)dist(rng));
      coeff.push_back(c);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) q.B[i][j] += QI(c) * sys_q.B[i][j];
    }
    int r = quadric_rank(q);
    if (r > res.max_rank_seen) {
      res.max_rank_seen = r;
      res.witness = coeff;
    }
  }
  if (res.witness.empty()) {
    res.witness.assign(system.size(), Rat(0));
    res.witness[q_index] = Rat(1);
  }
  res.generic = (res.rank == res.max_rank_seen);
  return res;
}

VanishingSet bertini_vanishings(const Model& m, const std::string& quadric_label,
                                const std::vector<std::string>& span_labels, int max_order,
                                const BertiniOptions& opt) {
  int qi = m.normal_weight_index(quadric_label);
  std::vector<int> span;
  std::vector<std::vector<QI>> span_vecs;
  for (const auto& l : span_labels) {
    int ti = m.tangent_weight_index(l);
    span.push_back(ti);
    std::vector<QI> v(m.n);
    v[ti] = QI(1);
    span_vecs.push_back(std::move(v));
  }

  // hypotheses, checked exactly
  for (const auto& v : span_vecs)
    if (!sing_contains(m.II_weight[qi], v))
      throw std::invalid_argument("bertini: hypothesis failed: L not contained in Sing(q^{" + quadric_label + "})");
  // pairwise: L must be totally singular for q
  for (size_t i = 0; i < span_vecs.size(); ++i)
    for (size_t j = i; j < span_vecs.size(); ++j) {
      QI val = m.II_weight[qi].eval(span_vecs[i], span_vecs[j]);
      if (!val.is_zero())
        throw std::invalid_argument("bertini: hypothesis failed: span not singular for q^{" + quadric_label + "}");
    }
  if (!base_contains_span(m.II_weight, span_vecs))
    throw std::invalid_argument("bertini: hypothesis failed: L not contained in Base|II|");

  GenericityResult gen = is_generic_quadric(m.II_weight, qi, opt.seed, opt.samples);

  VanishingSet out;
  std::string lset;
  for (size_t i = 0; i < span_labels.size(); ++i) {
    if (i) lset += ",";
    lset += "e" + span_labels[i];
  }
  for (int k = 3; k <= max_order; ++k) {
    if (gen.generic) {
      VanishingFamily f;
      f.order = k;
      f.normal = std::nullopt;
      f.span = span;
      f.fixed = k;
      f.provenance = "Bertini part 1, q=q^{" + quadric_label + "} generic (rank " +
                     std::to_string(gen.rank) + " = max over " + std::to_string(gen.samples) +
                     " samples), L=<" + lset + ">";
      out.families.push_back(std::move(f));
    }
    if (k == 3) {
      VanishingFamily f;
      f.order = 3;
      f.normal = qi;
      f.span = span;
      f.fixed = 2;
      f.provenance = "Bertini part 2, q=q^{" + quadric_label + "}, L=<" + lset + ">";
      out.families.push_back(std::move(f));
    }
    if (k == 4 && opt.f3_established) {
      VanishingFamily f3;
      f3.order = 4;
      f3.normal = qi;
      f3.span = span;
      f3.fixed = 3;
      f3.provenance = "Bertini part 3, q=q^{" + quadric_label + "}, L'=<" + lset + "> (F3 = 0 recorded)";
      out.families.push_back(std::move(f3));
      VanishingFamily f4;
      f4.order = 4;
      f4.normal = qi;
      f4.span = span;
      f4.fixed = 2;
      f4.provenance = "Bertini part 4, q=q^{" + quadric_label + "}, L''=<" + lset + "> (F3 = 0: Sing(F3^q) is everything)";
      out.families.push_back(std::move(f4));
    }
  }
  return out;
}

}  // namespace chss
