#include "chss/orchestrator.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace chss {

namespace {

std::vector<std::vector<int>> multiset_basis(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k);
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur[pos] = v;
      rec(pos + 1, v);
    }
  };
  if (k == 0)
    out.push_back({});
  else
    rec(0, 0);
  return out;
}

}  // namespace

int CoeffModule::index_of(const CoeffSlot& s) const {
  auto it = std::lower_bound(sym_basis.begin(), sym_basis.end(), s.tangent);
  if (it == sym_basis.end() || *it != s.tangent) throw std::invalid_argument("CoeffModule: unknown tangent multiset");
  int si = (int)(it - sym_basis.begin());
  return si * a + s.normal;
}

CoeffSlot CoeffModule::slot_of(int idx) const {
  CoeffSlot s;
  s.normal = idx % a;
  s.tangent = sym_basis[idx / a];
  return s;
}

CoeffModule build_coeff_module(const Model& m, int k) {
  CoeffModule c;
  c.k = k;
  c.n = m.n;
  c.a = m.a;
  c.sym_basis = multiset_basis(m.n, k);
  ExplicitModule sym = sym_module(dual_module(m.T), k);
  c.mod = tensor_module(sym, m.N);
  // labels r^{mu}_{multiset}
  std::vector<std::string> labels(c.mod.dim());
  for (int i = 0; i < c.mod.dim(); ++i) {
    CoeffSlot s = c.slot_of(i);
    std::string t;
    for (int x : s.tangent) t += m.T.labels[x];
    labels[i] = "r^{" + m.N.labels[s.normal] + "}_{" + t + "}";
  }
  c.mod = relabel(c.mod, labels);
  return c;
}

IrrSum decompose_product(const RootData& rd, const FormalCharacter& a, const FormalCharacter& b) {
  return decompose(rd, char_product(a, b));
}

namespace {

Weight adjoint_weight(const RootData& rd, size_t factor) {
  Weight w = Weight::zero(rd.rank);
  const auto& pr = rd.factors[factor].positive_roots;
  size_t best = 0;
  long long best_h = -1;
  for (size_t i = 0; i < pr.size(); ++i) {
    long long h = 0;
    for (int v : pr[i].simple_coords) h += v;
    if (h > best_h) {
      best_h = h;
      best = i;
    }
  }
  w.coords[factor] = pr[best].fund_coords;
  return w;
}

int charge_rank(const ExplicitModule& X) {
  // rank of the set of charge vectors over Q
  std::vector<std::vector<Rat>> rows;
  for (const auto& w : X.weights) rows.push_back(w.charges);
  int rank = 0;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  std::vector<size_t> used;
  for (size_t c = 0; c < cols; ++c) {
    int piv = -1;
    for (size_t r = rank; r < rows.size(); ++r)
      if (rows[r][c] != 0) {
        piv = (int)r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[rank]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if ((int)r == rank || rows[r][c] == 0) continue;
      Rat f = rows[r][c] / rows[rank][c];
      for (size_t j = 0; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
    if ((size_t)rank == rows.size()) break;
  }
  return rank;
}

void remove_copy(IrrSum& s, const Weight& w, const std::string& what) {
  auto it = s.find(w);
  if (it == s.end() || it->second < 1)
    throw std::runtime_error("consistency error: expected constituent " + what + " absent from the decomposition");
  if (--it->second == 0) s.erase(it);
}

}  // namespace

IrrSum complement_in_endo(const RootData& rd, const ExplicitModule& X, bool require_adjoints) {
  FormalCharacter cx = X.character();
  FormalCharacter cxd;
  for (const auto& [w, mlt] : cx) add_to(cxd, -w, mlt);
  IrrSum s = decompose(rd, char_product(cx, cxd));
  for (size_t f = 0; f < rd.factors.size(); ++f) {
    Weight ad = adjoint_weight(rd, f);
    auto it = s.find(ad);
    if (it == s.end()) {
      if (require_adjoints)
        throw std::runtime_error("complement: adjoint of factor " + std::to_string(f) + " absent");
      continue;  // factor acts trivially on X
    }
    remove_copy(s, ad, "adjoint");
  }
  Weight triv = Weight::zero(rd.rank);
  int ncharges = charge_rank(X);
  for (int i = 0; i < ncharges; ++i) remove_copy(s, triv, "trivial (center)");
  return s;
}

IrrSum t_tensor_nstar(const Model& m) {
  FormalCharacter cn = m.N.character(), cnd;
  for (const auto& [w, mlt] : cn) add_to(cnd, -w, mlt);
  return decompose(m.rd, char_product(m.T.character(), cnd));
}

Weight highest_weight_of(const RootData& rd, const ExplicitModule& X) {
  IrrSum s = decompose(rd, X.character());
  if (s.size() != 1 || s.begin()->second != 1) throw std::runtime_error("highest_weight_of: module not irreducible");
  return s.begin()->first;
}

Weight ndual_weight(const Model& m) {
  Weight hw = highest_weight_of(m.rd, m.N);
  return m.rd.dual_weight(hw);  // charges negate: -2
}

IrrSum tn_star_complement(const Model& m) {
  IrrSum s = t_tensor_nstar(m);
  // remove one copy of each T*-type constituent (the duals of the T-components)
  IrrSum tcomp = decompose(m.rd, m.T.character());
  for (const auto& [w, mlt] : tcomp) {
    (void)mlt;
    remove_copy(s, m.rd.dual_weight(w), "T* inside T⊗N*");
  }
  return s;
}

IrrSum sk_tstar(const Model& m, int k) {
  FormalCharacter ct = m.T.character(), ctd;
  for (const auto& [w, mlt] : ct) add_to(ctd, -w, mlt);
  return decompose(m.rd, sym_power(m.rd, ctd, k));
}

IrrSum sk_tstar_n(const Model& m, int k) {
  FormalCharacter ct = m.T.character(), ctd;
  for (const auto& [w, mlt] : ct) add_to(ctd, -w, mlt);
  return decompose(m.rd, char_product(sym_power(m.rd, ctd, k), m.N.character()));
}

std::string CartanName::to_string() const {
  std::string s;
  for (const auto& [g, p] : parts) {
    if (!s.empty()) s += " ";
    s += g;
    if (p > 1) s += "^" + std::to_string(p);
  }
  return s.empty() ? "1" : s;
}

namespace {

struct Generators {
  std::vector<std::pair<std::string, Weight>> gens;
};

Generators naming_generators(const Model& m) {
  Generators g;
  IrrSum tcomp = decompose(m.rd, m.T.character());
  int idx = 0;
  for (const auto& [w, mlt] : tcomp) {
    (void)mlt;
    std::string nm = tcomp.size() == 1 ? "T" : (idx == 0 ? "U" : "W");
    g.gens.emplace_back(nm, w);
    g.gens.emplace_back(nm + "*", m.rd.dual_weight(w));
    ++idx;
  }
  Weight hn = highest_weight_of(m.rd, m.N);
  g.gens.emplace_back("N", hn);
  g.gens.emplace_back("N*", m.rd.dual_weight(hn));
  return g;
}

bool name_search(const Generators& g, size_t gi, Weight rest, std::vector<int>& counts) {
  // all generator coords are nonneg; prune on negative coordinates
  for (const auto& c : rest.coords)
    for (int v : c)
      if (v < 0) return false;
  if (gi == g.gens.size()) {
    for (const auto& c : rest.coords)
      for (int v : c)
        if (v != 0) return false;
    for (const auto& q : rest.charges)
      if (q != 0) return false;
    return true;
  }
  // bound the count of this generator by the coordinates it must fit in
  int bound = 24;
  const Weight& hw = g.gens[gi].second;
  for (size_t f = 0; f < hw.coords.size(); ++f)
    for (size_t i = 0; i < hw.coords[f].size(); ++i)
      if (hw.coords[f][i] > 0) bound = std::min<int>(bound, rest.coords[f][i] / hw.coords[f][i]);
  for (int c = 0; c <= bound; ++c) {
    counts.push_back(c);
    Weight r2 = rest;
    for (int t = 0; t < c; ++t) r2 = r2 - hw;
    if (name_search(g, gi + 1, r2, counts)) return true;
    counts.pop_back();
  }
  return false;
}

}  // namespace

std::optional<CartanName> cartan_name(const Model& m, const Weight& w) {
  Generators g = naming_generators(m);
  std::vector<int> counts;
  if (!name_search(g, 0, w, counts)) return std::nullopt;
  CartanName n;
  for (size_t i = 0; i < counts.size(); ++i)
    if (counts[i] > 0) n.parts.emplace_back(g.gens[i].first, counts[i]);
  return n;
}

bool is_ndual_multiple(const Model& m, const Weight& w) {
  Weight rest = w - ndual_weight(m);
  Generators g = naming_generators(m);
  std::vector<int> counts;
  return name_search(g, 0, rest, counts);
}

IrrSum occurrence_filter_set(const Model& m, int k) {
  FormalCharacter ctd;
  for (const auto& [w, mlt] : m.T.character()) add_to(ctd, -w, mlt);
  if (k == 3) {
    IrrSum tt = complement_in_endo(m.rd, m.T, true);
    IrrSum nn = complement_in_endo(m.rd, m.N, false);
    IrrSum out;
    for (const auto& part : {tt, nn}) {
      if (part.empty()) continue;
      FormalCharacter pc = irrsum_character(m.rd, part);
      IrrSum d = decompose(m.rd, char_product(pc, ctd));
      for (const auto& [w, mlt] : d) out[w] += mlt;
    }
    return out;
  }
  if (k == 4) {
    IrrSum comp = tn_star_complement(m);
    FormalCharacter pc = irrsum_character(m.rd, comp);
    return decompose(m.rd, char_product(pc, ctd));
  }
  throw std::invalid_argument("occurrence_filter_set: k must be 3 or 4");
}

int component_classes(const Model& m, const IrrSum& s) {
  if (!m.swap_involution) {
    int c = 0;
    for (const auto& [w, mlt] : s) {
      (void)w;
      c += (int)mlt;
    }
    return c;
  }
  // count orbits (weights with multiplicity; the swap preserves multiplicity)
  std::set<Weight> seen;
  int classes = 0;
  for (const auto& [w, mlt] : s) {
    if (seen.count(w)) continue;
    Weight sw = (*m.swap_involution)(w);
    seen.insert(w);
    seen.insert(sw);
    classes += (int)mlt;
  }
  return classes;
}

// ---------------------------------------------------------------------------
// weight-graded span closure over the dual coefficient module
namespace {

struct GradedSpan {
  // per weight: echelonized sparse rows (pivot = smallest index)
  std::map<Weight, std::vector<std::map<int, QI>>> rows;

  // reduce v against the stored rows of its weight; returns true if v added
  bool insert(const Weight& w, std::map<int, QI> v) {
    auto& bucket = rows[w];
    for (const auto& r : bucket) {
      if (v.empty()) break;
      int piv = r.begin()->first;
      auto it = v.find(piv);
      if (it == v.end()) continue;
      QI f = it->second / r.begin()->second;
      for (const auto& [i, x] : r) {
        QI& slot = v[i];
        slot -= f * x;
        if (slot.is_zero()) v.erase(i);
      }
    }
    if (v.empty()) {
      if (bucket.empty()) rows.erase(w);
      return false;
    }
    // normalize leading coefficient to 1
    QI lead = v.begin()->second;
    for (auto& [i, x] : v) x /= lead;
    // keep rows sorted by pivot for determinism
    auto pos = std::lower_bound(bucket.begin(), bucket.end(), v,
                                [](const std::map<int, QI>& a, const std::map<int, QI>& b) {
                                  return a.begin()->first < b.begin()->first;
                                });
    bucket.insert(pos, std::move(v));
    return true;
  }
};

}  // namespace

namespace {

struct EliminationEngine {
  const Model& m;
  const CoeffModule& cm;
  ExplicitModule dual;  // dual of the coefficient module
  std::set<CoeffSlot> vanished;

  EliminationEngine(const Model& model, const CoeffModule& coeff, std::set<CoeffSlot> z)
      : m(model), cm(coeff), dual(dual_module(coeff.mod)), vanished(std::move(z)) {}

  bool support_test(const Weight& lambda, std::string& evidence) {
    HwvSpace h = highest_weight_space(cm.mod, lambda);
    if (h.ambient_multiplicity == 0) {
      evidence = "component absent (zero multiplicity)";
      return false;
    }
    std::set<std::string> missing;
    bool ok = true;
    for (const auto& v : h.basis)
      for (const auto& [i, c] : v) {
        (void)c;
        if (!vanished.count(cm.slot_of(i))) {
          ok = false;
          missing.insert(cm.mod.labels[i]);
        }
      }
    if (ok) {
      std::string slots;
      int cnt = 0;
      for (const auto& v : h.basis)
        for (const auto& [i, c] : v) {
          (void)c;
          if (cnt++ < 6) slots += (slots.empty() ? "" : ", ") + cm.mod.labels[i];
        }
      evidence = "hwv support {" + slots + "} inside the certified vanishing set";
      return true;
    }
    evidence = "support not covered; first offending monomial " + *missing.begin();
    return false;
  }

  // closure of the R-module generated by the vanished-slot functionals
  GradedSpan closure;
  bool closure_built = false;

  void build_closure() {
    if (closure_built) return;
    closure_built = true;
    std::deque<std::pair<Weight, std::map<int, QI>>> work;
    for (const auto& s : vanished) {
      int idx = cm.index_of(s);
      std::map<int, QI> v{{idx, QI(1)}};
      Weight w = dual.weights[idx];
      if (closure.insert(w, v)) work.emplace_back(w, std::move(v));
    }
    auto apply_ops = [&](const std::map<int, QI>& v) {
      for (size_t f = 0; f < dual.raising.size(); ++f)
        for (size_t i = 0; i < dual.raising[f].size(); ++i) {
          for (const SparseMat* op : {&dual.raising[f][i], &dual.lowering[f][i]}) {
            auto img = op->apply(v);
            if (img.empty()) continue;
            Weight w2 = dual.weights[img.begin()->first];
            std::map<int, QI> img2 = img;
            if (closure.insert(w2, img)) work.emplace_back(w2, std::move(img2));
          }
        }
    };
    while (!work.empty()) {
      auto [w, v] = work.front();
      (void)w;
      work.pop_front();
      apply_ops(v);
    }
  }

  // multiplicity of V(dual lambda) inside the closure span
  long long closure_mult(const Weight& lambda) {
    build_closure();
    Weight target = m.rd.dual_weight(lambda);
    auto it = closure.rows.find(target);
    if (it == closure.rows.end()) return 0;
    const auto& bucket = it->second;
    // basis of the slice spanned by the bucket; count kernel of the raisings
    std::vector<int> slice;
    std::map<int, int> pos;
    for (const auto& r : bucket)
      for (const auto& [i, c] : r) {
        (void)c;
        if (!pos.count(i)) {
          pos[i] = (int)slice.size();
          slice.push_back(i);
        }
      }
    int dim = (int)bucket.size();
    std::vector<std::vector<QI>> rows;
    for (size_t f = 0; f < dual.raising.size(); ++f)
      for (size_t i = 0; i < dual.raising[f].size(); ++i) {
        std::map<int, std::vector<QI>> by_target;
        for (int c = 0; c < dim; ++c) {
          auto img = dual.raising[f][i].apply(bucket[c]);
          for (const auto& [t, val] : img) {
            auto& row = by_target[t];
            row.resize(dim);
            row[c] += val;
          }
        }
        for (auto& [t, row] : by_target) {
          row.resize(dim);
          rows.push_back(row);
        }
      }
    if (rows.empty()) return dim;
    return (long long)kernel_basis(rows).size();
  }
};

}  // namespace

// ---------------------------------------------------------------------------

namespace {

struct BertiniRuns {
  VanishingSet all;
  std::vector<std::string> certificates;
};

void run_step(const Model& m, const BertiniStep& step, int max_order, const BertiniOptions& bo,
              BertiniRuns& runs, std::set<std::string>& seen) {
    std::string key = step.quadric_label + "|";
    for (const auto& l : step.span_labels) key += l + ",";
    key += std::to_string(max_order) + (bo.f3_established ? "+f3" : "");
    if (!seen.insert(key).second) return;
    VanishingSet vs = bertini_vanishings(m, step.quadric_label, step.span_labels, max_order, bo);
    for (auto& f : vs.families) runs.all.families.push_back(f);
    for (const auto& s : vs.to_strings(m)) runs.certificates.push_back(s);
}

// fallback: all weight quadrics with maximal coordinate spans inside
// Sing(q) ∩ Base
std::vector<BertiniStep> fallback_steps(const Model& m) {
  std::vector<BertiniStep> steps;
  for (int q = 0; q < m.a; ++q) {
    std::vector<int> cand;
    for (int t = 0; t < m.n; ++t) {
      std::vector<QI> v(m.n);
      v[t] = QI(1);
      if (!sing_contains(m.II_weight[q], v)) continue;
      if (!in_base_locus(m.II_weight, v)) continue;
      cand.push_back(t);
    }
    if (cand.empty()) continue;
    // greedy maximal subset keeping the span singular-and-base
    std::vector<int> chosen;
    std::vector<std::vector<QI>> vecs;
    for (int t : cand) {
      std::vector<QI> v(m.n);
      v[t] = QI(1);
      bool ok = true;
      for (const auto& u : vecs) {
        if (!m.II_weight[q].eval(u, v).is_zero()) ok = false;
        for (const auto& qq : m.II_weight)
          if (!qq.eval(u, v).is_zero()) ok = false;
        if (!ok) break;
      }
      if (!ok) continue;
      chosen.push_back(t);
      vecs.push_back(std::move(v));
    }
    if (chosen.empty()) continue;
    BertiniStep s;
    s.quadric_label = m.N.labels[q];
    for (int t : chosen) s.span_labels.push_back(m.T.labels[t]);
    steps.push_back(std::move(s));
  }
  return steps;
}

std::string wname(const Model& m, const Weight& w) {
  std::string s = weight_to_string(m.rank, w);
  auto nm = cartan_name(m, w);
  if (nm) s += " (" + nm->to_string() + ")";
  return s;
}

}  // namespace

RigidityReport rigidity_verdict(const Model& m, const PipelineOptions& opt) {
  RigidityReport rep;
  rep.model = m.name;
  rep.seed = opt.seed;
  rep.samples = opt.samples;
  rep.notes.push_back(m.conventions_note);

  bool f3_done = false;
  BertiniRuns runs;
  std::set<std::string> seen_steps;

  for (int k = 3; k <= 5; ++k) {
    OrderReport ord;
    ord.k = k;
    ord.decomposition = sk_tstar_n(m, k);
    IrrSum cand = ord.decomposition;

    // ---- frame normalization ------------------------------------------------
    if (k == 3) {
      IrrSum tn = t_tensor_nstar(m);
      for (const auto& [w, mlt] : tn) {
        for (long long c = 0; c < mlt; ++c) {
          remove_copy(cand, w, "T⊗N* constituent " + wname(m, w));
          ord.normalized_away.emplace_back(w, 1);
        }
      }
    } else if (k == 4) {
      Weight nd = ndual_weight(m);
      remove_copy(cand, nd, "N-translation copy " + wname(m, nd));
      ord.normalized_away.emplace_back(nd, 1);
    }
    ord.after_normalization = cand;
    ord.classes_after_normalization = component_classes(m, cand);

    IrrSum survivors = cand;
    auto eliminate = [&](const Weight& w, const std::string& reason, const std::string& ev) {
      Elimination e;
      e.weight = w;
      e.mult = survivors.at(w);
      e.reason = reason;
      e.evidence = ev;
      ord.eliminations.push_back(e);
      survivors.erase(w);
    };

    if (k == 5) {
      // a module can occur in F5 only if its simple-factor part is that of N
      // (or its dual); the comparison drops charges by design
      Weight hn = highest_weight_of(m.rd, m.N);
      auto nsl = sl_part(hn);
      auto ndsl = sl_part(m.rd.dual_weight(hn));
      std::vector<Weight> kill;
      for (const auto& [w, mlt] : survivors) {
        (void)mlt;
        auto s = sl_part(w);
        if (s != nsl && s != ndsl) kill.push_back(w);
      }
      for (const auto& w : kill)
        eliminate(w, "occurrence-filter", "S^5T*⊗N component does not match N as a simple-factor module");
      ord.filter_note = survivors.empty() ? "S^5T*⊗N contains no copy of N" : "copies of N remain";
      ord.survivors = survivors;
      rep.orders.push_back(std::move(ord));
      continue;
    }

    // ---- Bertini certificates ------------------------------------------------
    BertiniOptions bo;
    bo.seed = opt.seed;
    bo.samples = opt.samples;
    bo.f3_established = f3_done;
    for (const auto& step : m.curated_script) run_step(m, step, k, bo, runs, seen_steps);
    std::set<CoeffSlot> zslots = runs.all.slots(m, k);

    CoeffModule cm;
    bool cm_built = false;
    auto ensure_cm = [&]() {
      if (!cm_built) {
        cm = build_coeff_module(m, k);
        cm_built = true;
      }
    };

    // ---- stage 1: decomposably generated S^kT* factors ------------------------
    if (!zslots.empty() && !survivors.empty()) {
      ensure_cm();
      ExplicitModule symk = sym_module(dual_module(m.T), k);
      IrrSum symdec = sk_tstar(m, k);
      Weight hwN = highest_weight_of(m.rd, m.N);
      for (const auto& [sw, smlt] : symdec) {
        if (smlt != 1) continue;
        HwvSpace h = highest_weight_space(symk, sw);
        if (h.ambient_multiplicity != 1) continue;
        bool covered = true;
        for (const auto& v : h.basis)
          for (const auto& [i, c] : v) {
            (void)c;
            for (int mu = 0; mu < m.a && covered; ++mu) {
              CoeffSlot s;
              s.normal = mu;
              s.tangent = cm.sym_basis[i];
              if (!zslots.count(s)) covered = false;
            }
          }
        if (!covered) continue;
        IrrSum part = tensor_decompose(m.rd, sw, hwN);
        for (const auto& [w, mlt] : part) {
          auto it = survivors.find(w);
          if (it == survivors.end()) continue;
          if (ord.decomposition.at(w) != mlt) continue;  // not contained in this factor alone
          std::string tangles;
          for (const auto& v : h.basis)
            for (const auto& [i, c] : v) {
              (void)c;
              std::string t;
              for (int x : cm.sym_basis[i]) t += m.T.labels[x];
              if (tangles.find(t) == std::string::npos) tangles += (tangles.empty() ? "" : ", ") + t;
            }
          eliminate(w, "hwv-bertini",
                    "S^" + std::to_string(k) + "T* factor " + wname(m, sw) +
                        " is generated by the coefficient family {" + tangles +
                        "} which vanishes for every normal slot (part 1)");
        }
      }
    }

    // ---- stage 2: occurrence filter -------------------------------------------
    {
      IrrSum filter = occurrence_filter_set(m, k);
      if (k == 4) {
        IrrSum f2;
        for (const auto& [w, mlt] : filter)
          if (!is_ndual_multiple(m, w)) f2[w] = mlt;
        filter = f2;
        int common = 0;
        for (const auto& [w, mlt] : ord.after_normalization) {
          (void)mlt;
          if (is_ndual_multiple(m, w)) continue;
          if (filter.count(w)) ++common;
        }
        ord.filter_note = common == 0
                              ? "order-4 intersection modulo N* is empty"
                              : "order-4 intersection modulo N* has " + std::to_string(common) + " components";
      }
      std::vector<Weight> kill;
      std::vector<std::string> evs;
      for (const auto& [w, mlt] : survivors) {
        (void)mlt;
        bool ndm = (k == 4) && is_ndual_multiple(m, w);
        if (ndm) {
          kill.push_back(w);
          evs.push_back("Cartan multiple of N* discarded by the modulo-N* comparison");
        } else if (!filter.count(w)) {
          kill.push_back(w);
          evs.push_back(k == 3 ? "absent from (T⊗T*)^{rc}⊗T* ⊕ (N⊗N*)^{rc}⊗T*"
                               : "absent from (T⊗N*)^{T*c}⊗T* modulo N*");
        }
      }
      for (size_t i = 0; i < kill.size(); ++i) eliminate(kill[i], "occurrence-filter", evs[i]);
    }
    ord.survivors_after_filter = survivors;

    // ---- stage 3: per-component hwv support test -------------------------------
    if (!zslots.empty() && !survivors.empty()) {
      ensure_cm();
      EliminationEngine eng(m, cm, zslots);
      std::vector<Weight> kill;
      std::vector<std::string> evs;
      for (const auto& [w, mlt] : survivors) {
        (void)mlt;
        std::string ev;
        if (eng.support_test(w, ev)) {
          kill.push_back(w);
          evs.push_back(ev);
        }
      }
      for (size_t i = 0; i < kill.size(); ++i) eliminate(kill[i], "hwv-bertini", evs[i]);

      // ---- stage 4: closure elimination -----------------------------------------
      if (!survivors.empty() && opt.enable_closure) {
        std::vector<Weight> kill2;
        for (const auto& [w, mlt] : survivors)
          if (eng.closure_mult(w) == mlt) kill2.push_back(w);
        for (const auto& w : kill2)
          eliminate(w, "hwv-bertini",
                    "dual isotypic component lies in the R-module generated by the certified identities");
      }
    }

    // ---- fallback: widen the Bertini script and retry ---------------------------
    if (!survivors.empty() && opt.enable_fallback) {
      bool added = false;
      for (const auto& step : fallback_steps(m)) {
        size_t before = runs.all.families.size();
        try {
          run_step(m, step, k, bo, runs, seen_steps);
        } catch (const std::exception&) {
          continue;
        }
        if (runs.all.families.size() > before) added = true;
      }
      std::set<CoeffSlot> z2 = runs.all.slots(m, k);
      if (added && z2 != zslots && !survivors.empty()) {
        ensure_cm();
        EliminationEngine eng2(m, cm, z2);
        std::vector<Weight> kill;
        std::vector<std::string> evs;
        for (const auto& [w, mlt] : survivors) {
          (void)mlt;
          std::string ev;
          if (eng2.support_test(w, ev)) {
            kill.push_back(w);
            evs.push_back(ev + " (fallback script)");
          }
        }
        for (size_t i = 0; i < kill.size(); ++i) eliminate(kill[i], "hwv-bertini", evs[i]);
        if (!survivors.empty() && opt.enable_closure) {
          std::vector<Weight> kill2;
          for (const auto& [w, mlt] : survivors)
            if (eng2.closure_mult(w) == mlt) kill2.push_back(w);
          for (const auto& w : kill2)
            eliminate(w, "hwv-bertini",
                      "dual isotypic inside the R-module generated by the certified identities (fallback script)");
        }
      }
    }

    ord.survivors = survivors;
    if (k == 3) f3_done = survivors.empty();
    rep.orders.push_back(std::move(ord));
  }

  rep.bertini_certificates = runs.certificates;

  bool rigid = true;
  for (const auto& o : rep.orders)
    if (!o.survivors.empty()) rigid = false;
  rep.verdict = rigid ? "RIGID" : "INCOMPLETE";

  // dimension checks
  for (int k = 3; k <= 4; ++k) {
    Int lhs = irrsum_dimension(m.rd, rep.orders[k - 3].decomposition);
    Int tdim = Int(m.n);
    Int sk = 1;
    // dim S^k of an n-dim space = C(n+k-1, k)
    Int num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
      num *= Int(m.n + k - 1 - i);
      den *= Int(i + 1);
    }
    sk = num / den;
    Int expected = sk * Int(m.a);
    (void)tdim;
    rep.dimension_checks.push_back("dim S^" + std::to_string(k) + "T*⊗N = " + to_string(lhs) +
                                   (lhs == expected ? " == " : " != ") + to_string(expected));
    if (lhs != expected) rep.verdict = "INCOMPLETE";
  }
  return rep;
}

}  // namespace chss
