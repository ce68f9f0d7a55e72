#include "chss/explicit_module.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace chss {

void SparseMat::add(int i, int j, const QI& v) {
  if (v.is_zero()) return;
  for (auto& [r, x] : col[j]) {
    if (r == i) {
      x += v;
      if (x.is_zero()) {
        auto& c = col[j];
        c.erase(std::remove_if(c.begin(), c.end(), [&](const auto& p) { return p.second.is_zero(); }), c.end());
      }
      return;
    }
  }
  col[j].emplace_back(i, v);
}

QI SparseMat::get(int i, int j) const {
  for (const auto& [r, x] : col[j])
    if (r == i) return x;
  return QI();
}

std::map<int, QI> SparseMat::apply(const std::map<int, QI>& v) const {
  std::map<int, QI> out;
  for (const auto& [j, x] : v) {
    for (const auto& [i, m] : col[j]) {
      QI& slot = out[i];
      slot += m * x;
      if (slot.is_zero()) out.erase(i);
    }
  }
  return out;
}

SparseMat SparseMat::transpose_negate() const {
  SparseMat t = SparseMat::zero(cols, rows);
  for (int j = 0; j < cols; ++j)
    for (const auto& [i, v] : col[j]) t.col[i].emplace_back(j, -v);
  return t;
}

SparseMat commutator(const SparseMat& a, const SparseMat& b) {
  SparseMat r = SparseMat::zero(a.rows, b.cols);
  // ab - ba, column by column
  for (int j = 0; j < r.cols; ++j) {
    std::map<int, QI> ej{{j, QI(1)}};
    auto ab = a.apply(b.apply(ej));
    auto ba = b.apply(a.apply(ej));
    for (const auto& [i, v] : ab) r.add(i, j, v);
    for (const auto& [i, v] : ba) r.add(i, j, -v);
  }
  return r;
}

bool SparseMat::equals_diagonal(const std::vector<QI>& d) const {
  for (int j = 0; j < cols; ++j) {
    QI diag;
    for (const auto& [i, v] : col[j]) {
      if (i == j)
        diag = v;
      else if (!v.is_zero())
        return false;
    }
    if (diag != d[j]) return false;
  }
  return true;
}

FormalCharacter ExplicitModule::character() const {
  FormalCharacter chi;
  for (const auto& w : weights) add_to(chi, w, 1);
  return chi;
}

int ExplicitModule::index_of(const std::string& label) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return (int)i;
  return -1;
}

void ExplicitModule::check_structure() const {
  for (size_t f = 0; f < raising.size(); ++f) {
    for (size_t i = 0; i < raising[f].size(); ++i) {
      std::vector<QI> h(dim());
      for (int b = 0; b < dim(); ++b) h[b] = QI(Rat(weights[b].coords[f][i]));
      SparseMat c = commutator(raising[f][i], lowering[f][i]);
      if (!c.equals_diagonal(h))
        throw std::runtime_error("ExplicitModule: [e,f] != h at factor " + std::to_string(f) + " node " + std::to_string(i));
    }
  }
}

ExplicitModule dual_module(const ExplicitModule& m) {
  ExplicitModule d;
  d.rank = m.rank;
  d.labels = m.labels;  // canonical identification; context tells dual apart
  d.weights.reserve(m.dim());
  for (const auto& w : m.weights) d.weights.push_back(-w);
  d.raising.resize(m.raising.size());
  d.lowering.resize(m.lowering.size());
  // rho*(x) = -rho(x)^T; the transpose of a raising operator still raises the
  // (negated) weights
  for (size_t f = 0; f < m.raising.size(); ++f) {
    for (size_t i = 0; i < m.raising[f].size(); ++i) {
      d.raising[f].push_back(m.raising[f][i].transpose_negate());
      d.lowering[f].push_back(m.lowering[f][i].transpose_negate());
    }
  }
  return d;
}

namespace {

ExplicitModule make_like(const ExplicitModule& proto, int dim) {
  ExplicitModule m;
  m.rank = proto.rank;
  m.raising.resize(proto.raising.size());
  m.lowering.resize(proto.lowering.size());
  for (size_t f = 0; f < proto.raising.size(); ++f) {
    for (size_t i = 0; i < proto.raising[f].size(); ++i) {
      m.raising[f].push_back(SparseMat::zero(dim, dim));
      m.lowering[f].push_back(SparseMat::zero(dim, dim));
    }
  }
  return m;
}

}  // namespace

ExplicitModule tensor_module(const ExplicitModule& a, const ExplicitModule& b) {
  if (!(a.rank == b.rank)) throw std::invalid_argument("tensor_module: rank mismatch");
  int da = a.dim(), db = b.dim();
  ExplicitModule t = make_like(a, da * db);
  auto idx = [&](int i, int j) { return i * db + j; };
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) {
      t.labels.push_back(a.labels[i] + "|" + b.labels[j]);
      t.weights.push_back(a.weights[i] + b.weights[j]);
    }
  for (size_t f = 0; f < a.raising.size(); ++f)
    for (size_t n = 0; n < a.raising[f].size(); ++n) {
      auto act = [&](const SparseMat& opa, const SparseMat& opb, SparseMat& dst) {
        for (int j = 0; j < da; ++j)
          for (const auto& [i, v] : opa.col[j])
            for (int y = 0; y < db; ++y) dst.add(idx(i, y), idx(j, y), v);
        for (int j = 0; j < db; ++j)
          for (const auto& [i, v] : opb.col[j])
            for (int x = 0; x < da; ++x) dst.add(idx(x, i), idx(x, j), v);
      };
      act(a.raising[f][n], b.raising[f][n], t.raising[f][n]);
      act(a.lowering[f][n], b.lowering[f][n], t.lowering[f][n]);
    }
  return t;
}

namespace {

void enumerate_multisets(int n, int k, std::vector<std::vector<int>>& out) {
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
}

void enumerate_subsets(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(k);
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur[pos] = v;
      rec(pos + 1, v + 1);
    }
  };
  if (k == 0)
    out.push_back({});
  else
    rec(0, 0);
}

std::string multiset_label(const ExplicitModule& m, const std::vector<int>& ms) {
  std::string s;
  for (int i : ms) s += m.labels[i];
  return s;
}

}  // namespace

ExplicitModule sym_module(const ExplicitModule& m, int k) {
  if (k < 0) throw std::invalid_argument("sym_module: negative power");
  std::vector<std::vector<int>> basis;
  enumerate_multisets(m.dim(), k, basis);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = (int)i;

  ExplicitModule s = make_like(m, (int)basis.size());
  for (const auto& ms : basis) {
    s.labels.push_back(multiset_label(m, ms));
    Weight w = Weight::zero(m.rank);
    for (int i : ms) w = w + m.weights[i];
    s.weights.push_back(w);
  }
  // derivation action on commutative monomials
  for (size_t f = 0; f < m.raising.size(); ++f)
    for (size_t n = 0; n < m.raising[f].size(); ++n) {
      auto act = [&](const SparseMat& op, SparseMat& dst) {
        for (size_t bi = 0; bi < basis.size(); ++bi) {
          const auto& ms = basis[bi];
          for (size_t p = 0; p < ms.size(); ++p) {
            if (p > 0 && ms[p] == ms[p - 1]) continue;  // distinct entries once
            int count = 0;
            for (int q : ms)
              if (q == ms[p]) ++count;
            for (const auto& [img, v] : op.col[ms[p]]) {
              auto t = ms;
              t[p] = img;
              std::sort(t.begin(), t.end());
              dst.add(index.at(t), (int)bi, v * QI(count));
            }
          }
        }
      };
      act(m.raising[f][n], s.raising[f][n]);
      act(m.lowering[f][n], s.lowering[f][n]);
    }
  return s;
}

ExplicitModule ext_module(const ExplicitModule& m, int k) {
  if (k < 0) throw std::invalid_argument("ext_module: negative power");
  std::vector<std::vector<int>> basis;
  enumerate_subsets(m.dim(), k, basis);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = (int)i;

  ExplicitModule s = make_like(m, (int)basis.size());
  for (const auto& ss : basis) {
    s.labels.push_back(multiset_label(m, ss));
    Weight w = Weight::zero(m.rank);
    for (int i : ss) w = w + m.weights[i];
    s.weights.push_back(w);
  }
  for (size_t f = 0; f < m.raising.size(); ++f)
    for (size_t n = 0; n < m.raising[f].size(); ++n) {
      auto act = [&](const SparseMat& op, SparseMat& dst) {
        for (size_t bi = 0; bi < basis.size(); ++bi) {
          const auto& ss = basis[bi];
          for (size_t p = 0; p < ss.size(); ++p) {
            for (const auto& [img, v] : op.col[ss[p]]) {
              // wedge in img at slot p, reorder with sign
              if (std::find(ss.begin(), ss.end(), img) != ss.end()) continue;
              auto t = ss;
              t[p] = img;
              int sign = 1;
              for (size_t x = 0; x + 1 < t.size(); ++x)
                for (size_t y = 0; y + 1 < t.size() - x; ++y)
                  if (t[y] > t[y + 1]) {
                    std::swap(t[y], t[y + 1]);
                    sign = -sign;
                  }
              dst.add(index.at(t), (int)bi, v * QI(sign));
            }
          }
        }
      };
      act(m.raising[f][n], s.raising[f][n]);
      act(m.lowering[f][n], s.lowering[f][n]);
    }
  return s;
}

ExplicitModule relabel(const ExplicitModule& m, const std::vector<std::string>& labels) {
  if (labels.size() != m.labels.size()) throw std::invalid_argument("relabel: size mismatch");
  ExplicitModule r = m;
  r.labels = labels;
  return r;
}

int rank_of(const std::vector<std::vector<QI>>& mat) {
  auto a = mat;
  int rows = (int)a.size();
  if (rows == 0) return 0;
  int cols = (int)a[0].size();
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (!a[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    QI d = a[rank][c];
    for (int j = c; j < cols; ++j) a[rank][j] /= d;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][c].is_zero()) continue;
      QI f = a[r][c];
      for (int j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<QI>> kernel_basis(const std::vector<std::vector<QI>>& mat) {
  auto a = mat;
  int rows = (int)a.size();
  int cols = rows == 0 ? 0 : (int)a[0].size();
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (!a[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    QI d = a[rank][c];
    for (int j = c; j < cols; ++j) a[rank][j] /= d;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][c].is_zero()) continue;
      QI f = a[r][c];
      for (int j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<QI>> kb;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<QI> v(cols);
    v[c] = QI(1);
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -a[r][c];
    kb.push_back(std::move(v));
  }
  return kb;
}

HwvSpace highest_weight_space(const ExplicitModule& m, const Weight& lambda) {
  HwvSpace h;
  h.lambda = lambda;
  for (int i = 0; i < m.dim(); ++i)
    if (m.weights[i] == lambda) h.slice.push_back(i);
  if (h.slice.empty()) return h;

  // rows: one per (raising op, reached ambient index); cols: slice entries
  std::vector<std::vector<QI>> rows;
  for (size_t f = 0; f < m.raising.size(); ++f) {
    for (size_t n = 0; n < m.raising[f].size(); ++n) {
      std::map<int, std::vector<QI>> by_target;
      for (size_t c = 0; c < h.slice.size(); ++c) {
        for (const auto& [i, v] : m.raising[f][n].col[h.slice[c]]) {
          auto& row = by_target[i];
          row.resize(h.slice.size());
          row[c] += v;
        }
      }
      for (auto& [i, row] : by_target) {
        row.resize(h.slice.size());
        rows.push_back(row);
      }
    }
  }
  std::vector<std::vector<QI>> kb =
      rows.empty() ? std::vector<std::vector<QI>>() : kernel_basis(rows);
  if (rows.empty()) {
    for (size_t c = 0; c < h.slice.size(); ++c) {
      std::vector<QI> v(h.slice.size());
      v[c] = QI(1);
      kb.push_back(v);
    }
  }
  for (const auto& v : kb) {
    std::map<int, QI> sparse;
    for (size_t c = 0; c < v.size(); ++c)
      if (!v[c].is_zero()) sparse[h.slice[c]] = v[c];
    h.basis.push_back(std::move(sparse));
  }
  h.ambient_multiplicity = (long long)h.basis.size();
  return h;
}

std::set<std::string> support_monomials(const ExplicitModule& m, const HwvSpace& h) {
  std::set<std::string> out;
  for (const auto& v : h.basis)
    for (const auto& [i, c] : v) {
      (void)c;
      out.insert(m.labels[i]);
    }
  return out;
}

}  // namespace chss
