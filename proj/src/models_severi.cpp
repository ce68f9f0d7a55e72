#include <algorithm>
#include <functional>
#include <stdexcept>

#include "chss/model.hpp"

namespace chss {

namespace {

using Mat = std::vector<std::vector<QI>>;

Mat mat_zero(int r, int c) { return Mat(r, std::vector<QI>(c)); }

Mat mat_mul(const Mat& a, const Mat& b) {
  int r = (int)a.size(), k = (int)b.size(), c = (int)b[0].size();
  Mat m = mat_zero(r, c);
  for (int i = 0; i < r; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (int j = 0; j < c; ++j) {
        if (b[t][j].is_zero()) continue;
        m[i][j] += a[i][t] * b[t][j];
      }
    }
  return m;
}

Mat mat_inverse(const Mat& m) {
  int n = (int)m.size();
  Mat a = m;
  Mat inv = mat_zero(n, n);
  for (int i = 0; i < n; ++i) inv[i][i] = QI(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::runtime_error("mat_inverse: singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    QI d = a[col][col];
    for (int j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      QI f = a[r][col];
      for (int j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

SparseMat to_sparse(const Mat& m) {
  SparseMat s = SparseMat::zero((int)m.size(), (int)m[0].size());
  for (int j = 0; j < s.cols; ++j)
    for (int i = 0; i < s.rows; ++i)
      if (!m[i][j].is_zero()) s.col[j].emplace_back(i, m[i][j]);
  return s;
}

// V = N* with covector coordinates (s, t, u_0..u_{d-1}) and the quadratic form
// Q*(s,t,u) = s t - N(u).  Elements are coefficient vectors of length d+2.
struct CliffordSpace {
  const CompAlgebra& A;
  int d;

  explicit CliffordSpace(const CompAlgebra& alg) : A(alg), d(alg.dim) {}

  QI bform(const std::vector<QI>& x, const std::vector<QI>& y) const {
    QI s = (x[0] * y[1] + y[0] * x[1]) * QI(Rat(1, 2));
    for (int k = 0; k < d; ++k) s -= x[2 + k] * y[2 + k];
    return s;
  }

  // gamma(xi): Delta+ -> Delta-, (a,b) -> (s a + u b, t b + conj(u) a)
  Mat gamma(const std::vector<QI>& xi) const {
    Mat g = mat_zero(2 * d, 2 * d);
    std::vector<QI> u(xi.begin() + 2, xi.end());
    auto uconj = A.conj(u);
    for (int i = 0; i < d; ++i) g[i][i] = xi[0];
    for (int i = 0; i < d; ++i) g[d + i][d + i] = xi[1];
    // u * b lands in the first slot, conj(u) * a in the second
    for (int j = 0; j < d; ++j) {
      auto img_b = A.multiply(u, A.basis(j));
      for (int i = 0; i < d; ++i) g[i][d + j] += img_b[i];
      auto img_a = A.multiply(uconj, A.basis(j));
      for (int i = 0; i < d; ++i) g[d + i][j] += img_a[i];
    }
    return g;
  }

  // gamma'(xi): Delta- -> Delta+, (x,y) -> (t x - u y, s y - conj(u) x)
  Mat gamma_prime(const std::vector<QI>& xi) const {
    Mat g = mat_zero(2 * d, 2 * d);
    std::vector<QI> u(xi.begin() + 2, xi.end());
    auto uconj = A.conj(u);
    for (int i = 0; i < d; ++i) g[i][i] = xi[1];
    for (int i = 0; i < d; ++i) g[d + i][d + i] = xi[0];
    for (int j = 0; j < d; ++j) {
      auto img_y = A.multiply(u, A.basis(j));
      for (int i = 0; i < d; ++i) g[i][d + j] -= img_y[i];
      auto img_x = A.multiply(uconj, A.basis(j));
      for (int i = 0; i < d; ++i) g[d + i][j] -= img_x[i];
    }
    return g;
  }

  // half-spin generator on T: gamma'(x) gamma(y) - B(x,y) id
  Mat sigma(const std::vector<QI>& x, const std::vector<QI>& y) const {
    Mat m = mat_mul(gamma_prime(x), gamma(y));
    QI b = bform(x, y);
    for (int i = 0; i < 2 * d; ++i) m[i][i] -= b;
    return m;
  }

  // so(V) generator on V: z -> 2 (B(y,z) x - B(x,z) y)
  Mat mgen(const std::vector<QI>& x, const std::vector<QI>& y) const {
    int n = d + 2;
    Mat m = mat_zero(n, n);
    for (int j = 0; j < n; ++j) {
      std::vector<QI> z(n);
      z[j] = QI(1);
      QI by = bform(y, z), bx = bform(x, z);
      for (int i = 0; i < n; ++i) m[i][j] = (by * x[i] - bx * y[i]) * QI(2);
    }
    return m;
  }

  // right multiplication by x on both copies (associative dims only)
  Mat rmul(const std::vector<QI>& x) const {
    Mat m = mat_zero(2 * d, 2 * d);
    for (int j = 0; j < d; ++j) {
      auto img = A.multiply(A.basis(j), x);
      for (int i = 0; i < d; ++i) {
        m[i][j] += img[i];
        m[d + i][d + j] += img[i];
      }
    }
    return m;
  }
};

// split a list of subspaces (columns-in-coordinates) by eigenvalue of op
void split_by_eigen(const Mat& op, const std::vector<Rat>& eigenvalues,
                    std::vector<Mat>& spaces) {
  std::vector<Mat> next;
  for (const auto& Vb : spaces) {
    int dim = (int)Vb[0].size();
    int n = (int)Vb.size();
    for (const auto& ev : eigenvalues) {
      // rows of (op - ev I) Vb as a map on coefficient vectors
      Mat rows(n, std::vector<QI>(dim));
      for (int c = 0; c < dim; ++c) {
        std::vector<QI> v(n);
        for (int i = 0; i < n; ++i) v[i] = Vb[i][c];
        for (int i = 0; i < n; ++i) {
          QI s;
          for (int k = 0; k < n; ++k) s += op[i][k] * v[k];
          s -= QI(ev) * v[i];
          rows[i][c] = s;
        }
      }
      auto kb = kernel_basis(rows);
      if (kb.empty()) continue;
      Mat sub(n, std::vector<QI>((int)kb.size()));
      for (size_t c = 0; c < kb.size(); ++c)
        for (int i = 0; i < n; ++i) {
          QI s;
          for (int k = 0; k < dim; ++k) s += Vb[i][k] * kb[c][k];
          sub[i][c] = s;
        }
      next.push_back(std::move(sub));
    }
  }
  spaces = std::move(next);
}

std::vector<QI> column_of(const Mat& m, int c) {
  std::vector<QI> v(m.size());
  for (size_t i = 0; i < m.size(); ++i) v[i] = m[i][c];
  return v;
}

}  // namespace

Model build_severi(int alg_dim) {
  if (alg_dim != 2 && alg_dim != 4 && alg_dim != 8)
    throw std::invalid_argument("build_severi: algebra dim must be 2, 4 or 8");
  Model M;
  CompAlgebra A = composition_algebra(alg_dim);
  CliffordSpace cs(A);
  int d = alg_dim;
  int r = d / 2 + 1;  // so-rank of the II symmetry

  if (d == 2) {
    M.name = "Seg(P2xP2)";
    M.rank.factors = {{Series::A, 1, "U"}, {Series::A, 1, "W"}};
    M.rank.torus_dim = 2;
  } else if (d == 4) {
    M.name = "G(2,6)_AP2";
    M.rank.factors = {{Series::A, 1, "A"}, {Series::D, 3, "B"}};
    M.rank.torus_dim = 1;
  } else {
    M.name = "OP2";
    M.rank.factors = {{Series::D, 5, ""}};
    M.rank.torus_dim = 1;
  }
  M.rd = build_root_data(M.rank);
  M.n = 2 * d;
  M.a = d + 2;
  M.algebra = A;

  // ---- coordinate presentation -------------------------------------------
  for (int i = 0; i < d; ++i) M.tangent_coord_labels.push_back("a" + std::to_string(i));
  for (int i = 0; i < d; ++i) M.tangent_coord_labels.push_back("b" + std::to_string(i));
  M.normal_coord_labels = {"a", "b", "0"};
  for (int k = 1; k < d; ++k) M.normal_coord_labels.push_back("eps" + std::to_string(k));

  // chart: x^a = sum a_i^2, x^b = sum b_i^2, x^(k) = k-th component of a conj(b)
  M.chart.n = M.n;
  M.chart.normal_labels = M.normal_coord_labels;
  {
    Poly pa, pb;
    for (int i = 0; i < d; ++i) {
      pa[{i, i}] = QI(1);
      pb[{d + i, d + i}] = QI(1);
    }
    M.chart.polys.push_back(pa);
    M.chart.polys.push_back(pb);
    for (int k = 0; k < d; ++k) {
      Poly pk;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          auto prod = A.multiply(A.basis(i), A.conj(A.basis(j)));
          if (prod[k].is_zero()) continue;
          std::vector<int> key{i, d + j};
          pk[key] += prod[k];
        }
      M.chart.polys.push_back(pk);
    }
  }
  for (int q = 0; q < M.a; ++q) {
    Quadric Q;
    Q.B.assign(M.n, std::vector<QI>(M.n));
    for (const auto& [key, c] : M.chart.polys[q]) {
      int u = key[0], v = key[1];
      if (u == v) {
        Q.B[u][u] += c;
      } else {
        QI half = c * QI(Rat(1, 2));
        Q.B[u][v] += half;
        Q.B[v][u] += half;
      }
    }
    M.II_coord.push_back(Q);
  }

  // ---- null basis of V = N* ----------------------------------------------
  int nv = d + 2;
  std::vector<std::vector<QI>> P(r), Qv(r);  // p_j, q_j in f-coordinates
  P[0] = std::vector<QI>(nv);
  P[0][0] = QI(1);  // f_a
  Qv[0] = std::vector<QI>(nv);
  Qv[0][1] = QI(1);  // f_b
  for (int j = 1; j < r; ++j) {
    std::vector<QI> p(nv), q(nv);
    int k0 = 2 + 2 * (j - 1), k1 = k0 + 1;
    p[k0] = QI(Rat(1, 2));
    p[k1] = QI(Rat(1, 2)) * QI::i();
    q[k0] = QI(Rat(-1, 2));
    q[k1] = QI(Rat(1, 2)) * QI::i();
    P[j] = p;
    Qv[j] = q;
  }

  // ---- Chevalley generators -----------------------------------------------
  // D_r simple roots alpha_k = e_k - e_{k+1} (k < r), alpha_r = e_{r-1} + e_r.
  struct Gen {
    Mat T_op, V_op;
  };
  std::vector<Gen> Es, Fs;
  auto add_gen = [&](const std::vector<QI>& x1, const std::vector<QI>& y1,
                     const std::vector<QI>& x2, const std::vector<QI>& y2) {
    Es.push_back({cs.sigma(x1, y1), cs.mgen(x1, y1)});
    Fs.push_back({cs.sigma(x2, y2), cs.mgen(x2, y2)});
  };
  for (int k = 0; k + 1 < r; ++k) add_gen(P[k], Qv[k + 1], P[k + 1], Qv[k]);
  if (r >= 2) add_gen(P[r - 2], P[r - 1], Qv[r - 1], Qv[r - 2]);

  std::vector<Mat> cartans;  // h_j = m(p_j, q_j) acting on T via sigma
  for (int j = 0; j < r; ++j) cartans.push_back(cs.sigma(P[j], Qv[j]));

  // extra sl2 (d = 4) or extra torus charge (d = 2): right multiplications
  Mat extraH, extraE, extraF;
  bool has_extra = d <= 4;
  if (has_extra) {
    std::vector<QI> ie1(d);
    ie1[1] = QI::i();
    extraH = cs.rmul(ie1);
    for (auto& row : extraH)
      for (auto& v : row) v = -v;  // H = -R_{i eps1}
    if (d == 4) {
      std::vector<QI> x(d), y(d);
      x[2] = QI(1);
      x[3] = QI::i();  // eps2 + i eps3
      y[2] = QI(1);
      y[3] = -QI::i();
      extraE = cs.rmul(x);
      for (auto& row : extraE)
        for (auto& v : row) v /= QI(2);
      extraF = cs.rmul(y);
      for (auto& row : extraF)
        for (auto& v : row) v = -v / QI(2);
    }
  }

  // ---- joint eigenbasis of T ----------------------------------------------
  std::vector<Mat> spaces;
  {
    Mat id = mat_zero(M.n, M.n);
    for (int i = 0; i < M.n; ++i) id[i][i] = QI(1);
    spaces.push_back(id);
  }
  std::vector<Rat> halves{Rat(1, 2), Rat(-1, 2)};
  for (int j = 0; j < r; ++j) split_by_eigen(cartans[j], halves, spaces);
  if (has_extra) split_by_eigen(extraH, {Rat(1), Rat(-1)}, spaces);
  int total = 0;
  for (const auto& s : spaces) total += (int)s[0].size();
  if (total != M.n) throw std::runtime_error("severi: eigenbasis dimension mismatch");
  for (const auto& s : spaces)
    if ((int)s[0].size() != 1) throw std::runtime_error("severi: joint eigenspace not one-dimensional");

  // eigenvalues per vector
  struct TVec {
    std::vector<QI> v;          // coordinates
    std::vector<Rat> m;          // h_1..h_r eigenvalues
    Rat extra = Rat(0);          // extra H eigenvalue
    bool a_copy = false;
  };
  std::vector<TVec> tvecs;
  auto eigen_of = [&](const Mat& op, const std::vector<QI>& v) -> Rat {
    // first nonzero slot determines the ratio
    for (int i = 0; i < (int)v.size(); ++i) {
      if (v[i].is_zero()) continue;
      QI s;
      for (int k = 0; k < (int)v.size(); ++k) s += op[i][k] * v[k];
      QI ratio = s / v[i];
      if (!ratio.is_real()) throw std::runtime_error("severi: non-real eigenvalue");
      return ratio.re;
    }
    throw std::runtime_error("severi: zero eigenvector");
  };
  for (const auto& s : spaces) {
    TVec t;
    t.v = column_of(s, 0);
    // normalize: first nonzero coordinate = 1
    QI lead;
    for (const auto& x : t.v)
      if (!x.is_zero()) {
        lead = x;
        break;
      }
    for (auto& x : t.v) x /= lead;
    for (int j = 0; j < r; ++j) t.m.push_back(eigen_of(cartans[j], t.v));
    if (has_extra) t.extra = eigen_of(extraH, t.v);
    bool in_a = false, in_b = false;
    for (int i = 0; i < d; ++i)
      if (!t.v[i].is_zero()) in_a = true;
    for (int i = d; i < 2 * d; ++i)
      if (!t.v[i].is_zero()) in_b = true;
    if (in_a == in_b) throw std::runtime_error("severi: weight vector mixes the two copies");
    t.a_copy = in_a;
    tvecs.push_back(std::move(t));
  }

  // label: a-copy pairs k / k~, b-copy primed; "1" is the lowest weight vector
  auto weight_from = [&](const std::vector<Rat>& m, const Rat& extra) {
    Weight w = Weight::zero(M.rank);
    if (d == 8) {
      for (int j = 0; j < 3; ++j) {
        Rat c = m[j] - m[j + 1];
        w.coords[0][j] = (int)numerator(c).convert_to<long long>();
      }
      Rat c4 = m[3] - m[4], c5 = m[3] + m[4];
      w.coords[0][3] = (int)numerator(c4).convert_to<long long>();
      w.coords[0][4] = (int)numerator(c5).convert_to<long long>();
    } else if (d == 4) {
      Rat e = extra;
      w.coords[0][0] = (int)numerator(e).convert_to<long long>();
      Rat c1 = m[0] - m[1], c2 = m[1] - m[2], c3 = m[1] + m[2];
      w.coords[1][0] = (int)numerator(c1).convert_to<long long>();
      w.coords[1][1] = (int)numerator(c2).convert_to<long long>();
      w.coords[1][2] = (int)numerator(c3).convert_to<long long>();
    } else {
      Rat c1 = m[0] - m[1], c2 = m[0] + m[1];
      w.coords[0][0] = (int)numerator(c1).convert_to<long long>();
      w.coords[1][0] = (int)numerator(c2).convert_to<long long>();
    }
    return w;
  };

  std::vector<Weight> tweights(tvecs.size());
  for (size_t i = 0; i < tvecs.size(); ++i) {
    tweights[i] = weight_from(tvecs[i].m, tvecs[i].extra);
    tweights[i].charges[0] = Rat(1);
    if (d == 2) tweights[i].charges[1] = tvecs[i].extra;
  }

  // labels: "1" is the lowest weight vector of T (it lies in the a-copy);
  // partners carry "~", the b-copy mirrors the a-copy patterns with a prime
  auto annihilated_by_lowerings = [&](const std::vector<QI>& v) {
    auto is_zero_image = [&](const Mat& op) {
      for (int i = 0; i < M.n; ++i) {
        QI s;
        for (int k2 = 0; k2 < M.n; ++k2) s += op[i][k2] * v[k2];
        if (!s.is_zero()) return false;
      }
      return true;
    };
    for (const auto& g : Fs)
      if (!is_zero_image(g.T_op)) return false;
    if (d == 4 && !is_zero_image(extraF)) return false;
    return true;
  };

  std::vector<std::string> tlabels(tvecs.size());
  {
    std::vector<int> aidx;
    for (size_t i = 0; i < tvecs.size(); ++i)
      if (tvecs[i].a_copy) aidx.push_back((int)i);
    // pair by (m_1 equal, m_2..m_r negated, extra negated)
    std::vector<std::pair<int, int>> pairs;
    std::vector<bool> used(aidx.size(), false);
    for (size_t x = 0; x < aidx.size(); ++x) {
      if (used[x]) continue;
      used[x] = true;
      int partner = -1;
      for (size_t y = x + 1; y < aidx.size(); ++y) {
        if (used[y]) continue;
        const auto& mx = tvecs[aidx[x]].m;
        const auto& my = tvecs[aidx[y]].m;
        bool match = mx[0] == my[0];
        for (int j = 1; j < r && match; ++j) match = (mx[j] == -my[j]);
        if (match && has_extra) match = (tvecs[aidx[x]].extra == -tvecs[aidx[y]].extra);
        if (match) {
          partner = (int)y;
          break;
        }
      }
      if (partner < 0) throw std::runtime_error("severi: unpaired weight vector");
      used[partner] = true;
      pairs.emplace_back(aidx[x], aidx[partner]);
    }
    // orient each pair: the lowering-annihilated member first if there is
    // one, otherwise the lexicographically smaller weight
    for (auto& [p, q] : pairs) {
      bool plow = annihilated_by_lowerings(tvecs[p].v);
      bool qlow = annihilated_by_lowerings(tvecs[q].v);
      if ((qlow && !plow) || (qlow == plow && tweights[q] < tweights[p])) std::swap(p, q);
    }
    // the pair whose first member is the global lowest becomes pair 1
    std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& x, const auto& y) {
      bool xl = annihilated_by_lowerings(tvecs[x.first].v);
      bool yl = annihilated_by_lowerings(tvecs[y.first].v);
      if (xl != yl) return xl;
      return tweights[x.first] < tweights[y.first];
    });
    for (size_t k = 0; k < pairs.size(); ++k) {
      tlabels[pairs[k].first] = std::to_string(k + 1);
      tlabels[pairs[k].second] = std::to_string(k + 1) + "~";
    }
    // b-copy: match coordinate patterns
    for (size_t i = 0; i < tvecs.size(); ++i) {
      if (tvecs[i].a_copy) continue;
      int match = -1;
      for (int aj : aidx) {
        bool same = true;
        for (int c = 0; c < d && same; ++c) same = (tvecs[i].v[d + c] == tvecs[aj].v[c]);
        if (same) {
          match = aj;
          break;
        }
      }
      if (match < 0) throw std::runtime_error("severi: b-copy pattern without a-copy match");
      tlabels[i] = tlabels[match] + "'";
    }
  }
  // basis order: a-copy pairs in label order, then the mirrored b-copy
  std::vector<int> order;
  {
    auto label_rank = [&](const std::string& l) {
      bool primed = !l.empty() && l.back() == '\'';
      std::string core = primed ? l.substr(0, l.size() - 1) : l;
      bool bar = !core.empty() && core.back() == '~';
      if (bar) core.pop_back();
      return std::make_tuple(primed ? 1 : 0, std::stoi(core), bar ? 1 : 0);
    };
    order.resize(tvecs.size());
    for (size_t i = 0; i < tvecs.size(); ++i) order[i] = (int)i;
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return label_rank(tlabels[x]) < label_rank(tlabels[y]); });
  }

  // ---- assemble T ----------------------------------------------------------
  Mat Pw = mat_zero(M.n, M.n);  // columns: weight vectors in coordinates
  {
    int c = 0;
    for (int i : order) {
      for (int row = 0; row < M.n; ++row) Pw[row][c] = tvecs[i].v[row];
      ++c;
    }
  }
  Mat Pw_inv = mat_inverse(Pw);
  M.T_weight_to_coord = Pw;

  M.T.rank = M.rank;
  for (int c = 0; c < M.n; ++c) {
    int i = order[c];
    M.T.labels.push_back(tlabels[i]);
    M.T.weights.push_back(tweights[i]);
  }
  auto to_weight_basis = [&](const Mat& op) { return to_sparse(mat_mul(Pw_inv, mat_mul(op, Pw))); };

  M.T.raising.resize(M.rank.factors.size());
  M.T.lowering.resize(M.rank.factors.size());
  if (d == 8) {
    for (int k = 0; k < 5; ++k) {
      M.T.raising[0].push_back(to_weight_basis(Es[k].T_op));
      M.T.lowering[0].push_back(to_weight_basis(Fs[k].T_op));
    }
  } else if (d == 4) {
    M.T.raising[0].push_back(to_weight_basis(extraE));
    M.T.lowering[0].push_back(to_weight_basis(extraF));
    for (int k = 0; k < 3; ++k) {
      M.T.raising[1].push_back(to_weight_basis(Es[k].T_op));
      M.T.lowering[1].push_back(to_weight_basis(Fs[k].T_op));
    }
  } else {
    // factors: U from alpha = e1 - e2, W from alpha = e1 + e2
    M.T.raising[0].push_back(to_weight_basis(Es[0].T_op));
    M.T.lowering[0].push_back(to_weight_basis(Fs[0].T_op));
    M.T.raising[1].push_back(to_weight_basis(Es[1].T_op));
    M.T.lowering[1].push_back(to_weight_basis(Fs[1].T_op));
  }

  // ---- assemble N ----------------------------------------------------------
  // V-basis order: p1, q1, p2, q2, ...; N is the dual module.
  int na = M.a;
  Mat Pv = mat_zero(na, na);
  std::vector<std::string> nstar_labels;
  std::vector<Weight> nstar_weights;
  for (int j = 0; j < r; ++j) {
    for (int row = 0; row < na; ++row) {
      Pv[row][2 * j] = P[j][row];
      Pv[row][2 * j + 1] = Qv[j][row];
    }
  }
  Mat Pv_inv = mat_inverse(Pv);
  {
    // weights of p_j / q_j: +-e_j
    for (int j = 0; j < r; ++j) {
      std::vector<Rat> mp(r, Rat(0)), mq(r, Rat(0));
      mp[j] = Rat(1);
      mq[j] = Rat(-1);
      Weight wp = weight_from(mp, Rat(0)), wq = weight_from(mq, Rat(0));
      nstar_weights.push_back(wp);
      nstar_weights.push_back(wq);
    }
    nstar_labels.resize(2 * r);
    nstar_labels[0] = "a*";
    nstar_labels[1] = "b*";
    for (int j = 1; j < r; ++j) {
      nstar_labels[2 * j] = "c" + std::to_string(j) + "*";
      nstar_labels[2 * j + 1] = "c" + std::to_string(j) + "~*";
    }
  }
  ExplicitModule Nstar;
  Nstar.rank = M.rank;
  Nstar.labels = nstar_labels;
  Nstar.weights = nstar_weights;
  Nstar.raising.resize(M.rank.factors.size());
  Nstar.lowering.resize(M.rank.factors.size());
  auto vop_to_pq = [&](const Mat& op) { return to_sparse(mat_mul(Pv_inv, mat_mul(op, Pv))); };
  if (d == 8) {
    for (int k = 0; k < 5; ++k) {
      Nstar.raising[0].push_back(vop_to_pq(Es[k].V_op));
      Nstar.lowering[0].push_back(vop_to_pq(Fs[k].V_op));
    }
  } else if (d == 4) {
    Nstar.raising[0].push_back(SparseMat::zero(na, na));
    Nstar.lowering[0].push_back(SparseMat::zero(na, na));
    for (int k = 0; k < 3; ++k) {
      Nstar.raising[1].push_back(vop_to_pq(Es[k].V_op));
      Nstar.lowering[1].push_back(vop_to_pq(Fs[k].V_op));
    }
  } else {
    Nstar.raising[0].push_back(vop_to_pq(Es[0].V_op));
    Nstar.lowering[0].push_back(vop_to_pq(Fs[0].V_op));
    Nstar.raising[1].push_back(vop_to_pq(Es[1].V_op));
    Nstar.lowering[1].push_back(vop_to_pq(Fs[1].V_op));
  }
  ExplicitModule N = dual_module(Nstar);
  {
    std::vector<std::string> nlabels(2 * r);
    nlabels[0] = "a";
    nlabels[1] = "b";
    for (int j = 1; j < r; ++j) {
      nlabels[2 * j] = "c" + std::to_string(j);
      nlabels[2 * j + 1] = "c" + std::to_string(j) + "~";
    }
    N = relabel(N, nlabels);
  }
  for (auto& w : N.weights) {
    w.charges[0] = Rat(2);
    if (d == 2) w.charges[1] = Rat(0);
  }
  M.N = N;

  // N weight basis -> normal coordinates: coordinate covectors are
  // dx^a = f_a, dx^b = f_b, dx^(k) = f_k / 2; pairing with the dual basis of
  // the pq-covectors gives the coordinate expansion.
  {
    M.N_weight_to_coord = mat_zero(na, na);
    for (int c = 0; c < na; ++c) {
      // coordinate covector c in f-coordinates
      std::vector<QI> cov(na);
      if (c < 2)
        cov[c] = QI(1);
      else
        cov[c] = QI(Rat(1, 2));
      // expansion in the pq-covector basis: coefficients = Pv^{-1} * cov
      for (int l = 0; l < na; ++l) {
        QI s;
        for (int f = 0; f < na; ++f) s += Pv_inv[l][f] * cov[f];
        M.N_weight_to_coord[c][l] = s;
      }
    }
  }

  // II in weight bases: q^(l)(v,w) = sym B(gamma(xi_l) v, w), tangent side in
  // the weight basis.
  for (int l = 0; l < na; ++l) {
    const std::vector<QI>& xi = (l % 2 == 0) ? P[l / 2] : Qv[l / 2];
    Mat g = cs.gamma(xi);
    Quadric Q;
    Q.B.assign(M.n, std::vector<QI>(M.n));
    // coordinate-basis polarized matrix: B0[i][j] = sym dot(gamma xi e_i, e_j)
    Mat B0 = mat_zero(M.n, M.n);
    for (int j = 0; j < M.n; ++j)
      for (int i = 0; i < M.n; ++i) {
        // dot(g e_j, e_i) = g[i][j]
        B0[i][j] = (g[i][j] + g[j][i]) * QI(Rat(1, 2));
      }
    Mat Bw = mat_mul(mat_mul([&] {
                       Mat t = mat_zero(M.n, M.n);
                       for (int i = 0; i < M.n; ++i)
                         for (int j = 0; j < M.n; ++j) t[i][j] = Pw[j][i];
                       return t;
                     }(),
                             B0),
                     Pw);
    Q.B = Bw;
    M.II_weight.push_back(Q);
  }

  // ---- curated Bertini script ---------------------------------------------
  {
    std::vector<std::string> La, Lb;
    for (int k = 1; k <= d / 2; ++k) {
      La.push_back(std::to_string(k));
      Lb.push_back(std::to_string(k) + "'");
    }
    M.curated_script.push_back({"b", La});
    M.curated_script.push_back({"a", Lb});
  }

  // ---- paper null frame -----------------------------------------------------
  {
    NullFrame nf;
    std::vector<QI> e1(M.n), e1b(M.n);
    e1[0] = QI(1);
    e1[1] = QI::i();
    e1b[0] = QI(1);
    e1b[1] = -QI::i();
    nf.names = {"e1", "e1bar"};
    M.null_frame_vectors = {e1, e1b};
    if (d >= 4) {
      std::vector<QI> e2(M.n);
      e2[0] = QI(1);
      e2[2] = QI::i();
      M.null_frame_vectors.push_back(e2);
      nf.names.push_back("e2");
    }
    M.null_frame_names = nf.names;
  }

  if (d == 2) {
    // outer swap: algebra conjugation on both copies; on weights it swaps the
    // two A1 coordinates and negates the second charge
    M.swap_involution = [](const Weight& w) {
      Weight s = w;
      std::swap(s.coords[0], s.coords[1]);
      s.charges[1] = -s.charges[1];
      return s;
    };
  }

  M.conventions_note =
      "Borel: tangent label '1' is the lowest weight vector of T; hw(N) is the "
      "'b' slot. Tangent labels k / k~ (primed: b-copy) expand as recorded in "
      "the report dictionary.";
  return M;
}

NullFrame null_frame(const Model& model) {
  if (!model.is_severi()) throw std::invalid_argument(model.name + ": null_frame applies to the AP2 family only");
  NullFrame nf;
  nf.names = model.null_frame_names;
  nf.vectors_coord = model.null_frame_vectors;
  return nf;
}

}  // namespace chss
