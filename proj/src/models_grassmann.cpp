#include <stdexcept>

#include "chss/model.hpp"

namespace chss {

QI Quadric::eval(const std::vector<QI>& v) const { return eval(v, v); }

QI Quadric::eval(const std::vector<QI>& v, const std::vector<QI>& w) const {
  QI s;
  int d = dim();
  for (int i = 0; i < d; ++i) {
    if (v[i].is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      if (w[j].is_zero()) continue;
      s += v[i] * B[i][j] * w[j];
    }
  }
  return s;
}

int Model::tangent_weight_index(const std::string& label) const {
  int i = T.index_of(label);
  if (i < 0) throw std::invalid_argument(name + ": unknown tangent label '" + label + "'");
  return i;
}

int Model::normal_weight_index(const std::string& label) const {
  int i = N.index_of(label);
  if (i < 0) throw std::invalid_argument(name + ": unknown normal label '" + label + "'");
  return i;
}

std::vector<QI> Model::tangent_coord_of_weight_vec(const std::map<int, QI>& wv) const {
  std::vector<QI> out(n);
  for (const auto& [j, c] : wv)
    for (int i = 0; i < n; ++i) out[i] += T_weight_to_coord[i][j] * c;
  return out;
}

void Model::check_ii_invariance() const {
  // (g.II)(v,w) = gN II(v,w) - II(gT v, w) - II(v, gT w) must vanish for every
  // Chevalley generator; checked entrywise on the weight bases.
  auto check_op = [&](const SparseMat& opT, const SparseMat& opN, const char* what) {
    for (int mu = 0; mu < a; ++mu) {
      for (int al = 0; al < n; ++al)
        for (int be = 0; be < n; ++be) {
          QI s;
          // II transforms in S^2 T* ⊗ N: normal side by opN, tangent sides by -opT
          for (int nu = 0; nu < a; ++nu) {
            QI c = opN.get(mu, nu);
            if (!c.is_zero()) s += c * II_weight[nu].B[al][be];
          }
          for (int ga = 0; ga < n; ++ga) {
            QI c = opT.get(ga, al);
            if (!c.is_zero()) s -= c * II_weight[mu].B[ga][be];
            QI c2 = opT.get(ga, be);
            if (!c2.is_zero()) s -= c2 * II_weight[mu].B[al][ga];
          }
          if (!s.is_zero())
            throw std::runtime_error(name + ": II not invariant under " + what);
        }
    }
  };
  for (size_t f = 0; f < T.raising.size(); ++f)
    for (size_t i = 0; i < T.raising[f].size(); ++i) {
      check_op(T.raising[f][i], N.raising[f][i], "raising");
      check_op(T.lowering[f][i], N.lowering[f][i], "lowering");
    }
}

namespace {

// Defining module of an A-factor with the basis ordered so that the FIRST
// basis vector is the lowest weight vector (raisings move the index up).
ExplicitModule chain_module(const ReductiveRank& rank, int factor, int dim,
                            const std::vector<std::string>& labels) {
  int r = rank.factors[factor].rank;
  if (dim != r + 1) throw std::invalid_argument("chain_module: dim mismatch");
  ExplicitModule m;
  m.rank = rank;
  m.labels = labels;
  m.raising.resize(rank.factors.size());
  m.lowering.resize(rank.factors.size());
  for (size_t f = 0; f < rank.factors.size(); ++f) {
    int rf = rank.factors[f].rank;
    for (int i = 0; i < rf; ++i) {
      m.raising[f].push_back(SparseMat::zero(dim, dim));
      m.lowering[f].push_back(SparseMat::zero(dim, dim));
    }
  }
  // basis vector p (0-based, lowest first) = standard vector v_{dim-p};
  // node i of sl_{dim}: e_i = E_{i,i+1} acts v_{i+1} -> v_i, i.e. raises
  // position dim-i to dim-i+1 in our ordering.
  for (int i = 1; i <= r; ++i) {
    int lo = dim - i - 1, hi = dim - i;  // 0-based indices: raising lo -> hi
    m.raising[factor][i - 1].add(hi, lo, QI(1));
    m.lowering[factor][i - 1].add(lo, hi, QI(1));
  }
  for (int p = 0; p < dim; ++p) {
    Weight w = Weight::zero(rank);
    // standard position q = dim - p (1-based): fund coords of v_q
    int q = dim - p;
    for (int i = 1; i <= r; ++i) {
      int c = 0;
      if (i == q) c += 1;
      if (i == q - 1) c -= 1;
      w.coords[factor][i - 1] = c;
    }
    m.weights.push_back(w);
  }
  return m;
}

void set_charge(ExplicitModule& m, const Rat& c) {
  for (auto& w : m.weights) w.charges.assign(m.rank.torus_dim, Rat(0)), w.charges[0] = c;
}

}  // namespace

Model build_grassmannian(int m) {
  if (m < 5) throw std::invalid_argument("G(2,m) requires m >= 5");
  Model M;
  M.name = "G(2," + std::to_string(m) + ")";
  int nb = m - 2;
  M.rank.factors = {{Series::A, 1, "A"}, {Series::A, nb - 1, "B"}};
  M.rank.torus_dim = 1;
  M.rd = build_root_data(M.rank);
  M.n = 2 * nb;
  M.a = nb * (nb - 1) / 2;

  // A*-side: two-dimensional chain on factor 0, lowest label "1"
  ExplicitModule Astar = chain_module(M.rank, 0, 2, {"1", "2"});
  std::vector<std::string> blabels;
  for (int j = 3; j <= m; ++j) blabels.push_back(std::to_string(j));
  ExplicitModule B = chain_module(M.rank, 1, nb, blabels);

  ExplicitModule T = tensor_module(Astar, B);
  std::vector<std::string> tlabels;
  for (int s = 1; s <= 2; ++s)
    for (int j = 3; j <= m; ++j) tlabels.push_back("(" + std::to_string(s) + std::to_string(j) + ")");
  T = relabel(T, tlabels);
  set_charge(T, Rat(1));

  ExplicitModule N = ext_module(B, 2);
  std::vector<std::string> nlabels;
  for (int i = 3; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) nlabels.push_back("(" + std::to_string(i) + std::to_string(j) + ")");
  N = relabel(N, nlabels);
  set_charge(N, Rat(2));

  M.T = T;
  M.N = N;
  M.tangent_coord_labels = T.labels;
  M.normal_coord_labels = N.labels;
  M.T_weight_to_coord.assign(M.n, std::vector<QI>(M.n));
  for (int i = 0; i < M.n; ++i) M.T_weight_to_coord[i][i] = QI(1);
  M.N_weight_to_coord.assign(M.a, std::vector<QI>(M.a));
  for (int i = 0; i < M.a; ++i) M.N_weight_to_coord[i][i] = QI(1);

  // chart: x^(ij) = x^(1i) x^(2j) - x^(1j) x^(2i)
  auto tidx = [&](int s, int j) { return (s - 1) * nb + (j - 3); };
  M.chart.n = M.n;
  M.chart.normal_labels = N.labels;
  for (int i = 3; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      Poly p;
      std::vector<int> k1{tidx(1, i), tidx(2, j)};
      std::sort(k1.begin(), k1.end());
      p[k1] = QI(1);
      std::vector<int> k2{tidx(1, j), tidx(2, i)};
      std::sort(k2.begin(), k2.end());
      p[k2] = QI(-1);
      M.chart.polys.push_back(std::move(p));
    }

  // II from the chart's quadratic part: B[(1i)][(2j)] = 1/2 etc.
  for (int q = 0; q < M.a; ++q) {
    Quadric Q;
    Q.B.assign(M.n, std::vector<QI>(M.n));
    for (const auto& [key, c] : M.chart.polys[q]) {
      int u = key[0], v = key[1];
      QI half = c * QI(Rat(1, 2));
      Q.B[u][v] += half;
      Q.B[v][u] += half;
    }
    M.II_coord.push_back(Q);
    M.II_weight.push_back(M.II_coord.back());
  }

  M.curated_script = {{"(45)", {"(13)"}}, {"(45)", {"(13)", "(23)"}}};
  M.conventions_note =
      "Borel: e_(13) is the lowest weight vector of T (its dual spans the highest "
      "slot of T*); hw(N) = e_(" + std::to_string(m - 1) + std::to_string(m) + ").";
  return M;
}

Model build_spinor10() {
  Model M;
  M.name = "S10";
  M.rank.factors = {{Series::A, 4, ""}};
  M.rank.torus_dim = 1;
  M.rd = build_root_data(M.rank);
  M.n = 10;
  M.a = 5;

  std::vector<std::string> wlabels;
  for (int j = 1; j <= 5; ++j) wlabels.push_back(std::to_string(j));
  ExplicitModule W = chain_module(M.rank, 0, 5, wlabels);

  ExplicitModule T = ext_module(W, 2);
  std::vector<std::string> tlabels;
  for (int s = 1; s <= 5; ++s)
    for (int t = s + 1; t <= 5; ++t) tlabels.push_back("(" + std::to_string(s) + std::to_string(t) + ")");
  T = relabel(T, tlabels);
  set_charge(T, Rat(1));

  ExplicitModule N = ext_module(W, 4);
  // subsets of size 4 in increasing order omit exactly one index; the omitted
  // index is the Pfaffian label
  std::vector<std::string> nlabels;
  for (int omit = 5; omit >= 1; --omit) nlabels.push_back(std::to_string(omit));
  // enumerate_subsets yields (1234),(1235),(1245),(1345),(2345) => omit 5,4,3,2,1
  N = relabel(N, nlabels);
  set_charge(N, Rat(2));

  M.T = T;
  M.N = N;
  M.tangent_coord_labels = T.labels;
  M.normal_coord_labels = N.labels;
  M.T_weight_to_coord.assign(M.n, std::vector<QI>(M.n));
  for (int i = 0; i < M.n; ++i) M.T_weight_to_coord[i][i] = QI(1);
  M.N_weight_to_coord.assign(M.a, std::vector<QI>(M.a));
  for (int i = 0; i < M.a; ++i) M.N_weight_to_coord[i][i] = QI(1);

  auto tindex = [&](int s, int t) {
    if (s > t) std::swap(s, t);
    int idx = 0;
    for (int x = 1; x <= 5; ++x)
      for (int y = x + 1; y <= 5; ++y) {
        if (x == s && y == t) return idx;
        ++idx;
      }
    throw std::logic_error("bad pair");
  };

  // chart: x^j = Pf of the skew matrix restricted to {1..5} \ {j}
  M.chart.n = M.n;
  for (int j = 1; j <= 5; ++j) M.chart.normal_labels.push_back(std::to_string(j));
  M.chart.polys.resize(5);
  for (int omit = 1; omit <= 5; ++omit) {
    std::vector<int> rows;
    for (int x = 1; x <= 5; ++x)
      if (x != omit) rows.push_back(x);
    // Pf(a,b,c,d) = m_ab m_cd - m_ac m_bd + m_ad m_bc
    int A = rows[0], Bq = rows[1], C = rows[2], D = rows[3];
    Poly p;
    auto put = [&](int s1, int t1, int s2, int t2, int sign) {
      std::vector<int> key{tindex(s1, t1), tindex(s2, t2)};
      std::sort(key.begin(), key.end());
      p[key] += QI(sign);
    };
    put(A, Bq, C, D, 1);
    put(A, C, Bq, D, -1);
    put(A, D, Bq, C, 1);
    M.chart.polys[M.N.index_of(std::to_string(omit))] = std::move(p);
  }

  for (int q = 0; q < M.a; ++q) {
    Quadric Q;
    Q.B.assign(M.n, std::vector<QI>(M.n));
    for (const auto& [key, c] : M.chart.polys[q]) {
      int u = key[0], v = key[1];
      QI half = c * QI(Rat(1, 2));
      Q.B[u][v] += half;
      Q.B[v][u] += half;
    }
    M.II_coord.push_back(Q);
    M.II_weight.push_back(M.II_coord.back());
  }

  M.curated_script = {{"1", {"(12)"}}, {"1", {"(12)", "(13)", "(14)", "(15)"}}};
  M.conventions_note =
      "Borel: e_(12) is the lowest weight vector of T = Λ²W (w1 lowest in W); "
      "hw(N) is the Pfaffian slot 1 (the wedge of w2..w5).";
  return M;
}

}  // namespace chss
