#include "chss/root_data.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace chss {

namespace {

std::vector<std::vector<int>> cartan_matrix(const SimpleFactor& f) {
  int r = f.rank;
  std::vector<std::vector<int>> c(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) c[i][i] = 2;
  if (f.series == Series::A) {
    for (int i = 0; i + 1 < r; ++i) c[i][i + 1] = c[i + 1][i] = -1;
  } else {
    // Bourbaki D_r: chain 1..r-2, with r-1 and r both attached to r-2.
    // For r = 3 the chain is the single node 1, carrying both spin nodes.
    for (int i = 0; i + 1 < r - 1; ++i) c[i][i + 1] = c[i + 1][i] = -1;
    c[r - 3][r - 1] = c[r - 1][r - 3] = -1;
  }
  return c;
}

std::vector<std::vector<Rat>> invert(const std::vector<std::vector<int>>& m) {
  int n = (int)m.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
    a[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::runtime_error("singular Cartan matrix");
    std::swap(a[piv], a[col]);
    Rat d = a[col][col];
    for (auto& x : a[col]) x /= d;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace

long long FactorRootData::coroot_pairing(const std::vector<int>& lam, const Root& r) const {
  long long s = 0;
  for (size_t i = 0; i < lam.size(); ++i) s += (long long)lam[i] * r.simple_coords[i];
  return s;
}

Rat FactorRootData::form(const std::vector<int>& a, const std::vector<int>& b) const {
  Rat s(0);
  int n = factor.rank;
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      s += Rat(a[i]) * cartan_inv[i][j] * Rat(b[j]);
    }
  }
  return s;
}

std::vector<int> FactorRootData::dual_coords(const std::vector<int>& lam) const {
  int r = factor.rank;
  std::vector<int> d(lam);
  if (factor.series == Series::A) {
    std::reverse(d.begin(), d.end());
  } else if (r % 2 == 1) {
    std::swap(d[r - 2], d[r - 1]);  // -w0 swaps the two spin nodes for odd rank
  }
  return d;
}

Weight RootData::rho() const {
  Weight w = Weight::zero(rank);
  for (size_t f = 0; f < factors.size(); ++f)
    for (int i = 0; i < factors[f].factor.rank; ++i) w.coords[f][i] = 1;
  return w;
}

Weight RootData::dual_weight(const Weight& w) const {
  Weight d = w;
  for (size_t f = 0; f < factors.size(); ++f) d.coords[f] = factors[f].dual_coords(w.coords[f]);
  for (auto& q : d.charges) q = -q;
  return d;
}

RootData build_root_data(const ReductiveRank& rk) {
  RootData rd;
  rd.rank = rk;
  if (rk.torus_dim < 0) throw std::invalid_argument("torus_dim must be nonnegative");
  for (const auto& f : rk.factors) {
    if (f.rank < 1) throw std::invalid_argument("factor rank must be positive");
    if (f.series == Series::D && f.rank < 3)
      throw std::invalid_argument("type D requires rank >= 3 (got D" + std::to_string(f.rank) + ")");
    FactorRootData frd;
    frd.factor = f;
    frd.cartan = cartan_matrix(f);
    frd.cartan_inv = invert(frd.cartan);
    frd.rho.assign(f.rank, 1);

    // Positive roots by closure: beta + alpha_i is a root iff <beta, alpha_i> = -1
    // (simply laced, beta != alpha_i).
    std::set<std::vector<int>> roots;
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < f.rank; ++i) {
      std::vector<int> e(f.rank, 0);
      e[i] = 1;
      roots.insert(e);
      frontier.push_back(e);
    }
    while (!frontier.empty()) {
      std::vector<std::vector<int>> next;
      for (const auto& k : frontier) {
        for (int i = 0; i < f.rank; ++i) {
          // fund coord i of the root: (C k)_i
          long long fi = 0;
          for (int j = 0; j < f.rank; ++j) fi += (long long)frd.cartan[i][j] * k[j];
          if (fi == -1) {
            auto k2 = k;
            k2[i] += 1;
            if (roots.insert(k2).second) next.push_back(k2);
          }
        }
      }
      frontier = std::move(next);
    }
    for (const auto& k : roots) {
      FactorRootData::Root r;
      r.simple_coords = k;
      r.fund_coords.assign(f.rank, 0);
      for (int i = 0; i < f.rank; ++i) {
        long long fi = 0;
        for (int j = 0; j < f.rank; ++j) fi += (long long)frd.cartan[i][j] * k[j];
        r.fund_coords[i] = (int)fi;
      }
      frd.positive_roots.push_back(std::move(r));
    }
    rd.factors.push_back(std::move(frd));
  }
  return rd;
}

std::optional<std::pair<Weight, int>> to_dominant_with_sign(const RootData& rd, const Weight& w) {
  Weight shifted = w + rd.rho();
  int sign = 1;
  for (size_t f = 0; f < rd.factors.size(); ++f) {
    auto& v = shifted.coords[f];
    const auto& C = rd.factors[f].cartan;
    int r = rd.factors[f].factor.rank;
    bool done = false;
    while (!done) {
      done = true;
      for (int i = 0; i < r; ++i) {
        if (v[i] == 0) return std::nullopt;  // wall
        if (v[i] < 0) {
          int vi = v[i];
          for (int j = 0; j < r; ++j) v[j] -= vi * C[j][i];
          sign = -sign;
          done = false;
          break;
        }
      }
    }
  }
  return std::make_pair(shifted - rd.rho(), sign);
}

bool is_dominant(const Weight& w) { return w.is_dominant(); }

}  // namespace chss
