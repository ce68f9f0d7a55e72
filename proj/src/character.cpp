#include "chss/character.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace chss {

void add_to(FormalCharacter& chi, const Weight& w, long long m) {
  if (m == 0) return;
  auto it = chi.find(w);
  if (it == chi.end()) {
    chi.emplace(w, m);
  } else {
    it->second += m;
    if (it->second == 0) chi.erase(it);
  }
}

Int char_mass(const FormalCharacter& chi) {
  Int s = 0;
  for (const auto& [w, m] : chi) s += m;
  return s;
}

FormalCharacter char_product(const FormalCharacter& a, const FormalCharacter& b) {
  FormalCharacter r;
  if (a.size() > b.size()) return char_product(b, a);
  for (const auto& [wa, ma] : a)
    for (const auto& [wb, mb] : b) add_to(r, wa + wb, ma * mb);
  return r;
}

FormalCharacter char_sum(const FormalCharacter& a, const FormalCharacter& b) {
  FormalCharacter r = a;
  for (const auto& [w, m] : b) add_to(r, w, m);
  return r;
}

namespace {

using FactorWeights = std::map<std::vector<int>, long long>;

std::vector<int> factor_dominant_rep(const FactorRootData& frd, std::vector<int> v) {
  const auto& C = frd.cartan;
  int r = frd.factor.rank;
  bool done = false;
  while (!done) {
    done = true;
    for (int i = 0; i < r; ++i) {
      if (v[i] < 0) {
        int vi = v[i];
        for (int j = 0; j < r; ++j) v[j] -= vi * C[j][i];
        done = false;
        break;
      }
    }
  }
  return v;
}

// Dominant weights mu <= lam together with k = C^{-1}(lam - mu).
struct DomWeight {
  std::vector<int> mu;
  long long height;
};

std::vector<DomWeight> dominant_weights_below(const FactorRootData& frd, const std::vector<int>& lam) {
  int r = frd.factor.rank;
  // bound: k_i <= [C^{-1} lam]_i (C^{-1} entrywise positive for A, D)
  std::vector<long long> kmax(r, 0);
  for (int i = 0; i < r; ++i) {
    Rat b(0);
    for (int j = 0; j < r; ++j) b += frd.cartan_inv[i][j] * Rat(lam[j]);
    Int fl = numerator(b) / denominator(b);  // floor for nonnegative b
    kmax[i] = fl.convert_to<long long>();
    if (kmax[i] < 0) kmax[i] = 0;
  }
  std::vector<DomWeight> out;
  std::vector<long long> k(r, 0);
  std::vector<int> mu(lam);
  // depth-first over the k-box with incremental mu = lam - C k
  std::vector<int> pos;
  std::function<void(int)> rec = [&](int i) {
    if (i == r) {
      for (int j = 0; j < r; ++j)
        if (mu[j] < 0) return;
      long long h = std::accumulate(k.begin(), k.end(), 0LL);
      out.push_back({mu, h});
      return;
    }
    for (k[i] = 0; k[i] <= kmax[i]; ++k[i]) {
      rec(i + 1);
      for (int j = 0; j < r; ++j) mu[j] -= frd.cartan[j][i];
    }
    for (int j = 0; j < r; ++j) mu[j] += frd.cartan[j][i] * (int)(kmax[i] + 1);
    k[i] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end(), [](const DomWeight& a, const DomWeight& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.mu < b.mu;
  });
  return out;
}

void weyl_orbit_expand(const FactorRootData& frd, const std::vector<int>& mu, long long mult, FactorWeights& out) {
  const auto& C = frd.cartan;
  int r = frd.factor.rank;
  std::vector<std::vector<int>> frontier{mu};
  std::set<std::vector<int>> seen{mu};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& v : frontier) {
      out[v] += mult;
      for (int i = 0; i < r; ++i) {
        if (v[i] <= 0) continue;  // reflect strictly downward; reaches the full orbit from the dominant point
        auto w = v;
        int vi = v[i];
        for (int j = 0; j < r; ++j) w[j] -= vi * C[j][i];
        if (seen.insert(w).second) next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
}

// Freudenthal weight multiplicities for one simple factor.
FactorWeights factor_irr_weights(const FactorRootData& frd, const std::vector<int>& lam) {
  for (int v : lam)
    if (v < 0) throw std::invalid_argument("factor_irr_weights: non-dominant highest weight");
  auto doms = dominant_weights_below(frd, lam);
  std::map<std::vector<int>, long long> dom_mult;
  std::vector<int> rho(frd.rho);
  std::vector<int> lam_rho(lam);
  for (size_t i = 0; i < lam_rho.size(); ++i) lam_rho[i] += 1;
  Rat norm_lam = frd.form(lam_rho, lam_rho);

  for (const auto& dw : doms) {
    if (dw.height == 0) {
      dom_mult[dw.mu] = 1;
      continue;
    }
    Rat num(0);
    for (const auto& alpha : frd.positive_roots) {
      std::vector<int> nu = dw.mu;
      for (int t = 1;; ++t) {
        for (int j = 0; j < frd.factor.rank; ++j) nu[j] += alpha.fund_coords[j];
        auto rep = factor_dominant_rep(frd, nu);
        auto it = dom_mult.find(rep);
        if (it == dom_mult.end()) break;  // left the weight hull
        Rat pr = frd.form(nu, alpha.fund_coords);
        num += Rat(2) * Rat(it->second) * pr;
      }
    }
    std::vector<int> mu_rho = dw.mu;
    for (size_t i = 0; i < mu_rho.size(); ++i) mu_rho[i] += 1;
    Rat den = norm_lam - frd.form(mu_rho, mu_rho);
    if (den == 0) throw std::runtime_error("Freudenthal: zero denominator");
    Rat m = num / den;
    if (denominator(m) != 1) throw std::runtime_error("Freudenthal: non-integral multiplicity");
    dom_mult[dw.mu] = numerator(m).convert_to<long long>();
  }

  FactorWeights full;
  for (const auto& [mu, m] : dom_mult)
    if (m != 0) weyl_orbit_expand(frd, mu, m, full);
  return full;
}

struct IrrCacheKey {
  std::string fp;
  Weight lam;
  bool operator<(const IrrCacheKey& o) const {
    if (fp != o.fp) return fp < o.fp;
    return lam < o.lam;
  }
};

std::map<IrrCacheKey, FormalCharacter>& irr_cache() {
  static std::map<IrrCacheKey, FormalCharacter> c;
  return c;
}
std::mutex& irr_cache_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

Int weyl_dimension(const RootData& rd, const Weight& lam) {
  if (!lam.is_dominant()) throw std::invalid_argument("weyl_dimension: non-dominant weight");
  Int num = 1, den = 1;
  for (size_t f = 0; f < rd.factors.size(); ++f) {
    const auto& frd = rd.factors[f];
    for (const auto& alpha : frd.positive_roots) {
      long long lp = frd.coroot_pairing(lam.coords[f], alpha) ;
      long long rp = 0;
      for (int v : alpha.simple_coords) rp += v;
      num *= Int(lp + rp);
      den *= Int(rp);
    }
  }
  if (num % den != 0) throw std::runtime_error("weyl_dimension: non-exact division");
  return num / den;
}

Int irrsum_dimension(const RootData& rd, const IrrSum& s) {
  Int d = 0;
  for (const auto& [w, m] : s) d += Int(m) * weyl_dimension(rd, w);
  return d;
}

FormalCharacter irr_character(const RootData& rd, const Weight& lam) {
  if (!lam.is_dominant()) throw std::invalid_argument("irr_character: non-dominant weight");
  IrrCacheKey key{rd.rank.fingerprint(), lam};
  {
    std::lock_guard<std::mutex> g(irr_cache_mutex());
    auto it = irr_cache().find(key);
    if (it != irr_cache().end()) return it->second;
  }
  std::vector<FactorWeights> per_factor;
  per_factor.reserve(rd.factors.size());
  for (size_t f = 0; f < rd.factors.size(); ++f) per_factor.push_back(factor_irr_weights(rd.factors[f], lam.coords[f]));

  FormalCharacter chi;
  Weight w = Weight::zero(rd.rank);
  w.charges = lam.charges;
  std::function<void(size_t, long long)> rec = [&](size_t f, long long mult) {
    if (f == per_factor.size()) {
      add_to(chi, w, mult);
      return;
    }
    for (const auto& [mu, m] : per_factor[f]) {
      w.coords[f] = mu;
      rec(f + 1, mult * m);
    }
    w.coords[f].assign(rd.factors[f].factor.rank, 0);
  };
  rec(0, 1);
  {
    std::lock_guard<std::mutex> g(irr_cache_mutex());
    irr_cache().emplace(key, chi);
  }
  return chi;
}

namespace {

Rat weight_height(const RootData& rd, const Weight& w) {
  Rat h(0);
  for (size_t f = 0; f < rd.factors.size(); ++f) {
    const auto& inv = rd.factors[f].cartan_inv;
    int r = rd.factors[f].factor.rank;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) h += inv[i][j] * Rat(w.coords[f][j]);
  }
  return h;
}

}  // namespace

IrrSum decompose(const RootData& rd, const FormalCharacter& chi_in) {
  FormalCharacter chi = chi_in;
  // For a genuine character the dominant support can only shrink while
  // peeling, so that one snapshot ordered by (height desc, lex desc) visits
  // maximal weights first.
  struct Entry {
    Rat h;
    Weight w;
  };
  std::vector<Entry> doms;
  for (const auto& [w, m] : chi) {
    (void)m;
    if (w.is_dominant()) doms.push_back({weight_height(rd, w), w});
  }
  std::sort(doms.begin(), doms.end(), [](const Entry& a, const Entry& b) {
    if (a.h != b.h) return a.h > b.h;
    return b.w < a.w;
  });
  IrrSum out;
  for (const auto& e : doms) {
    auto it = chi.find(e.w);
    if (it == chi.end()) continue;
    long long m = it->second;
    if (m < 0) throw std::runtime_error("decompose: negative multiplicity at a maximal weight (not a genuine character)");
    out[e.w] += m;
    FormalCharacter ic = irr_character(rd, e.w);
    for (const auto& [w, im] : ic) add_to(chi, w, -m * im);
  }
  if (!chi.empty()) throw std::runtime_error("decompose: nonzero remainder (not a genuine character)");
  return out;
}

IrrSum tensor_decompose(const RootData& rd, const Weight& lam, const Weight& mu) {
  if (!lam.is_dominant() || !mu.is_dominant()) throw std::invalid_argument("tensor_decompose: non-dominant input");
  // enumerate the smaller module
  Weight small = lam, big = mu;
  if (weyl_dimension(rd, small) > weyl_dimension(rd, big)) std::swap(small, big);
  FormalCharacter ws = irr_character(rd, small);
  std::map<Weight, long long> acc;
  for (const auto& [nu, m] : ws) {
    Weight cand = big + nu;
    auto ds = to_dominant_with_sign(rd, cand);
    if (!ds) continue;
    auto [dom, sign] = *ds;
    acc[dom] += sign * m;
  }
  IrrSum out;
  for (const auto& [w, m] : acc) {
    if (m == 0) continue;
    if (m < 0) throw std::runtime_error("tensor_decompose: negative accumulated multiplicity");
    Weight ww = w;
    for (size_t i = 0; i < ww.charges.size(); ++i) ww.charges[i] = lam.charges[i] + mu.charges[i];
    out[ww] += m;
  }
  return out;
}

FormalCharacter adams(const FormalCharacter& chi, int k) {
  FormalCharacter r;
  for (const auto& [w, m] : chi) add_to(r, w.scaled(k), m);
  return r;
}

namespace {

FormalCharacter power_newton(const RootData& rd, const FormalCharacter& chi, int k, bool sym) {
  if (k < 0) throw std::invalid_argument("power: negative k");
  std::vector<FormalCharacter> table(k + 1);
  Weight z = Weight::zero(rd.rank);
  table[0] = FormalCharacter{{z, 1}};
  for (int n = 1; n <= k; ++n) {
    FormalCharacter acc;
    for (int i = 1; i <= n; ++i) {
      FormalCharacter term = char_product(adams(chi, i), table[n - i]);
      long long s = sym ? 1 : ((i % 2 == 1) ? 1 : -1);
      for (const auto& [w, m] : term) add_to(acc, w, s * m);
    }
    FormalCharacter res;
    for (const auto& [w, m] : acc) {
      if (m % n != 0) throw std::runtime_error("power: non-exact division (broken character input)");
      add_to(res, w, m / n);
    }
    table[n] = std::move(res);
  }
  return table[k];
}

}  // namespace

FormalCharacter sym_power(const RootData& rd, const FormalCharacter& chi, int k) { return power_newton(rd, chi, k, true); }
FormalCharacter ext_power(const RootData& rd, const FormalCharacter& chi, int k) { return power_newton(rd, chi, k, false); }

IrrSum sym_power_decompose(const RootData& rd, const Weight& lam, int k) {
  return decompose(rd, sym_power(rd, irr_character(rd, lam), k));
}

Weight cartan_component(const Weight& lam, const Weight& mu) { return lam + mu; }

FormalCharacter irrsum_character(const RootData& rd, const IrrSum& s) {
  FormalCharacter chi;
  for (const auto& [w, m] : s) {
    FormalCharacter ic = irr_character(rd, w);
    for (const auto& [ww, im] : ic) add_to(chi, ww, m * im);
  }
  return chi;
}

namespace {

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Enumerate the Weyl group of one factor as (new fund coords, sign) actions.
// Realized in epsilon coordinates: permutations for A_r, signed permutations
// with an even number of sign changes for D_r.
struct FactorWeyl {
  // each element: applied to a weight in doubled epsilon coordinates
  std::vector<std::vector<int>> perms;  // image positions
  std::vector<std::vector<int>> signs;  // +-1 per slot (D only)
  std::vector<int> dets;
};

long long factor_weyl_order(const SimpleFactor& f) {
  if (f.series == Series::A) return factorial(f.rank + 1);
  long long o = factorial(f.rank);
  for (int i = 0; i < f.rank - 1; ++i) o *= 2;
  return o;
}

std::vector<Rat> fund_to_eps(const SimpleFactor& f, const std::vector<int>& lam) {
  int r = f.rank;
  if (f.series == Series::A) {
    std::vector<Rat> x(r + 1, Rat(0));
    for (int i = r - 1; i >= 0; --i) x[i] = x[i + 1] + lam[i];
    return x;  // defined up to adding a constant; differences matter
  }
  std::vector<Rat> x(r, Rat(0));
  x[r - 1] = (Rat(lam[r - 1]) - Rat(lam[r - 2])) / 2;
  x[r - 2] = (Rat(lam[r - 1]) + Rat(lam[r - 2])) / 2;
  for (int i = r - 3; i >= 0; --i) x[i] = x[i + 1] + lam[i];
  return x;
}

bool eps_to_fund(const SimpleFactor& f, const std::vector<Rat>& x, std::vector<int>& out) {
  int r = f.rank;
  out.assign(r, 0);
  auto push = [&](int i, const Rat& v) {
    if (denominator(v) != 1) return false;
    out[i] = (int)numerator(v).convert_to<long long>();
    return true;
  };
  if (f.series == Series::A) {
    for (int i = 0; i < r; ++i)
      if (!push(i, x[i] - x[i + 1])) return false;
    return true;
  }
  for (int i = 0; i < r - 2; ++i)
    if (!push(i, x[i] - x[i + 1])) return false;
  if (!push(r - 2, x[r - 2] - x[r - 1])) return false;
  if (!push(r - 1, x[r - 2] + x[r - 1])) return false;
  return true;
}

void enumerate_perms(int n, std::vector<std::vector<int>>& out) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
}

int perm_sign(const std::vector<int>& p) {
  int s = 1;
  std::vector<bool> seen(p.size(), false);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

FactorWeyl enumerate_factor_weyl(const SimpleFactor& f) {
  FactorWeyl w;
  int n = f.series == Series::A ? f.rank + 1 : f.rank;
  std::vector<std::vector<int>> perms;
  enumerate_perms(n, perms);
  if (f.series == Series::A) {
    for (auto& p : perms) {
      w.perms.push_back(p);
      w.signs.emplace_back();
      w.dets.push_back(perm_sign(p));
    }
    return w;
  }
  // D: even number of minus signs
  for (auto& p : perms) {
    int ps = perm_sign(p);
    for (long long mask = 0; mask < (1LL << n); ++mask) {
      if (__builtin_popcountll(mask) % 2 != 0) continue;
      std::vector<int> sg(n, 1);
      for (int i = 0; i < n; ++i)
        if (mask & (1LL << i)) sg[i] = -1;
      w.perms.push_back(p);
      w.signs.push_back(sg);
      w.dets.push_back(ps);
    }
  }
  return w;
}

}  // namespace

bool weyl_enumerable(const RootData& rd, long long cap) {
  long long total = 1;
  for (const auto& f : rd.factors) {
    total *= factor_weyl_order(f.factor);
    if (total > cap) return false;
  }
  return true;
}

long long mult_in_character(const RootData& rd, const FormalCharacter& chi, const Weight& nu) {
  if (!nu.is_dominant()) throw std::invalid_argument("mult_in_character: non-dominant nu");
  if (!weyl_enumerable(rd)) throw std::runtime_error("mult_in_character: Weyl group too large to enumerate");
  size_t nf = rd.factors.size();
  std::vector<FactorWeyl> weyl(nf);
  std::vector<std::vector<Rat>> shifted(nf);
  for (size_t f = 0; f < nf; ++f) {
    weyl[f] = enumerate_factor_weyl(rd.rank.factors[f]);
    auto lam_rho = nu.coords[f];
    for (auto& v : lam_rho) v += 1;
    shifted[f] = fund_to_eps(rd.rank.factors[f], lam_rho);
  }
  long long total = 0;
  // iterate over the product of factor Weyl groups
  std::vector<size_t> idx(nf, 0);
  Weight probe = Weight::zero(rd.rank);
  probe.charges = nu.charges;
  while (true) {
    int det = 1;
    bool ok = true;
    for (size_t f = 0; f < nf && ok; ++f) {
      const auto& W = weyl[f];
      size_t i = idx[f];
      const auto& x = shifted[f];
      std::vector<Rat> y(x.size());
      for (size_t s = 0; s < x.size(); ++s) {
        Rat v = x[W.perms[i][s]];
        if (!W.signs[i].empty() && W.signs[i][s] < 0) v = -v;
        y[s] = v;
      }
      std::vector<int> fc;
      if (!eps_to_fund(rd.rank.factors[f], y, fc)) {
        ok = false;
        break;
      }
      for (int j = 0; j < rd.rank.factors[f].rank; ++j) fc[j] -= 1;  // subtract rho
      probe.coords[f] = fc;
      det *= W.dets[i];
    }
    if (ok) {
      auto it = chi.find(probe);
      if (it != chi.end()) total += det * it->second;
    }
    size_t f = 0;
    while (f < nf && ++idx[f] == weyl[f].perms.size()) {
      idx[f] = 0;
      ++f;
    }
    if (f == nf) break;
  }
  return total;
}

}  // namespace chss
