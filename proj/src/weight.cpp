#include "chss/weight.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chss {

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  }
}

std::string to_string(const QI& v) {
  if (v.im == 0) return to_string(v.re);
  std::string im = to_string(v.im) + "i";
  if (v.re == 0) return im;
  if (v.im > 0) return to_string(v.re) + "+" + im;
  return to_string(v.re) + im;
}

std::string series_name(Series s) { return s == Series::A ? "A" : "D"; }

int ReductiveRank::coord_length() const {
  int n = torus_dim;
  for (const auto& f : factors) n += f.rank;
  return n;
}

bool operator==(const ReductiveRank& a, const ReductiveRank& b) {
  return a.factors == b.factors && a.torus_dim == b.torus_dim;
}

std::string ReductiveRank::fingerprint() const {
  std::ostringstream os;
  for (const auto& f : factors) os << series_name(f.series) << f.rank << ";";
  os << "@" << torus_dim;
  return os.str();
}

Weight Weight::zero(const ReductiveRank& rk) {
  Weight w;
  for (const auto& f : rk.factors) w.coords.emplace_back(f.rank, 0);
  w.charges.assign(rk.torus_dim, Rat(0));
  return w;
}

bool Weight::is_dominant() const {
  for (const auto& c : coords)
    for (int v : c)
      if (v < 0) return false;
  return true;
}

Weight Weight::operator+(const Weight& o) const {
  Weight r = *this;
  for (size_t f = 0; f < coords.size(); ++f)
    for (size_t i = 0; i < coords[f].size(); ++i) r.coords[f][i] += o.coords[f][i];
  for (size_t i = 0; i < charges.size(); ++i) r.charges[i] += o.charges[i];
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  Weight r = *this;
  for (size_t f = 0; f < coords.size(); ++f)
    for (size_t i = 0; i < coords[f].size(); ++i) r.coords[f][i] -= o.coords[f][i];
  for (size_t i = 0; i < charges.size(); ++i) r.charges[i] -= o.charges[i];
  return r;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& c : r.coords)
    for (int& v : c) v = -v;
  for (auto& q : r.charges) q = -q;
  return r;
}

Weight Weight::scaled(int k) const {
  Weight r = *this;
  for (auto& c : r.coords)
    for (int& v : c) v *= k;
  for (auto& q : r.charges) q *= k;
  return r;
}

bool operator<(const Weight& a, const Weight& b) {
  if (a.coords != b.coords) return a.coords < b.coords;
  return a.charges < b.charges;
}

std::vector<std::vector<int>> sl_part(const Weight& w) { return w.coords; }

std::string weight_to_string(const ReductiveRank& rk, const Weight& w) {
  std::ostringstream os;
  for (size_t f = 0; f < rk.factors.size(); ++f) {
    if (f) os << " * ";
    const auto& fac = rk.factors[f];
    if (!fac.label.empty())
      os << fac.label << "(" << series_name(fac.series) << fac.rank << ")";
    else
      os << series_name(fac.series) << fac.rank;
    os << "[";
    for (size_t i = 0; i < w.coords[f].size(); ++i) {
      if (i) os << ",";
      os << w.coords[f][i];
    }
    os << "]";
  }
  if (rk.torus_dim > 0) {
    if (!rk.factors.empty()) os << " ";
    os << "@ (";
    for (int i = 0; i < rk.torus_dim; ++i) {
      if (i) os << ",";
      os << to_string(w.charges[i]);
    }
    os << ")";
  }
  return os.str();
}

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;
  void skip_ws() {
    while (pos < s.size() && s[pos] == ' ') ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw std::invalid_argument("weight parse: expected '" + std::string(1, c) + "' in '" + s + "'");
  }
  std::string token(const char* stops) {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && !strchr(stops, s[pos])) ++pos;
    std::string t = s.substr(start, pos - start);
    while (!t.empty() && t.back() == ' ') t.pop_back();
    return t;
  }
};

}  // namespace

Weight parse_weight(const ReductiveRank& rk, const std::string& s) {
  Weight w = Weight::zero(rk);
  Cursor c{s};
  for (size_t f = 0; f < rk.factors.size(); ++f) {
    if (f) c.expect('*');
    std::string head = c.token("[");
    c.expect('[');
    // head is either "A2" or "B(A2)"; validate the series/rank part
    std::string core = head;
    auto open = head.find('(');
    if (open != std::string::npos) {
      auto close = head.find(')');
      if (close == std::string::npos || close < open) throw std::invalid_argument("weight parse: bad factor name in '" + s + "'");
      core = head.substr(open + 1, close - open - 1);
    }
    std::string expected = series_name(rk.factors[f].series) + std::to_string(rk.factors[f].rank);
    if (core != expected)
      throw std::invalid_argument("weight parse: factor " + std::to_string(f) + " is " + expected + ", got '" + core + "'");
    for (int i = 0; i < rk.factors[f].rank; ++i) {
      std::string t = c.token(i + 1 == rk.factors[f].rank ? "]" : ",");
      if (i + 1 == rk.factors[f].rank)
        c.expect(']');
      else
        c.expect(',');
      w.coords[f][i] = std::stoi(t);
    }
  }
  if (rk.torus_dim > 0) {
    c.expect('@');
    c.expect('(');
    for (int i = 0; i < rk.torus_dim; ++i) {
      std::string t = c.token(i + 1 == rk.torus_dim ? ")" : ",");
      if (i + 1 == rk.torus_dim)
        c.expect(')');
      else
        c.expect(',');
      w.charges[i] = parse_rat(t);
    }
  }
  c.skip_ws();
  if (c.pos != s.size()) throw std::invalid_argument("weight parse: trailing garbage in '" + s + "'");
  return w;
}

}  // namespace chss
