#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chss/rational.hpp"

namespace chss {

enum class Series { A, D };

struct SimpleFactor {
  Series series = Series::A;
  int rank = 1;
  std::string label;  // optional display name ("A", "B", ...)

  friend bool operator==(const SimpleFactor& a, const SimpleFactor& b) {
    return a.series == b.series && a.rank == b.rank;
  }
};

std::string series_name(Series s);

struct ReductiveRank {
  std::vector<SimpleFactor> factors;
  int torus_dim = 0;

  int coord_length() const;
  friend bool operator==(const ReductiveRank& a, const ReductiveRank& b);
  std::string fingerprint() const;
};

// Weight-lattice point: fundamental-weight coordinates per simple factor
// (Bourbaki numbering) plus exact rational central charges.
struct Weight {
  std::vector<std::vector<int>> coords;
  std::vector<Rat> charges;

  static Weight zero(const ReductiveRank& rk);

  bool is_dominant() const;
  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight scaled(int k) const;

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.coords == b.coords && a.charges == b.charges;
  }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b);
};

// Textual grammar: `A1[j] * B(A2)[i,k] * D5[a,b,c,d,e] @ (c1,c2,...)`.
// Round trips are bit-exact; the charge block is omitted when torus_dim = 0.
std::string weight_to_string(const ReductiveRank& rk, const Weight& w);
Weight parse_weight(const ReductiveRank& rk, const std::string& s);

// Simple-factor part only (charges dropped); used by the order-5 filter.
std::vector<std::vector<int>> sl_part(const Weight& w);

}  // namespace chss
