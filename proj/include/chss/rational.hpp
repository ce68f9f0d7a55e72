#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <stdexcept>
#include <string>

namespace chss {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& v) { return v.str(); }

inline std::string to_string(const Rat& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

Rat parse_rat(const std::string& s);

// Gaussian rational a + b*i.  All model-level linear algebra runs over this
// field; the imaginary unit enters only through the Severi null frames.
struct QI {
  Rat re, im;

  QI() = default;
  QI(int v) : re(v) {}
  QI(Rat r) : re(std::move(r)) {}
  QI(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static QI i() { return QI(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  QI operator-() const { return QI(-re, -im); }
  QI conj() const { return QI(re, -im); }

  QI& operator+=(const QI& o) { re += o.re; im += o.im; return *this; }
  QI& operator-=(const QI& o) { re -= o.re; im -= o.im; return *this; }

  friend QI operator+(QI a, const QI& b) { a += b; return a; }
  friend QI operator-(QI a, const QI& b) { a -= b; return a; }
  friend QI operator*(const QI& a, const QI& b) {
    return QI(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  QI& operator*=(const QI& o) { *this = *this * o; return *this; }

  friend QI operator/(const QI& a, const QI& b) {
    Rat n = b.re * b.re + b.im * b.im;
    if (n == 0) throw std::domain_error("QI division by zero");
    return QI((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
  }
  QI& operator/=(const QI& o) { *this = *this / o; return *this; }

  friend bool operator==(const QI& a, const QI& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const QI& a, const QI& b) { return !(a == b); }
  friend bool operator<(const QI& a, const QI& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }
};

std::string to_string(const QI& v);

}  // namespace chss
