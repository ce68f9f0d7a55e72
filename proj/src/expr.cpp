#include "chss/expr.hpp"

#include <stdexcept>

namespace chss {

namespace {

struct Parser {
  const Model& m;
  std::string s;
  size_t pos = 0;

  void ws() {
    while (pos < s.size() && s[pos] == ' ') ++pos;
  }
  bool lit(const std::string& t) {
    ws();
    if (s.compare(pos, t.size(), t) == 0) {
      pos += t.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("expression parse error at position " + std::to_string(pos) + ": " + why);
  }

  FormalCharacter dual(const FormalCharacter& c) {
    FormalCharacter d;
    for (const auto& [w, mult] : c) add_to(d, -w, mult);
    return d;
  }

  FormalCharacter atom() {
    ws();
    if (lit("T*")) return dual(m.T.character());
    if (lit("N*")) return dual(m.N.character());
    if (lit("T")) return m.T.character();
    if (lit("N")) return m.N.character();
    if (lit("S") || lit("L") || lit("Λ")) {
      bool ext = s[pos - 1] != 'S';
      size_t start = pos;
      while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
      if (pos == start) fail("expected power after S/L");
      int k = std::stoi(s.substr(start, pos - start));
      if (!lit("(")) fail("expected '('");
      FormalCharacter inner = expr();
      if (!lit(")")) fail("expected ')'");
      return ext ? ext_power(m.rd, inner, k) : sym_power(m.rd, inner, k);
    }
    if (lit("(")) {
      FormalCharacter inner = expr();
      if (!lit(")")) fail("expected ')'");
      return inner;
    }
    fail("expected T, T*, N, N*, S<k>(...), L<k>(...) or '('");
  }

  FormalCharacter term() {
    FormalCharacter c = atom();
    ws();
    if (lit("^frc")) {
      // complement of the symmetry algebra in X⊗X*: valid when the character
      // matches T⊗T* or N⊗N*
      FormalCharacter tt = char_product(m.T.character(), dual(m.T.character()));
      FormalCharacter nn = char_product(m.N.character(), dual(m.N.character()));
      IrrSum comp;
      if (c == tt)
        comp = complement_in_endo(m.rd, m.T, true);
      else if (c == nn)
        comp = complement_in_endo(m.rd, m.N, false);
      else
        fail("^frc applies to T⊗T* or N⊗N*");
      return irrsum_character(m.rd, comp);
    }
    if (lit("^T*c")) {
      FormalCharacter tn = char_product(m.T.character(), dual(m.N.character()));
      if (!(c == tn)) fail("^T*c applies to T⊗N*");
      return irrsum_character(m.rd, tn_star_complement(m));
    }
    return c;
  }

  FormalCharacter expr() {
    FormalCharacter c = term();
    while (true) {
      ws();
      if (lit("⊗") || lit("x")) {
        c = char_product(c, term());
      } else {
        break;
      }
    }
    return c;
  }
};

}  // namespace

IrrSum evaluate_expression(const Model& m, const std::string& e) {
  Parser p{m, e};
  FormalCharacter c = p.expr();
  p.ws();
  if (p.pos != e.size()) p.fail("trailing input");
  return decompose(m.rd, c);
}

}  // namespace chss
