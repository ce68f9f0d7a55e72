#include "chss/tables.hpp"

#include <functional>
#include <sstream>

namespace chss {

namespace {

Int binom(int n, int k) {
  Int num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= Int(n - i);
    den *= Int(i + 1);
  }
  return num / den;
}

FormalCharacter dual_char(const FormalCharacter& c) {
  FormalCharacter d;
  for (const auto& [w, m] : c) add_to(d, -w, m);
  return d;
}

}  // namespace

std::string irrsum_serialize(const Model& m, const IrrSum& s) {
  std::ostringstream os;
  for (const auto& [w, mult] : s)
    os << weight_to_string(m.rank, w) << "\t" << mult << "\t" << to_string(weyl_dimension(m.rd, w)) << "\n";
  return os.str();
}

IrrSum irrsum_parse(const Model& m, const std::string& text) {
  IrrSum s;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto t1 = line.find('\t');
    auto t2 = line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos) throw std::invalid_argument("irrsum_parse: bad line '" + line + "'");
    Weight w = parse_weight(m.rank, line.substr(0, t1));
    long long mult = std::stoll(line.substr(t1 + 1, t2 - t1 - 1));
    s[w] = mult;
  }
  return s;
}

ModelTables regenerate_tables(const Model& m, Cache* cache) {
  ModelTables t;
  t.model = m.name;
  FormalCharacter ct = m.T.character();
  FormalCharacter ctd = dual_char(ct);
  FormalCharacter cn = m.N.character();
  FormalCharacter cnd = dual_char(cn);
  Int n(m.n), a(m.a);

  auto row = [&](const std::string& label, const std::function<IrrSum()>& compute, Int expected) {
    TableRow r;
    r.label = label;
    std::string key = "tables|" + m.name + "|" + label;
    bool from_cache = false;
    if (cache) {
      auto hit = cache->get(key);
      if (hit) {
        r.sum = irrsum_parse(m, *hit);
        from_cache = true;
      }
    }
    if (!from_cache) {
      r.sum = compute();
      if (cache) cache->put(key, irrsum_serialize(m, r.sum));
    }
    r.mass = irrsum_dimension(m.rd, r.sum);
    r.expected = expected;
    t.rows.push_back(std::move(r));
  };

  row("T", [&] { return decompose(m.rd, ct); }, n);
  row("T*", [&] { return decompose(m.rd, ctd); }, n);
  row("N", [&] { return decompose(m.rd, cn); }, a);
  row("S1T*", [&] { return decompose(m.rd, ctd); }, n);
  row("S2T*", [&] { return decompose(m.rd, sym_power(m.rd, ctd, 2)); }, binom(m.n + 1, 2));
  row("S3T*", [&] { return sk_tstar(m, 3); }, binom(m.n + 2, 3));
  row("S3T*xN", [&] { return sk_tstar_n(m, 3); }, binom(m.n + 2, 3) * a);
  row("TxN*", [&] { return t_tensor_nstar(m); }, n * a);
  row("(TxN*)^T*c", [&] { return tn_star_complement(m); }, n * a - n);
  row("(TxN*)^T*cxT*",
      [&] {
        IrrSum comp = tn_star_complement(m);
        return decompose(m.rd, char_product(irrsum_character(m.rd, comp), ctd));
      },
      (n * a - n) * n);
  row("S4T*", [&] { return sk_tstar(m, 4); }, binom(m.n + 3, 4));
  row("S4T*xN", [&] { return sk_tstar_n(m, 4); }, binom(m.n + 3, 4) * a);
  {
    IrrSum tt = complement_in_endo(m.rd, m.T, true);
    Int exp_tt = irrsum_dimension(m.rd, tt);
    row("(TxT*)^rc", [&] { return tt; }, exp_tt);
    row("(TxT*)^rcxT*",
        [&] { return decompose(m.rd, char_product(irrsum_character(m.rd, tt), ctd)); }, exp_tt * n);
    IrrSum nn = complement_in_endo(m.rd, m.N, false);
    Int exp_nn = irrsum_dimension(m.rd, nn);
    row("(NxN*)^rc", [&] { return nn; }, exp_nn);
    row("(NxN*)^rcxT*",
        [&] { return decompose(m.rd, char_product(irrsum_character(m.rd, nn), ctd)); }, exp_nn * n);
  }
  return t;
}

std::string tables_markdown(const Model& m, const ModelTables& t) {
  std::ostringstream os;
  os << "## Decomposition tables: " << t.model << "\n\n";
  os << "| space | components | mass | expected |\n";
  os << "|---|---|---|---|\n";
  for (const auto& r : t.rows) {
    os << "| " << r.label << " | ";
    bool first = true;
    for (const auto& [w, mult] : r.sum) {
      if (!first) os << " ⊕ ";
      first = false;
      if (mult > 1) os << mult << "·";
      os << weight_to_string(m.rank, w);
      auto nm = cartan_name(m, w);
      if (nm) os << " {" << nm->to_string() << "}";
      os << " (dim " << to_string(weyl_dimension(m.rd, w)) << ")";
    }
    if (first) os << "0";
    os << " | " << to_string(r.mass) << " | " << to_string(r.expected)
       << (r.mass == r.expected ? " ✓" : " ✗") << " |\n";
  }
  return os.str();
}

}  // namespace chss
