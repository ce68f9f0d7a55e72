#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chss/explicit_module.hpp"

using namespace chss;

namespace {

// defining module of A_r with standard Chevalley action, highest weight first
ExplicitModule defining_a(int r) {
  ReductiveRank rk{{{Series::A, r, ""}}, 0};
  ExplicitModule m;
  m.rank = rk;
  int dim = r + 1;
  for (int p = 1; p <= dim; ++p) {
    m.labels.push_back("v" + std::to_string(p));
    Weight w = Weight::zero(rk);
    for (int i = 1; i <= r; ++i) {
      int c = 0;
      if (i == p) c += 1;
      if (i == p - 1) c -= 1;
      w.coords[0][i - 1] = c;
    }
    m.weights.push_back(w);
  }
  m.raising.resize(1);
  m.lowering.resize(1);
  for (int i = 1; i <= r; ++i) {
    SparseMat e = SparseMat::zero(dim, dim), f = SparseMat::zero(dim, dim);
    e.add(i - 1, i, QI(1));
    f.add(i, i - 1, QI(1));
    m.raising[0].push_back(e);
    m.lowering[0].push_back(f);
  }
  return m;
}

}  // namespace

TEST_CASE("structure identities for functor towers") {
  ExplicitModule v = defining_a(2);
  v.check_structure();
  ExplicitModule vd = dual_module(v);
  vd.check_structure();
  CHECK(vd.labels == v.labels);  // canonical label round trip
  ExplicitModule vdd = dual_module(vd);
  for (int i = 0; i < v.dim(); ++i) CHECK(vdd.weights[i] == v.weights[i]);

  ExplicitModule t = tensor_module(v, vd);
  t.check_structure();
  ExplicitModule s3 = sym_module(v, 3);
  s3.check_structure();
  ExplicitModule e2 = ext_module(v, 2);
  e2.check_structure();
}

TEST_CASE("functor characters match the character functors") {
  RootData rd = build_root_data({{{Series::A, 2, ""}}, 0});
  ExplicitModule v = defining_a(2);
  FormalCharacter cv = v.character();
  CHECK(tensor_module(v, v).character() == char_product(cv, cv));
  CHECK(sym_module(v, 3).character() == sym_power(rd, cv, 3));
  CHECK(ext_module(v, 2).character() == ext_power(rd, cv, 2));
}

TEST_CASE("exterior square of the A4 defining module has dimension 10") {
  ExplicitModule v = defining_a(4);
  ExplicitModule l2 = ext_module(v, 2);
  CHECK(l2.dim() == 10);
  l2.check_structure();
  RootData rd = build_root_data(v.rank);
  IrrSum s = decompose(rd, l2.character());
  REQUIRE(s.size() == 1);
  CHECK(s.begin()->first.coords[0] == std::vector<int>{0, 1, 0, 0});
}

TEST_CASE("highest weight spaces") {
  RootData rd = build_root_data({{{Series::A, 2, ""}}, 0});
  ExplicitModule v = defining_a(2);

  // irreducible at its own highest weight: the top basis vector
  Weight hw = Weight::zero(v.rank);
  hw.coords[0] = {1, 0};
  HwvSpace h = highest_weight_space(v, hw);
  CHECK(h.ambient_multiplicity == 1);
  CHECK(support_monomials(v, h) == std::set<std::string>{"v1"});

  // absent weight: explicit zero-multiplicity flag
  Weight absent = Weight::zero(v.rank);
  absent.coords[0] = {3, 3};
  HwvSpace none = highest_weight_space(v, absent);
  CHECK(none.ambient_multiplicity == 0);
  CHECK(none.basis.empty());

  // adjoint inside V ⊗ V*: hwv dimension equals multiplicity
  ExplicitModule t = tensor_module(v, dual_module(v));
  Weight ad = Weight::zero(v.rank);
  ad.coords[0] = {1, 1};
  CHECK(highest_weight_space(t, ad).ambient_multiplicity == 1);
  CHECK(highest_weight_space(t, Weight::zero(v.rank)).ambient_multiplicity == 1);

  // multiplicity check against the character route for S^2(V ⊗ V*)
  ExplicitModule s2 = sym_module(t, 2);
  IrrSum dec = decompose(rd, s2.character());
  for (const auto& [w, mult] : dec) CHECK(highest_weight_space(s2, w).ambient_multiplicity == mult);
}

TEST_CASE("kernel basis determinism and rank") {
  std::vector<std::vector<QI>> mat = {
      {QI(1), QI(2), QI(3)},
      {QI(2), QI(4), QI(6)},
  };
  CHECK(rank_of(mat) == 1);
  auto kb = kernel_basis(mat);
  CHECK(kb.size() == 2);
  for (const auto& v : kb) {
    QI s0 = v[0] * QI(1) + v[1] * QI(2) + v[2] * QI(3);
    CHECK(s0.is_zero());
  }
}
