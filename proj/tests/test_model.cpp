#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chss/bertini.hpp"
#include "chss/model.hpp"
#include "chss/orchestrator.hpp"

using namespace chss;

namespace {

Weight mk(const Model& m, std::vector<std::vector<int>> coords, std::vector<Rat> ch) {
  Weight w = Weight::zero(m.rank);
  w.coords = std::move(coords);
  w.charges = std::move(ch);
  return w;
}

bool is_extreme(const ExplicitModule& mod, int idx, bool lowest) {
  std::map<int, QI> v{{idx, QI(1)}};
  for (size_t f = 0; f < mod.raising.size(); ++f)
    for (size_t i = 0; i < mod.raising[f].size(); ++i) {
      const SparseMat& op = lowest ? mod.lowering[f][i] : mod.raising[f][i];
      if (!op.apply(v).empty()) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("registry") {
  CHECK_THROWS_WITH_AS(build_model("quadric"), doctest::Contains("quadric"), std::invalid_argument);
  CHECK_THROWS(build_model("nonsense"));
  CHECK_THROWS(build_model("G(2,4)"));
}

TEST_CASE("G(2,5): dimensions, structure, invariance") {
  Model m = build_model("G(2,5)");
  CHECK(m.n == 6);
  CHECK(m.a == 3);
  m.T.check_structure();
  m.N.check_structure();
  m.check_ii_invariance();

  // e_(13) is the lowest weight vector of T
  CHECK(is_extreme(m.T, m.tangent_weight_index("(13)"), true));
  // hw(N) = e_(45)
  CHECK(is_extreme(m.N, m.normal_weight_index("(45)"), false));

  // charges
  for (const auto& w : m.T.weights) CHECK(w.charges[0] == Rat(1));
  for (const auto& w : m.N.weights) CHECK(w.charges[0] == Rat(2));

  // module identities: T = A1[1] x B(A2)[1,0] @ 1, N = A2[0,1] @ 2
  IrrSum tdec = decompose(m.rd, m.T.character());
  REQUIRE(tdec.size() == 1);
  CHECK(tdec.begin()->first == mk(m, {{1}, {1, 0}}, {Rat(1)}));
  IrrSum ndec = decompose(m.rd, m.N.character());
  REQUIRE(ndec.size() == 1);
  CHECK(ndec.begin()->first == mk(m, {{0}, {0, 1}}, {Rat(2)}));
}

TEST_CASE("G(2,5): the order-two table rows") {
  Model m = build_model("G(2,5)");
  // S2T* = T*2 + N*
  FormalCharacter ctd;
  for (const auto& [w, c] : m.T.character()) add_to(ctd, -w, c);
  IrrSum s2 = decompose(m.rd, sym_power(m.rd, ctd, 2));
  IrrSum s2_expected{{mk(m, {{2}, {0, 2}}, {Rat(-2)}), 1}, {mk(m, {{0}, {1, 0}}, {Rat(-2)}), 1}};
  CHECK(s2 == s2_expected);

  // S3T* = T*3 + N*T*
  IrrSum s3 = sk_tstar(m, 3);
  IrrSum s3_expected{{mk(m, {{3}, {0, 3}}, {Rat(-3)}), 1}, {mk(m, {{1}, {1, 1}}, {Rat(-3)}), 1}};
  CHECK(s3 == s3_expected);

  // S3T*xN = T*3N + TT*2 + (N*T*)N + N*T + T*, total 168
  IrrSum s3n = sk_tstar_n(m, 3);
  IrrSum s3n_expected{
      {mk(m, {{3}, {0, 4}}, {Rat(-1)}), 1},  // T*3N
      {mk(m, {{3}, {1, 2}}, {Rat(-1)}), 1},  // TT*2
      {mk(m, {{1}, {1, 2}}, {Rat(-1)}), 1},  // (N*T*)N
      {mk(m, {{1}, {2, 0}}, {Rat(-1)}), 1},  // N*T
      {mk(m, {{1}, {0, 1}}, {Rat(-1)}), 1},  // T*
  };
  CHECK(s3n == s3n_expected);
  CHECK(irrsum_dimension(m.rd, s3n) == 168);

  // TxN* = TN* + T*
  IrrSum tn = t_tensor_nstar(m);
  IrrSum tn_expected{{mk(m, {{1}, {2, 0}}, {Rat(-1)}), 1}, {mk(m, {{1}, {0, 1}}, {Rat(-1)}), 1}};
  CHECK(tn == tn_expected);

  // (TxN*)^{T*c} x T*
  IrrSum f4 = occurrence_filter_set(m, 4);
  IrrSum f4_expected{
      {mk(m, {{2}, {2, 1}}, {Rat(-2)}), 1},
      {mk(m, {{2}, {1, 0}}, {Rat(-2)}), 1},
      {mk(m, {{0}, {2, 1}}, {Rat(-2)}), 1},
      {mk(m, {{0}, {1, 0}}, {Rat(-2)}), 1},
  };
  CHECK(f4 == f4_expected);

  // S4T*xN: seven components, mass 378
  IrrSum s4n = sk_tstar_n(m, 4);
  IrrSum s4n_expected{
      {mk(m, {{4}, {0, 5}}, {Rat(-2)}), 1}, {mk(m, {{4}, {1, 3}}, {Rat(-2)}), 1},
      {mk(m, {{2}, {1, 3}}, {Rat(-2)}), 1}, {mk(m, {{2}, {2, 1}}, {Rat(-2)}), 1},
      {mk(m, {{2}, {0, 2}}, {Rat(-2)}), 1}, {mk(m, {{0}, {2, 1}}, {Rat(-2)}), 1},
      {mk(m, {{0}, {1, 0}}, {Rat(-2)}), 1},
  };
  CHECK(s4n == s4n_expected);
  CHECK(irrsum_dimension(m.rd, s4n) == 378);

  // (NxN*)^{rc} is empty, (TxT*)^{rc} is the single component A1[2]*B[1,1]
  IrrSum nn = complement_in_endo(m.rd, m.N, false);
  CHECK(nn.empty());
  IrrSum tt = complement_in_endo(m.rd, m.T, true);
  REQUIRE(tt.size() == 1);
  CHECK(tt.begin()->first == mk(m, {{2}, {1, 1}}, {Rat(0)}));
  IrrSum f3 = occurrence_filter_set(m, 3);
  CHECK(f3.size() == 6);
  CHECK(f3.count(mk(m, {{3}, {1, 2}}, {Rat(-1)})));        // TT*2 occurs
  CHECK(f3.count(mk(m, {{1}, {1, 2}}, {Rat(-1)})));        // (N*T*)N occurs
  CHECK_FALSE(f3.count(mk(m, {{3}, {0, 4}}, {Rat(-1)})));  // T*3N does not
}

TEST_CASE("G(2,5): tensor oracle checkpoints") {
  Model m = build_model("G(2,5)");
  // T ⊗ T* contains exactly one trivial summand and one copy of each simple
  // factor adjoint; mass 36
  FormalCharacter ct = m.T.character(), ctd;
  for (const auto& [w, c] : ct) add_to(ctd, -w, c);
  IrrSum tt = decompose(m.rd, char_product(ct, ctd));
  CHECK(irrsum_dimension(m.rd, tt) == 36);
  CHECK(tt.at(Weight::zero(m.rank)) == 1);
  CHECK(tt.at(mk(m, {{2}, {0, 0}}, {Rat(0)})) == 1);
  CHECK(tt.at(mk(m, {{0}, {1, 1}}, {Rat(0)})) == 1);
}

TEST_CASE("S10: dimensions, structure, tables") {
  Model m = build_model("S10");
  CHECK(m.n == 10);
  CHECK(m.a == 5);
  m.T.check_structure();
  m.N.check_structure();
  m.check_ii_invariance();
  CHECK(is_extreme(m.T, m.tangent_weight_index("(12)"), true));
  CHECK(is_extreme(m.N, m.normal_weight_index("1"), false));

  IrrSum tdec = decompose(m.rd, m.T.character());
  REQUIRE(tdec.size() == 1);
  CHECK(tdec.begin()->first == mk(m, {{0, 1, 0, 0}}, {Rat(1)}));  // V_0100
  IrrSum ndec = decompose(m.rd, m.N.character());
  REQUIRE(ndec.size() == 1);
  CHECK(ndec.begin()->first == mk(m, {{0, 0, 0, 1}}, {Rat(2)}));  // V_0001

  // S3T* = T*3 + N*T*
  IrrSum s3 = sk_tstar(m, 3);
  IrrSum s3_expected{{mk(m, {{0, 0, 3, 0}}, {Rat(-3)}), 1}, {mk(m, {{1, 0, 1, 0}}, {Rat(-3)}), 1}};
  CHECK(s3 == s3_expected);

  // S3T*xN: five components, mass 1100
  IrrSum s3n = sk_tstar_n(m, 3);
  IrrSum s3n_expected{
      {mk(m, {{0, 0, 3, 1}}, {Rat(-1)}), 1},  // T*3N
      {mk(m, {{0, 1, 2, 0}}, {Rat(-1)}), 1},  // TT*2
      {mk(m, {{1, 0, 1, 1}}, {Rat(-1)}), 1},  // (N*T*)N
      {mk(m, {{1, 1, 0, 0}}, {Rat(-1)}), 1},  // N*T
      {mk(m, {{0, 0, 1, 0}}, {Rat(-1)}), 1},  // T*
  };
  CHECK(s3n == s3n_expected);
  CHECK(irrsum_dimension(m.rd, s3n) == 1100);

  // S4T* = T*4 + N*T*2 + N*2 (490 + 210 + 15 = 715)
  IrrSum s4 = sk_tstar(m, 4);
  IrrSum s4_expected{
      {mk(m, {{0, 0, 4, 0}}, {Rat(-4)}), 1},
      {mk(m, {{1, 0, 2, 0}}, {Rat(-4)}), 1},
      {mk(m, {{2, 0, 0, 0}}, {Rat(-4)}), 1},
  };
  CHECK(s4 == s4_expected);
  CHECK(irrsum_dimension(m.rd, s4) == 715);

  // S4T*xN: seven components, mass 3575
  IrrSum s4n = sk_tstar_n(m, 4);
  IrrSum s4n_expected{
      {mk(m, {{0, 0, 4, 1}}, {Rat(-2)}), 1}, {mk(m, {{0, 1, 3, 0}}, {Rat(-2)}), 1},
      {mk(m, {{1, 0, 2, 1}}, {Rat(-2)}), 1}, {mk(m, {{1, 1, 1, 0}}, {Rat(-2)}), 1},
      {mk(m, {{0, 0, 2, 0}}, {Rat(-2)}), 1}, {mk(m, {{2, 0, 0, 1}}, {Rat(-2)}), 1},
      {mk(m, {{1, 0, 0, 0}}, {Rat(-2)}), 1},
  };
  CHECK(s4n == s4n_expected);
  CHECK(irrsum_dimension(m.rd, s4n) == 3575);

  // (TxN*)^{T*c}xT* = V1110 + V2001 + V0101 + V1000, mass 400
  IrrSum f4 = occurrence_filter_set(m, 4);
  IrrSum f4_expected{
      {mk(m, {{1, 1, 1, 0}}, {Rat(-2)}), 1},
      {mk(m, {{2, 0, 0, 1}}, {Rat(-2)}), 1},
      {mk(m, {{0, 1, 0, 1}}, {Rat(-2)}), 1},
      {mk(m, {{1, 0, 0, 0}}, {Rat(-2)}), 1},
  };
  CHECK(f4 == f4_expected);
  CHECK(irrsum_dimension(m.rd, f4) == 400);

  // (TxT*)^{rc} = V0110 (75-dimensional)
  IrrSum tt = complement_in_endo(m.rd, m.T, true);
  REQUIRE(tt.size() == 1);
  CHECK(tt.begin()->first == mk(m, {{0, 1, 1, 0}}, {Rat(0)}));
  CHECK(weyl_dimension(m.rd, tt.begin()->first) == 75);
  CHECK(complement_in_endo(m.rd, m.N, false).empty());
}

TEST_CASE("Severi models: construction invariants") {
  for (const char* name : {"Seg(P2xP2)", "G(2,6)_AP2", "OP2"}) {
    CAPTURE(name);
    Model m = build_model(name);
    int d = m.algebra->dim;
    CHECK(m.n == 2 * d);
    CHECK(m.a == d + 2);
    m.T.check_structure();
    m.N.check_structure();
    m.check_ii_invariance();
    CHECK(is_extreme(m.T, m.tangent_weight_index("1"), true));
    CHECK(is_extreme(m.N, m.normal_weight_index("b"), false));
    for (const auto& w : m.T.weights) CHECK(w.charges[0] == Rat(1));
    for (const auto& w : m.N.weights) CHECK(w.charges[0] == Rat(2));
  }
}

TEST_CASE("Severi models: module identifications") {
  Model op2 = build_model("OP2");
  IrrSum t = decompose(op2.rd, op2.T.character());
  REQUIRE(t.size() == 1);
  CHECK(sl_part(t.begin()->first)[0] == std::vector<int>{0, 0, 0, 0, 1});  // half spinor
  IrrSum n = decompose(op2.rd, op2.N.character());
  REQUIRE(n.size() == 1);
  CHECK(sl_part(n.begin()->first)[0] == std::vector<int>{1, 0, 0, 0, 0});  // vector

  Model g26 = build_model("G(2,6)_AP2");
  IrrSum t2 = decompose(g26.rd, g26.T.character());
  REQUIRE(t2.size() == 1);
  CHECK(sl_part(t2.begin()->first)[0] == std::vector<int>{1});  // A1 defining
  auto d3part = sl_part(t2.begin()->first)[1];
  CHECK(((d3part == std::vector<int>{0, 1, 0}) || (d3part == std::vector<int>{0, 0, 1})));
  IrrSum n2 = decompose(g26.rd, g26.N.character());
  REQUIRE(n2.size() == 1);
  CHECK(sl_part(n2.begin()->first)[1] == std::vector<int>{1, 0, 0});  // D3 vector

  Model seg = build_model("Seg(P2xP2)");
  IrrSum t3 = decompose(seg.rd, seg.T.character());
  CHECK(t3.size() == 2);  // T = U + W, reducible
  IrrSum n3 = decompose(seg.rd, seg.N.character());
  REQUIRE(n3.size() == 1);
  CHECK(sl_part(n3.begin()->first) == std::vector<std::vector<int>>{{1}, {1}});
  CHECK(n3.begin()->first.charges == std::vector<Rat>{Rat(2), Rat(0)});
}

TEST_CASE("Severi null frame") {
  Model m = build_model("OP2");
  NullFrame nf = null_frame(m);
  REQUIRE(nf.names.size() == 3);
  for (const auto& v : nf.vectors_coord) CHECK(m.II_coord[0].eval(v).is_zero());  // q^a(e,e) = 0
  CHECK(in_base_locus(m.II_coord, nf.vectors_coord[0]));  // e1 in Base|II|
  // q^b restricted to the a-copy is identically zero
  for (int i = 0; i < m.algebra->dim; ++i)
    for (int j = 0; j < m.algebra->dim; ++j) {
      std::vector<QI> ei(m.n), ej(m.n);
      ei[i] = QI(1);
      ej[j] = QI(1);
      CHECK(m.II_coord[1].eval(ei, ej).is_zero());
    }
  Model g = build_model("G(2,5)");
  CHECK_THROWS(null_frame(g));
}

TEST_CASE("Severi II bases are consistent") {
  for (const char* name : {"Seg(P2xP2)", "G(2,6)_AP2", "OP2"}) {
    CAPTURE(name);
    Model m = build_model(name);
    // for every coordinate quadric c: sum_l N_weight_to_coord[c][l] * II_weight[l]
    // equals II_coord[c] transported to the weight tangent basis
    for (int c = 0; c < m.a; ++c)
      for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) {
          QI lhs;
          for (int l = 0; l < m.a; ++l) lhs += m.N_weight_to_coord[c][l] * m.II_weight[l].B[i][j];
          QI rhs;
          for (int r = 0; r < m.n; ++r) {
            if (m.T_weight_to_coord[r][i].is_zero()) continue;
            for (int s = 0; s < m.n; ++s)
              rhs += m.T_weight_to_coord[r][i] * m.II_coord[c].B[r][s] * m.T_weight_to_coord[s][j];
          }
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("Seg swap involution") {
  Model m = build_model("Seg(P2xP2)");
  REQUIRE(m.swap_involution.has_value());
  IrrSum s3n = sk_tstar_n(m, 3);
  for (const auto& [w, mult] : s3n) {
    Weight sw = (*m.swap_involution)(w);
    CHECK(s3n.count(sw));
    CHECK(s3n.at(sw) == mult);
  }
  long long total = 0;
  for (const auto& [w, mult] : s3n) total += mult;
  CHECK(total == 12);
  CHECK(component_classes(m, s3n) == 6);
}

TEST_CASE("G(2,m) for larger m still builds and is invariant") {
  Model m = build_model("G(2,7)");
  CHECK(m.n == 10);
  CHECK(m.a == 10);
  m.T.check_structure();
  m.N.check_structure();
  m.check_ii_invariance();
}
