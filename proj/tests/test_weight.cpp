#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chss/root_data.hpp"

using namespace chss;

namespace {

ReductiveRank rk_a1() { return {{{Series::A, 1, ""}}, 0}; }

Weight w_of(const ReductiveRank& rk, std::vector<std::vector<int>> coords, std::vector<Rat> charges = {}) {
  Weight w = Weight::zero(rk);
  w.coords = std::move(coords);
  if (!charges.empty()) w.charges = std::move(charges);
  return w;
}

}  // namespace

TEST_CASE("Cartan matrices: A1, A2, D5, D3") {
  RootData a1 = build_root_data(rk_a1());
  CHECK(a1.factors[0].cartan == std::vector<std::vector<int>>{{2}});

  RootData a2 = build_root_data({{{Series::A, 2, ""}}, 0});
  CHECK(a2.factors[0].cartan == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
  CHECK(a2.factors[0].positive_roots.size() == 3);

  RootData d5 = build_root_data({{{Series::D, 5, ""}}, 0});
  const auto& c = d5.factors[0].cartan;
  // node 3 adjacent to nodes 2, 4 and 5 (Bourbaki numbering, 1-based)
  CHECK(c[2][1] == -1);
  CHECK(c[2][3] == -1);
  CHECK(c[2][4] == -1);
  CHECK(c[3][4] == 0);
  CHECK(d5.factors[0].positive_roots.size() == 20);

  RootData d3 = build_root_data({{{Series::D, 3, ""}}, 0});
  CHECK(d3.factors[0].positive_roots.size() == 6);
  // D3 has its own Cartan matrix: node 1 adjacent to both 2 and 3
  CHECK(d3.factors[0].cartan[0][1] == -1);
  CHECK(d3.factors[0].cartan[0][2] == -1);
  CHECK(d3.factors[0].cartan[1][2] == 0);

  CHECK_THROWS(build_root_data({{{Series::D, 2, ""}}, 0}));
}

TEST_CASE("coroot/fundamental pairing is the identity") {
  RootData d5 = build_root_data({{{Series::D, 5, ""}}, 0});
  const auto& f = d5.factors[0];
  // simple roots are the first rank positive roots by construction; pairing of
  // omega_j with alpha_i^vee is delta_ij, i.e. f.cartan rows are the
  // fundamental coordinates of the simple roots
  for (const auto& r : f.positive_roots) {
    int height = 0;
    for (int v : r.simple_coords) height += v;
    if (height != 1) continue;
    int node = -1;
    for (size_t i = 0; i < r.simple_coords.size(); ++i)
      if (r.simple_coords[i] == 1) node = (int)i;
    for (int j = 0; j < f.factor.rank; ++j) CHECK(r.fund_coords[j] == f.cartan[node][j]);
  }
}

TEST_CASE("dominance") {
  auto rk = rk_a1();
  CHECK(Weight::zero(rk).is_dominant());
  CHECK_FALSE(w_of(rk, {{-1}}).is_dominant());
  ReductiveRank d5{{{Series::D, 5, ""}}, 1};
  Weight spinor = w_of(d5, {{0, 0, 0, 0, 1}}, {Rat(7, 3)});
  CHECK(spinor.is_dominant());  // charges unconstrained
}

TEST_CASE("to_dominant_with_sign on A1") {
  RootData rd = build_root_data(rk_a1());
  // dominant input → (itself, +1)
  auto r = to_dominant_with_sign(rd, w_of(rk_a1(), {{5}}));
  REQUIRE(r.has_value());
  CHECK(r->first.coords[0][0] == 5);
  CHECK(r->second == 1);
  // wall: -1 + rho = 0
  CHECK_FALSE(to_dominant_with_sign(rd, w_of(rk_a1(), {{-1}})).has_value());
  // -3 → (1, -1)
  auto r2 = to_dominant_with_sign(rd, w_of(rk_a1(), {{-3}}));
  REQUIRE(r2.has_value());
  CHECK(r2->first.coords[0][0] == 1);
  CHECK(r2->second == -1);
}

TEST_CASE("reflection is idempotent on the dominant output") {
  ReductiveRank rk{{{Series::A, 2, ""}, {Series::D, 4, ""}}, 0};
  RootData rd = build_root_data(rk);
  Weight w = w_of(rk, {{-3, 1}, {2, -5, 0, 3}});
  auto r = to_dominant_with_sign(rd, w);
  if (r) {
    auto r2 = to_dominant_with_sign(rd, r->first);
    REQUIRE(r2.has_value());
    CHECK(r2->first == r->first);
    CHECK(r2->second == 1);
  }
}

TEST_CASE("weight grammar round trip") {
  ReductiveRank rk{{{Series::A, 1, "A"}, {Series::A, 2, "B"}}, 1};
  Weight w = w_of(rk, {{1}, {0, 2}}, {Rat(-7, 2)});
  std::string s = weight_to_string(rk, w);
  CHECK(s == "A(A1)[1] * B(A2)[0,2] @ (-7/2)");
  CHECK(parse_weight(rk, s) == w);

  ReductiveRank d5{{{Series::D, 5, ""}}, 1};
  Weight v = w_of(d5, {{0, 1, 0, 3, 0}}, {Rat(2)});
  CHECK(parse_weight(d5, weight_to_string(d5, v)) == v);
  CHECK_THROWS(parse_weight(d5, "A1[1]"));
}

TEST_CASE("duality involution") {
  RootData a2 = build_root_data({{{Series::A, 2, ""}}, 0});
  CHECK(a2.factors[0].dual_coords({1, 0}) == std::vector<int>{0, 1});
  RootData d5 = build_root_data({{{Series::D, 5, ""}}, 0});
  CHECK(d5.factors[0].dual_coords({0, 0, 0, 1, 0}) == std::vector<int>{0, 0, 0, 0, 1});
  RootData d4 = build_root_data({{{Series::D, 4, ""}}, 0});
  CHECK(d4.factors[0].dual_coords({0, 0, 1, 0}) == std::vector<int>{0, 0, 1, 0});
}
