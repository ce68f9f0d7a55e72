#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "chss/expr.hpp"
#include "chss/report.hpp"

using namespace chss;

TEST_CASE("expression grammar") {
  Model m = build_model("G(2,5)");
  // S1T* = T*
  IrrSum s1 = evaluate_expression(m, "S1(T*)");
  REQUIRE(s1.size() == 1);
  CHECK(weight_to_string(m.rank, s1.begin()->first) == "A(A1)[1] * B(A2)[0,1] @ (-1)");

  // S3(T*) x N has five components of total dimension 168
  IrrSum s3n = evaluate_expression(m, "S3(T*) x N");
  CHECK(s3n.size() == 5);
  CHECK(irrsum_dimension(m.rd, s3n) == 168);
  CHECK(s3n == sk_tstar_n(m, 3));

  // complements
  IrrSum frc = evaluate_expression(m, "(T x T*)^frc");
  CHECK(frc == complement_in_endo(m.rd, m.T, true));
  IrrSum tc = evaluate_expression(m, "(T x N*)^T*c x T*");
  CHECK(tc == occurrence_filter_set(m, 4));

  // exterior power: L2(N) for G(2,5) is the 3-dimensional N-wedge
  IrrSum l2 = evaluate_expression(m, "L2(N)");
  CHECK(irrsum_dimension(m.rd, l2) == 3);

  CHECK_THROWS(evaluate_expression(m, "T x"));
  CHECK_THROWS(evaluate_expression(m, "(T x N)^frc"));
  CHECK_THROWS(evaluate_expression(m, "Q"));
}

TEST_CASE("tables: mass conservation rows") {
  Model m = build_model("G(2,5)");
  ModelTables t = regenerate_tables(m, nullptr);
  for (const auto& r : t.rows) {
    CAPTURE(r.label);
    CHECK(r.mass == r.expected);
  }
  // S1T* sanity row equals T*
  const TableRow* s1 = nullptr;
  const TableRow* tstar = nullptr;
  for (const auto& r : t.rows) {
    if (r.label == "S1T*") s1 = &r;
    if (r.label == "T*") tstar = &r;
  }
  REQUIRE(s1);
  REQUIRE(tstar);
  CHECK(s1->sum == tstar->sum);
  // markdown renders
  std::string md = tables_markdown(m, t);
  CHECK(md.find("S3T*xN") != std::string::npos);
}

TEST_CASE("irrsum serialization round trips bit-exactly") {
  Model m = build_model("S10");
  IrrSum s = sk_tstar_n(m, 3);
  std::string ser = irrsum_serialize(m, s);
  IrrSum back = irrsum_parse(m, ser);
  CHECK(back == s);
  CHECK(irrsum_serialize(m, back) == ser);
}

TEST_CASE("cache: cold equals warm, corrupt entries recomputed") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "chss_cache_test";
  fs::remove_all(dir);

  Model m = build_model("G(2,5)");
  Cache cold(dir.string());
  ModelTables t1 = regenerate_tables(m, &cold);
  Cache warm(dir.string());
  ModelTables t2 = regenerate_tables(m, &warm);
  REQUIRE(t1.rows.size() == t2.rows.size());
  for (size_t i = 0; i < t1.rows.size(); ++i) {
    CHECK(t1.rows[i].sum == t2.rows[i].sum);
    CHECK(irrsum_serialize(m, t1.rows[i].sum) == irrsum_serialize(m, t2.rows[i].sum));
  }

  // corrupt every entry; results must still be identical (recomputed)
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::ofstream f(entry.path(), std::ios::trunc);
    f << "garbage\nmore garbage\n";
  }
  Cache corrupted(dir.string());
  ModelTables t3 = regenerate_tables(m, &corrupted);
  for (size_t i = 0; i < t1.rows.size(); ++i) CHECK(t1.rows[i].sum == t3.rows[i].sum);
  fs::remove_all(dir);
}

TEST_CASE("json reports are byte-identical across runs") {
  Model m = build_model("G(2,5)");
  PipelineOptions opt;
  RigidityReport r1 = rigidity_verdict(m, opt);
  RigidityReport r2 = rigidity_verdict(build_model("G(2,5)"), opt);
  ModelTables t1 = regenerate_tables(m, nullptr);
  ModelTables t2 = regenerate_tables(m, nullptr);
  std::string j1 = report_to_json(m, r1, &t1);
  std::string j2 = report_to_json(m, r2, &t2);
  CHECK(j1 == j2);
  CHECK(j1.find("\"verdict\": \"RIGID\"") != std::string::npos);
  // dimensions are serialized as decimal strings
  CHECK(j1.find("\"dim\": \"60\"") != std::string::npos);
}

TEST_CASE("seed changes are reflected in the report but not the verdict") {
  Model m = build_model("G(2,5)");
  PipelineOptions a, b;
  b.seed = 777;
  RigidityReport ra = rigidity_verdict(m, a);
  RigidityReport rb = rigidity_verdict(m, b);
  CHECK(ra.verdict == "RIGID");
  CHECK(rb.verdict == "RIGID");
  CHECK(ra.seed != rb.seed);
}
