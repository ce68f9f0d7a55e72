#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "chss/expr.hpp"
#include "chss/report.hpp"

using namespace chss;

namespace {

std::string cache_dir_from(const std::string& flag) {
  if (!flag.empty()) return flag;
  const char* env = std::getenv("CHSS_CACHE_DIR");
  return env ? std::string(env) : std::string();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification toolkit for order-two rigidity of rank-two "
               "compact Hermitian symmetric spaces"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "Run the full vanishing pipeline and emit certificates");
  std::vector<std::string> models;
  unsigned long long seed = 20240501ull;
  int samples = 32;
  std::string format = "md";
  std::string cache_flag;
  std::string out_path;
  bool verbose = false;
  verify->add_option("models", models, "model names (G(2,m), S10, Seg(P2xP2), G(2,6)_AP2, OP2)")->required();
  verify->add_option("--seed", seed, "genericity sampling seed");
  verify->add_option("--samples", samples, "genericity sample count");
  verify->add_option("--format", format, "json|md")->check(CLI::IsMember({"json", "md"}));
  verify->add_option("--cache", cache_flag, "cache directory (or env CHSS_CACHE_DIR)");
  verify->add_option("-o,--output", out_path, "write the report here instead of stdout");
  verify->add_flag("-v,--verbose", verbose, "progress notes on stderr");

  // tables
  auto* tables = app.add_subcommand("tables", "Regenerate the module-decomposition tables");
  std::string tables_model;
  std::string tables_cache;
  tables->add_option("model", tables_model, "model name")->required();
  tables->add_option("--cache", tables_cache, "cache directory (or env CHSS_CACHE_DIR)");

  // decompose
  auto* dec = app.add_subcommand("decompose", "Decompose a module expression over a model's symmetry group");
  std::string dec_model, dec_expr;
  dec->add_option("model", dec_model, "model name")->required();
  dec->add_option("expr", dec_expr, "expression, e.g. 'S3(T*) x N' or '(T x T*)^frc x T*'")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(verify)) {
      Cache cache(cache_dir_from(cache_flag));
      std::ostringstream out;
      bool all_rigid = true;
      for (const auto& name : models) {
        if (verbose) std::cerr << "[chss] building " << name << "\n";
        Model m = build_model(name);
        PipelineOptions opt;
        opt.seed = seed;
        opt.samples = samples;
        if (verbose) std::cerr << "[chss] running pipeline for " << name << "\n";
        RigidityReport rep = rigidity_verdict(m, opt);
        if (rep.verdict != "RIGID") all_rigid = false;
        if (format == "json") {
          ModelTables mt = regenerate_tables(m, &cache);
          out << report_to_json(m, rep, &mt);
        } else {
          out << report_to_markdown(m, rep) << "\n";
        }
        if (rep.verdict != "RIGID") {
          std::cerr << name << ": INCOMPLETE, surviving components:\n";
          for (const auto& o : rep.orders)
            for (const auto& [w, mult] : o.survivors)
              std::cerr << "  order " << o.k << ": " << weight_to_string(m.rank, w) << " ×" << mult << "\n";
        }
      }
      if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::trunc);
        f << out.str();
      } else {
        std::cout << out.str();
      }
      return all_rigid ? 0 : 1;
    }
    if (app.got_subcommand(tables)) {
      Model m = build_model(tables_model);
      Cache cache(cache_dir_from(tables_cache));
      ModelTables t = regenerate_tables(m, &cache);
      std::cout << tables_markdown(m, t);
      for (const auto& r : t.rows)
        if (r.mass != r.expected) {
          std::cerr << "mass conservation failed in row " << r.label << "\n";
          return 1;
        }
      return 0;
    }
    if (app.got_subcommand(dec)) {
      Model m = build_model(dec_model);
      IrrSum s = evaluate_expression(m, dec_expr);
      for (const auto& [w, mult] : s) {
        std::cout << weight_to_string(m.rank, w);
        auto nm = cartan_name(m, w);
        if (nm) std::cout << "  {" << nm->to_string() << "}";
        std::cout << "  ×" << mult << "  dim " << to_string(weyl_dimension(m.rd, w)) << "\n";
      }
      Int total = irrsum_dimension(m.rd, s);
      std::cout << "total dimension " << to_string(total) << "\n";
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
