#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chss/expr.hpp"
#include "chss/fundamental_forms.hpp"
#include "chss/report.hpp"

namespace py = pybind11;
using namespace chss;

namespace {

py::list irrsum_to_list(const Model& m, const IrrSum& s) {
  py::list out;
  for (const auto& [w, mult] : s) {
    py::dict e;
    e["weight"] = weight_to_string(m.rank, w);
    auto nm = cartan_name(m, w);
    if (nm) e["name"] = nm->to_string();
    e["mult"] = mult;
    e["dim"] = to_string(weyl_dimension(m.rd, w));
    out.append(e);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Exact rigidity certificates for rank-two compact Hermitian symmetric spaces";

  mod.def("models", [] { return model_registry_names(); }, "Registered model names");

  mod.def(
      "verify",
      [](const std::string& name, unsigned long long seed, int samples) {
        Model m = build_model(name);
        PipelineOptions opt;
        opt.seed = seed;
        opt.samples = samples;
        RigidityReport rep = rigidity_verdict(m, opt);
        py::dict out;
        out["model"] = rep.model;
        out["verdict"] = rep.verdict;
        out["seed"] = rep.seed;
        py::list orders;
        for (const auto& o : rep.orders) {
          py::dict oj;
          oj["k"] = o.k;
          oj["components_after_normalization"] = o.classes_after_normalization;
          oj["decomposition"] = irrsum_to_list(m, o.decomposition);
          oj["survivors"] = irrsum_to_list(m, o.survivors);
          py::list elims;
          for (const auto& e : o.eliminations) {
            py::dict ej;
            ej["weight"] = weight_to_string(m.rank, e.weight);
            ej["reason"] = e.reason;
            ej["evidence"] = e.evidence;
            elims.append(ej);
          }
          oj["eliminations"] = elims;
          if (!o.filter_note.empty()) oj["note"] = o.filter_note;
          orders.append(oj);
        }
        out["orders"] = orders;
        out["bertini_certificates"] = rep.bertini_certificates;
        return out;
      },
      py::arg("model"), py::arg("seed") = 20240501ull, py::arg("samples") = 32,
      "Run the full vanishing pipeline; returns the certificate as a dict");

  mod.def(
      "verify_json",
      [](const std::string& name, unsigned long long seed, int samples) {
        Model m = build_model(name);
        PipelineOptions opt;
        opt.seed = seed;
        opt.samples = samples;
        RigidityReport rep = rigidity_verdict(m, opt);
        ModelTables t = regenerate_tables(m, nullptr);
        return report_to_json(m, rep, &t);
      },
      py::arg("model"), py::arg("seed") = 20240501ull, py::arg("samples") = 32,
      "Full certificate with tables, serialized as deterministic JSON");

  mod.def(
      "tables",
      [](const std::string& name) {
        Model m = build_model(name);
        ModelTables t = regenerate_tables(m, nullptr);
        return tables_markdown(m, t);
      },
      py::arg("model"), "Module-decomposition tables as markdown");

  mod.def(
      "decompose",
      [](const std::string& name, const std::string& expr) {
        Model m = build_model(name);
        return irrsum_to_list(m, evaluate_expression(m, expr));
      },
      py::arg("model"), py::arg("expr"),
      "Decompose a module expression, e.g. decompose('G(2,5)', 'S3(T*) x N')");

  mod.def(
      "second_fundamental_form",
      [](const std::string& name) {
        Model m = build_model(name);
        FundForm f = extract(m.chart, 2);
        py::list out;
        for (const auto& [slot, c] : f.coeff) {
          py::dict e;
          e["normal"] = f.normal_labels[slot.first];
          py::list idx;
          for (int i : slot.second) idx.append(m.tangent_coord_labels[i]);
          e["monomial"] = idx;
          e["coeff"] = to_string(c);
          out.append(e);
        }
        return out;
      },
      py::arg("model"), "Sparse coefficients of |II| extracted from the graph chart");
}
