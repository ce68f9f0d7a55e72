#include "chss/report.hpp"

#include <json.hpp>
#include <sstream>

namespace chss {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json irrsum_json(const Model& m, const IrrSum& s) {
  ordered_json arr = ordered_json::array();
  for (const auto& [w, mult] : s) {
    ordered_json e;
    e["weight"] = weight_to_string(m.rank, w);
    auto nm = cartan_name(m, w);
    if (nm) e["name"] = nm->to_string();
    e["mult"] = mult;
    e["dim"] = to_string(weyl_dimension(m.rd, w));  // decimal string, never truncated
    arr.push_back(e);
  }
  return arr;
}

}  // namespace

std::string report_to_json(const Model& m, const RigidityReport& rep, const ModelTables* tables) {
  ordered_json j;
  j["model"] = rep.model;
  j["verdict"] = rep.verdict;
  {
    ordered_json ms;
    ms["n"] = m.n;
    ms["a"] = m.a;
    std::string factors;
    for (size_t f = 0; f < m.rank.factors.size(); ++f) {
      if (f) factors += " + ";
      const auto& fac = m.rank.factors[f];
      if (!fac.label.empty()) factors += fac.label + "(";
      factors += series_name(fac.series) + std::to_string(fac.rank);
      if (!fac.label.empty()) factors += ")";
    }
    ms["symmetry"] = factors + " with " + std::to_string(m.rank.torus_dim) + " central charge(s)";
    {
      IrrSum td = decompose(m.rd, m.T.character());
      ordered_json tw = ordered_json::array();
      for (const auto& [w, mult] : td) {
        (void)mult;
        tw.push_back(weight_to_string(m.rank, w));
      }
      ms["T"] = tw;
      IrrSum nd = decompose(m.rd, m.N.character());
      ordered_json nw = ordered_json::array();
      for (const auto& [w, mult] : nd) {
        (void)mult;
        nw.push_back(weight_to_string(m.rank, w));
      }
      ms["N"] = nw;
    }
    ordered_json quads = ordered_json::array();
    for (int q = 0; q < m.a; ++q) {
      ordered_json rows = ordered_json::array();
      for (int i = 0; i < m.n; ++i) {
        ordered_json row = ordered_json::array();
        for (int x = 0; x < m.n; ++x) row.push_back(to_string(m.II_coord[q].B[i][x]));
        rows.push_back(row);
      }
      ordered_json e;
      e["normal"] = m.normal_coord_labels[q];
      e["matrix"] = rows;
      quads.push_back(e);
    }
    ms["II"] = quads;
    j["model_summary"] = ms;
  }
  ordered_json orders = ordered_json::array();
  for (const auto& o : rep.orders) {
    ordered_json oj;
    oj["k"] = o.k;
    oj["decomposition"] = irrsum_json(m, o.decomposition);
    ordered_json norm = ordered_json::array();
    for (const auto& [w, mult] : o.normalized_away) {
      ordered_json e;
      e["weight"] = weight_to_string(m.rank, w);
      e["mult"] = mult;
      norm.push_back(e);
    }
    oj["normalized_away"] = norm;
    oj["components_after_normalization"] = o.classes_after_normalization;
    ordered_json elim = ordered_json::array();
    for (const auto& e : o.eliminations) {
      ordered_json ej;
      ej["weight"] = weight_to_string(m.rank, e.weight);
      auto nm = cartan_name(m, e.weight);
      if (nm) ej["name"] = nm->to_string();
      ej["reason"] = e.reason;
      ej["evidence"] = e.evidence;
      elim.push_back(ej);
    }
    oj["eliminations"] = elim;
    oj["survivors_after_filter"] = irrsum_json(m, o.survivors_after_filter);
    oj["survivors"] = irrsum_json(m, o.survivors);
    if (!o.filter_note.empty()) oj["note"] = o.filter_note;
    orders.push_back(oj);
  }
  j["orders"] = orders;
  j["bertini_certificates"] = rep.bertini_certificates;
  j["dimension_checks"] = rep.dimension_checks;
  j["notes"] = rep.notes;
  j["seed"] = rep.seed;
  j["samples"] = rep.samples;
  if (tables) {
    ordered_json tj = ordered_json::array();
    for (const auto& r : tables->rows) {
      ordered_json rj;
      rj["space"] = r.label;
      rj["components"] = irrsum_json(m, r.sum);
      rj["mass"] = to_string(r.mass);
      rj["expected"] = to_string(r.expected);
      tj.push_back(rj);
    }
    j["tables"] = tj;
  }
  return j.dump(2) + "\n";
}

std::string report_to_markdown(const Model& m, const RigidityReport& rep) {
  std::ostringstream os;
  os << "# Rigidity certificate: " << rep.model << "\n\n";
  os << "Verdict: **" << rep.verdict << "**  (seed " << rep.seed << ", " << rep.samples
     << " genericity samples)\n\n";
  for (const auto& o : rep.orders) {
    os << "## Order " << o.k << "\n\n";
    os << "Decomposition of S^" << o.k << "T*⊗N:\n\n";
    for (const auto& [w, mult] : o.decomposition) {
      os << "- " << weight_to_string(m.rank, w);
      auto nm = cartan_name(m, w);
      if (nm) os << " {" << nm->to_string() << "}";
      os << "  ×" << mult << "  (dim " << to_string(weyl_dimension(m.rd, w)) << ")\n";
    }
    os << "\nNormalized away:";
    if (o.normalized_away.empty()) os << " none";
    os << "\n";
    for (const auto& [w, mult] : o.normalized_away)
      os << "- " << weight_to_string(m.rank, w) << " ×" << mult << "\n";
    os << "\nComponents after normalization: " << o.classes_after_normalization << "\n\n";
    if (!o.eliminations.empty()) {
      os << "Eliminations:\n\n";
      for (const auto& e : o.eliminations) {
        os << "- " << weight_to_string(m.rank, e.weight);
        auto nm = cartan_name(m, e.weight);
        if (nm) os << " {" << nm->to_string() << "}";
        os << " — " << e.reason << ": " << e.evidence << "\n";
      }
    }
    if (!o.filter_note.empty()) os << "\nNote: " << o.filter_note << "\n";
    os << "\nSurvivors: ";
    if (o.survivors.empty())
      os << "none\n\n";
    else {
      os << "\n";
      for (const auto& [w, mult] : o.survivors)
        os << "- " << weight_to_string(m.rank, w) << " ×" << mult << "\n";
      os << "\n";
    }
  }
  os << "## Bertini certificates\n\n";
  for (const auto& c : rep.bertini_certificates) os << "- " << c << "\n";
  os << "\n## Dimension checks\n\n";
  for (const auto& c : rep.dimension_checks) os << "- " << c << "\n";
  os << "\n## Conventions\n\n";
  for (const auto& n : rep.notes) os << n << "\n";
  return os.str();
}

}  // namespace chss
