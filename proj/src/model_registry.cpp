#include <stdexcept>

#include "chss/model.hpp"

namespace chss {

std::vector<std::string> model_registry_names() {
  return {"G(2,5)", "G(2,6)", "G(2,7)", "S10", "Seg(P2xP2)", "G(2,6)_AP2", "OP2"};
}

Model build_model(const std::string& name) {
  std::string n = name;
  if (n == "quadric" || n == "Quadric" || n == "Q" || n.rfind("Q(", 0) == 0)
    throw std::invalid_argument(
        "the quadric hypersurface is excluded: it is not rigid at order two "
        "(its system of quadrics admits deformations), so no model is provided");
  if (n == "S10" || n == "S_10" || n == "spinor10") return build_spinor10();
  if (n == "Seg(P2xP2)" || n == "SEG_P2xP2" || n == "SegP2xP2") return build_severi(2);
  if (n == "G(2,6)_AP2" || n == "G26_AP2") return build_severi(4);
  if (n == "OP2" || n == "OP^2") return build_severi(8);
  if (n.rfind("G(2,", 0) == 0 && n.back() == ')') {
    int m = std::stoi(n.substr(4, n.size() - 5));
    return build_grassmannian(m);
  }
  throw std::invalid_argument("unknown model '" + name +
                              "'; known: G(2,m) for m >= 5, S10, Seg(P2xP2), G(2,6)_AP2, OP2");
}

}  // namespace chss
