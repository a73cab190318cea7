#include "eschur/crystal.hpp"
#include "eschur/errors.hpp"
#include "eschur/io.hpp"
#include "eschur/lattice.hpp"
#include "eschur/schur.hpp"
#include "eschur/uncrowding.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace eschur;

namespace {

SkewShape shape_of(const std::vector<int> &outer, const std::vector<int> &inner,
                   int extent) {
  int ext = extent >= 0 ? extent : static_cast<int>(outer.size());
  std::vector<int> in = inner;
  in.resize(std::max<std::size_t>(in.size(), ext), 0);
  return SkewShape(Partition(outer, ext), Partition(in, ext));
}

EdgeParams params_of(const SkewShape &s, int n, std::optional<std::pair<int, int>> window) {
  EdgeParams p = EdgeParams::defaults(s, n);
  if (window) p = p.with_window(window->first, window->second);
  return p;
}

} // namespace

PYBIND11_MODULE(_eschur, m) {
  m.doc() = "Edge Schur functions, vertex models and crystals";

  m.def(
      "edge_schur",
      [](const std::vector<int> &lam, int n, std::optional<std::pair<int, int>> window,
         const std::vector<int> &mu, int extent) {
        SkewShape s = shape_of(lam, mu, extent);
        return canonical_string(edge_schur(s, params_of(s, n, window)));
      },
      py::arg("lam"), py::arg("n"), py::arg("window") = py::none(),
      py::arg("mu") = std::vector<int>{}, py::arg("extent") = -1);

  m.def(
      "factorial_schur",
      [](const std::vector<int> &lam, int n, const std::vector<int> &mu, int extent) {
        return canonical_string(factorial_schur(shape_of(lam, mu, extent), n));
      },
      py::arg("lam"), py::arg("n"), py::arg("mu") = std::vector<int>{},
      py::arg("extent") = -1);

  m.def(
      "schur_expansion",
      [](const std::vector<int> &lam, int n, std::pair<int, int> window, int max_size) {
        SkewShape s = shape_of(lam, {}, -1);
        py::dict out;
        for (const auto &[nu, c] :
             schur_expand(edge_schur(s, params_of(s, n, window)), n, max_size).coeffs)
          out[py::tuple(py::cast(nu.parts()))] = canonical_string(c);
        return out;
      },
      py::arg("lam"), py::arg("n"), py::arg("window"), py::arg("max_size"));

  m.def("yang_baxter", [](const std::string &kind, std::optional<std::string> perturb) {
    std::optional<Perturbation> p;
    if (perturb) p = Perturbation{*perturb};
    return yang_baxter_check(parse_yb_kind(kind), p).ok;
  }, py::arg("kind"), py::arg("perturb") = py::none());

  m.def(
      "crystal_component_sizes",
      [](const std::vector<int> &lam, int n, std::pair<int, int> window, int max_labels) {
        SkewShape s = shape_of(lam, {}, -1);
        std::vector<int> out;
        for (const auto &c : crystal_graph(s, params_of(s, n, window), max_labels).components)
          out.push_back(static_cast<int>(c.members.size()));
        return out;
      },
      py::arg("lam"), py::arg("n"), py::arg("window"), py::arg("max_labels") = -1);

  m.def("uncrowd", [](const std::string &elt_json) {
    EdgeTableau t = elt_from_json(json::parse(elt_json));
    RSKPair pr = uncrowd(t);
    return std::make_pair(pr.P.rows, pr.Q.rows);
  });

  m.def("roundtrip", [](const std::string &elt_json) {
    EdgeTableau t = elt_from_json(json::parse(elt_json));
    return crowd(uncrowd(t), t.shape().outer(), t.lo, t.hi) == t;
  });

  py::register_exception<Error>(m, "EschurError", PyExc_ValueError);
}
