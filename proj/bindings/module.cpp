#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qschur/cli.hpp"
#include "qschur/demazure.hpp"
#include "qschur/lrrule.hpp"
#include "qschur/lspaths.hpp"
#include "qschur/macdonald.hpp"
#include "qschur/patterns.hpp"
#include "qschur/serialize.hpp"
#include "qschur/verify.hpp"

namespace py = pybind11;
using namespace qschur;

namespace {

// Results cross the boundary as canonical JSON strings; the Python side
// parses them with the standard json module.
std::string poly_json(const XPoly& p) { return xpoly_to_json(p).dump(); }

Grid grid_from_rows(const std::vector<std::vector<int>>& rows) {
  Grid g;
  g.rows = rows;
  return g;
}

}  // namespace

PYBIND11_MODULE(_qschur, m) {
  m.doc() = "Exact computations for quasisymmetric Schur functions, Demazure atoms, "
            "and nonsymmetric Macdonald polynomials";

  m.def("atom",
        [](const Composition& gamma, int n, const std::string& method) {
          Composition g = gamma;
          g.resize(n, 0);
          XPoly p = method == "ct"      ? atom_via_ct(g, n)
                    : method == "keys"  ? atom_via_keys(g, n)
                    : method == "paths" ? atom_via_paths(g, n)
                                        : demazure_atom(g, n);
          return poly_json(p);
        },
        py::arg("gamma"), py::arg("n"), py::arg("method") = "pibar",
        "Demazure atom as canonical JSON; method is pibar, ct, keys, or paths");

  m.def("demazure_char",
        [](const std::vector<int>& tau, const Composition& lambda, int n) {
          return poly_json(demazure_char(Perm(tau), lambda, n));
        },
        py::arg("tau"), py::arg("lambda_"), py::arg("n"));

  m.def("schur", [](const Composition& lambda, int n) { return poly_json(gen_schur(lambda, n)); },
        py::arg("lambda_"), py::arg("n"));

  m.def("rs", [](const Composition& alpha, int n) { return poly_json(gen_rs(alpha, n)); },
        py::arg("alpha"), py::arg("n"), "Row-strict quasisymmetric Schur polynomial");

  m.def("cs", [](const Composition& alpha, int n) { return poly_json(gen_cs(alpha, n)); },
        py::arg("alpha"), py::arg("n"), "Column-strict quasisymmetric Schur polynomial");

  m.def("expand_product",
        [](const Composition& alpha, const Composition& lambda, int n) {
          int nv = n > 0 ? n : comp_size(alpha) + comp_size(lambda);
          return expansion_to_json(expand_product(alpha, lambda, std::max(nv, 1))).dump();
        },
        py::arg("alpha"), py::arg("lambda_"), py::arg("n") = 0);

  m.def("lr_coefficient", &lr_coefficient, py::arg("alpha"), py::arg("lambda_"), py::arg("beta"));

  m.def("macdonald",
        [](const Composition& gamma, const std::vector<int>& basement) {
          int n = static_cast<int>(gamma.size());
          Perm b = basement.empty() ? Perm::identity(n) : Perm(basement);
          return poly_json(macdonald_poly(gamma, n, b));
        },
        py::arg("gamma"), py::arg("basement") = std::vector<int>{});

  m.def("macdonald_at",
        [](const Composition& gamma, const std::vector<int>& basement, const std::string& q,
           const std::string& t) {
          int n = static_cast<int>(gamma.size());
          Perm b = basement.empty() ? Perm::identity(n) : Perm(basement);
          QQ q0(q), t0(t);
          q0.canonicalize();
          t0.canonicalize();
          return poly_json(macdonald_poly(gamma, n, b).specialize_qt(q0, t0));
        },
        py::arg("gamma"), py::arg("basement") = std::vector<int>{}, py::arg("q") = "0",
        py::arg("t") = "0");

  m.def("rct_insert",
        [](const std::vector<std::vector<int>>& rows, int letter) {
          return insertion_to_json(rct_insert(grid_from_rows(rows), letter)).dump();
        },
        py::arg("rows"), py::arg("letter"));

  m.def("validate",
        [](const std::string& kind, const std::vector<std::vector<int>>& rows) {
          TabKind k = kind == "rrst" ? TabKind::RRST : kind == "ct" ? TabKind::CT : TabKind::RCT;
          Violation v = validate(k, grid_from_rows(rows));
          py::dict d;
          d["ok"] = v.ok;
          d["rule"] = v.rule;
          return d;
        },
        py::arg("kind"), py::arg("rows"), "kind is rrst, rct, or ct");

  m.def("psi", [](const std::vector<std::vector<int>>& rows) {
          TriArray x;
          x.rows = rows;
          return grid_to_json(psi(x)).dump();
        },
        py::arg("pattern_rows"));

  m.def("theta", [](const std::vector<std::vector<int>>& rows) {
          return grid_to_json(theta(grid_from_rows(rows))).dump();
        },
        py::arg("ct_rows"));

  m.def("verify",
        [](const std::string& suite, int max_size, int n) {
          std::ostringstream out, err;
          int code = cli_run({"verify", suite, "--max-size", std::to_string(max_size), "--n",
                              std::to_string(n)},
                             out, err);
          py::dict d;
          d["ok"] = code == 0;
          d["table"] = out.str();
          return d;
        },
        py::arg("suite") = "all", py::arg("max_size") = 3, py::arg("n") = 3);

  m.def("cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          int code = cli_run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run a CLI invocation in-process; returns (code, stdout, stderr)");
}
