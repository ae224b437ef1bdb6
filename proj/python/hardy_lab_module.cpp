#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hardy/graph.hpp"
#include "hardy/lattice.hpp"
#include "hardy/lp.hpp"
#include "hardy/scalar.hpp"
#include "hardy/sequence.hpp"
#include "hardy/sharpness.hpp"
#include "hardy/suites.hpp"
#include "hardy/weights.hpp"

namespace py = pybind11;
using namespace hardy;

namespace {

py::tuple rational(const Rational& r) { return py::make_tuple(r.num(), r.den()); }

py::dict summary(const SuiteSummary& s) {
  py::dict d;
  d["name"] = s.name;
  d["instances"] = s.instances;
  d["worst"] = s.worst;
  d["worst_instance"] = s.worst_instance;
  d["tolerance"] = s.tolerance;
  d["pass"] = s.pass;
  return d;
}

IdentitySpec identity_spec(const std::string& kind, int m) { return IdentitySpec::parse(kind, m); }

}  // namespace

PYBIND11_MODULE(hardy_lab, mod) {
  mod.doc() = "Discrete Hardy and Rellich inequalities: weights, identities, sharpness";
  mod.attr("__version__") = HARDY_LAB_VERSION;

  // ---- sequences ----
  py::class_<FiniteSequence>(mod, "FiniteSequence")
      .def(py::init<>())
      .def(py::init<Index, std::vector<double>>(), py::arg("offset"), py::arg("values"))
      .def_static("delta", &FiniteSequence::delta, py::arg("n"), py::arg("value") = 1.0)
      .def("at", &FiniteSequence::at)
      .def("__getitem__", &FiniteSequence::at)
      .def_property_readonly("offset", &FiniteSequence::offset)
      .def_property_readonly("values", &FiniteSequence::values)
      .def("__len__", &FiniteSequence::size)
      .def("__eq__", [](const FiniteSequence& a, const FiniteSequence& b) { return a == b; })
      .def("__repr__", [](const FiniteSequence& s) {
        return "FiniteSequence(offset=" + std::to_string(s.offset()) + ", size=" + std::to_string(s.size()) + ")";
      });
  mod.def("grad", &grad);
  mod.def("divergence", &divergence);
  mod.def("laplace", &laplace);
  mod.def("laplace_power", &laplace_power, py::arg("u"), py::arg("m"));
  mod.def("half_laplace_power", [](const FiniteSequence& u, int ell) { return half_laplace_power(u, BoundaryOrder(ell)); },
          py::arg("u"), py::arg("ell"));

  // ---- weights ----
  mod.def("kpp_weight", [](Index n) { return kpp_weight(n); });
  mod.def("kpp_coefficient", [](int k) { return rational(kpp_coefficient(k)); });
  mod.def("gks_coefficient", [](int k) { return rational(gks_coefficient(k)); });
  mod.def("improved_rellich2_coefficient", [](int j) { return rational(improved_rellich2_coefficient(j)); });
  mod.def("weight", [](const std::string& family, Index n, double param, const std::string& mode) {
        const WeightModel m(WeightModel::parse(family, param).family(), param, parse_eval_mode(mode));
        return m(n);
      },
      py::arg("family"), py::arg("n"), py::arg("param") = 0.0, py::arg("mode") = "auto");
  mod.def("weight_bound", [](const std::string& family, Index n, double param) {
        return WeightModel::parse(family, param).bound(n);
      },
      py::arg("family"), py::arg("n"), py::arg("param") = 0.0);
  mod.def("weight_families", &WeightModel::family_names);

  // ---- sharpness ----
  mod.def("sharp_constant", &sharp_constant, py::arg("ell"));
  mod.def("sharp_constant_rational", [](int ell) { return rational(sharp_constant_rational(ell)); }, py::arg("ell"));
  mod.def("min_eig", [](int ell, Index N) {
        const auto r = min_generalized_eig(assemble_form(ell, N));
        py::dict d;
        d["lambda_min"] = r.lambda_min;
        d["iterations"] = r.iterations;
        d["residual_rel"] = r.residual_rel;
        d["eigvec"] = r.eigvec;
        return d;
      },
      py::arg("ell"), py::arg("N"));
  mod.def("eig_sweep", [](int ell, const std::vector<Index>& Ns) {
        const auto s = eig_sweep(ell, Ns);
        std::vector<double> lam;
        for (const auto& r : s.rows) lam.push_back(r.result.lambda_min);
        py::dict d;
        d["lambda_min"] = lam;
        d["strictly_decreasing"] = s.strictly_decreasing;
        d["above_constant"] = s.above_constant;
        return d;
      },
      py::arg("ell"), py::arg("N_list"));
  mod.def("continuum_probe", [](const std::string& phi, Index M, int ell) {
        const auto r = continuum_probe(TestFunction::parse(phi), M, ell);
        py::dict d;
        d["discrete_lhs"] = r.discrete_lhs;
        d["discrete_rhs"] = r.discrete_rhs;
        d["continuous_lhs"] = r.continuous_lhs;
        d["continuous_rhs"] = r.continuous_rhs;
        return d;
      },
      py::arg("phi"), py::arg("M"), py::arg("ell"));
  mod.def("counterexample", [](Index M) {
        const auto r = counterexample_build(M);
        py::dict d;
        d["W"] = r.W;
        d["sum_W"] = r.sum_W;
        d["lhs"] = r.lhs;
        d["rhs_partial"] = r.rhs_partial;
        d["ratio"] = r.ratio();
        return d;
      },
      py::arg("M"));

  // ---- suites ----
  mod.def("identity_suite", [](const std::string& kind, int m, std::size_t instances, std::uint64_t seed, double tol) {
        return summary(identity_suite(identity_spec(kind, m), instances, seed, tol));
      },
      py::arg("kind"), py::arg("m") = 1, py::arg("instances") = 100, py::arg("seed") = 0, py::arg("tol") = 1e-10);
  mod.def("inequality_suite", [](const std::string& kind, double param, std::size_t trials, std::uint64_t seed) {
        InequalityForm f;
        if (kind == "rellich") f = InequalityForm::rellich(static_cast<int>(param));
        else if (kind == "shifted") f = InequalityForm::shifted_hardy(param);
        else if (kind == "direct") f = InequalityForm::direct_hardy(param);
        else if (kind == "leray") f = InequalityForm::leray();
        else throw py::value_error("unknown inequality kind: " + kind);
        return summary(inequality_suite(f, trials, seed));
      },
      py::arg("kind"), py::arg("param") = 1.0, py::arg("trials") = 1000, py::arg("seed") = 0);
  mod.def("scan", [](const std::string& what, double alpha) {
        ScanReport r;
        if (what == "H") r = scan_H(alpha);
        else if (what == "G") r = scan_G(alpha);
        else if (what == "F") r = scan_F(alpha);
        else if (what == "Q") r = scan_Q();
        else if (what == "G_cubic") r = scan_G_cubic();
        else if (what == "g") r = scan_g();
        else throw py::value_error("unknown scan: " + what);
        py::dict d;
        d["what"] = r.what;
        d["min_margin"] = r.min_margin;
        d["at"] = r.at;
        d["pass"] = r.pass;
        return d;
      },
      py::arg("what"), py::arg("alpha") = 0.0);

  // ---- Z^d ----
  mod.def("zd_weight", [](double alpha, const Point& x) { return zd_weight_exact(alpha, static_cast<int>(x.size()), x); },
          py::arg("alpha"), py::arg("x"));
  mod.def("zd_check", [](double alpha, int d, std::int64_t R, std::size_t trials, std::uint64_t seed) {
        const auto r = zd_inequality_check(alpha, d, R, trials, seed);
        py::dict out;
        out["min_margin_rel"] = r.min_margin_rel;
        out["max_identity_residual"] = r.max_identity_residual;
        out["pass"] = r.pass;
        return out;
      },
      py::arg("alpha"), py::arg("d"), py::arg("R") = 15, py::arg("trials") = 20, py::arg("seed") = 0);

  // ---- l^p ----
  mod.def("landau_check", [](const FiniteSequence& a, double p) {
        const auto r = landau_check(a, p);
        return py::make_tuple(r.lhs, r.rhs, r.margin);
      },
      py::arg("a"), py::arg("p"));
  mod.def("picone_suite", [](double p, std::size_t edges, std::uint64_t seed) { return summary(picone_suite(p, edges, seed)); },
          py::arg("p"), py::arg("edges") = 1000, py::arg("seed") = 0);
}
