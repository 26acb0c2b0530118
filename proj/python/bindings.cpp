// Python bindings for the core library.  States come back as complex
// numpy vectors and operators as complex numpy matrices.
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "binom/cas.hpp"
#include "binom/delta_basis.hpp"
#include "binom/gbs.hpp"
#include "binom/hp_algebra.hpp"
#include "binom/resolution.hpp"
#include "binom/squeezing.hpp"
#include "binom/verify.hpp"

namespace py = pybind11;
using namespace binom;

namespace {

StateVector to_state(const CVector& v) { return StateVector(v); }

py::dict spin_set_dict(const PseudoSpinSet& s) {
  py::dict d;
  d["j3"] = s.j3.entries();
  d["j_plus"] = s.j_plus.entries();
  d["j_minus"] = s.j_minus.entries();
  d["j_sq"] = s.j_sq.entries();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Generalized binomial states of light and their atomic counterparts";

  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);

  py::class_<GbsParams>(m, "GbsParams")
      .def(py::init<int, double, double>(), py::arg("N"), py::arg("p"), py::arg("phi") = 0.0)
      .def_property_readonly("N", &GbsParams::max_photons)
      .def_property_readonly("p", &GbsParams::p)
      .def_property_readonly("phi", &GbsParams::phi)
      .def("__repr__", [](const GbsParams& g) {
        return "GbsParams(N=" + std::to_string(g.max_photons()) + ", p=" + py::repr(py::float_(g.p())).cast<std::string>() +
               ", phi=" + py::repr(py::float_(g.phi())).cast<std::string>() + ")";
      });

  py::class_<BlochAngles>(m, "BlochAngles")
      .def(py::init<double, double>(), py::arg("theta"), py::arg("varphi"))
      .def_property_readonly("theta", &BlochAngles::theta)
      .def_property_readonly("varphi", &BlochAngles::varphi);

  m.def(
      "gbs_state", [](const GbsParams& g, std::optional<Index> dim) {
        return gbs_state(g, dim.value_or(g.max_photons() + 1)).amplitudes();
      },
      py::arg("params"), py::arg("dim") = py::none(), "Amplitudes of |N, p, phi> on n = 0..dim-1.");
  m.def("gbs_overlap", &gbs_overlap, py::arg("a"), py::arg("b"));
  m.def("orthogonal_partner", &orthogonal_partner, py::arg("params"));
  m.def("params_to_angles", &params_to_angles, py::arg("params"));
  m.def("angles_to_params", &angles_to_params, py::arg("angles"), py::arg("N"));
  m.def(
      "coherent_state", [](Complex alpha, std::optional<Index> dim) {
        return coherent_state_truncated(alpha, dim.value_or(coherent_min_dim(alpha))).amplitudes();
      },
      py::arg("alpha"), py::arg("dim") = py::none());

  m.def("hp_operators", [](int n) { return spin_set_dict(hp_operators(n)); }, py::arg("N"));
  m.def("rotated_operators", [](int n, double p, double phi) { return spin_set_dict(rotated_operators(n, p, phi)); },
        py::arg("N"), py::arg("p"), py::arg("phi"));
  m.def(
      "rotation_operator",
      [](int n, const BlochAngles& a) { return rotation_operator(n, RotationSpec(a)).entries(); }, py::arg("N"),
      py::arg("angles"));
  m.def(
      "link_operator", [](int n, const GbsParams& a, const GbsParams& b) { return link_operator(n, a, b).entries(); },
      py::arg("N"), py::arg("a"), py::arg("b"));

  m.def(
      "delta_basis",
      [](int n, double p, double phi) {
        const DeltaBasis b = delta_basis(n, p, phi);
        CMatrix cols(n + 1, n + 1);
        for (int k = 0; k <= n; ++k) cols.col(k) = b.states[k].amplitudes();
        return cols;
      },
      py::arg("N"), py::arg("p"), py::arg("phi"), "Basis vectors as the columns of an (N+1)x(N+1) matrix.");

  py::class_<SphereQuadrature>(m, "SphereQuadrature")
      .def(py::init<int, int>(), py::arg("theta_nodes"), py::arg("phi_nodes"))
      .def_static("default_for", &SphereQuadrature::default_for, py::arg("N"))
      .def("resolves", &SphereQuadrature::resolves, py::arg("N"));
  m.def(
      "identity_resolution",
      [](int n, const SphereQuadrature& q) {
        const auto r = identity_resolution(n, q);
        return py::make_tuple(r.op.entries(), r.under_resolved);
      },
      py::arg("N"), py::arg("quadrature"), "Returns (matrix, under_resolved).");
  m.def(
      "reconstruct",
      [](const CVector& psi, int n, const SphereQuadrature& q) { return reconstruct(to_state(psi), n, q).amplitudes(); },
      py::arg("psi"), py::arg("N"), py::arg("quadrature"));

  m.def(
      "closed_form_indexes",
      [](int n, double p, double phi) {
        const auto s = closed_form_indexes(n, p, phi);
        return py::make_tuple(s.s_x, s.s_p);
      },
      py::arg("N"), py::arg("p"), py::arg("phi"), "Returns (S_X, S_P).");
  m.def(
      "direct_stats",
      [](const CVector& psi) {
        const auto s = direct_stats(to_state(psi));
        py::dict d;
        d["mean_x"] = s.mean_x;
        d["mean_p"] = s.mean_p;
        d["var_x"] = s.var_x;
        d["var_p"] = s.var_p;
        d["s_x"] = s.s_x;
        d["s_p"] = s.s_p;
        return d;
      },
      py::arg("psi"));
  m.def(
      "squeeze_scan",
      [](int n, const std::vector<double>& ps, const std::vector<double>& phis, const std::string& source) {
        if (source != "closed" && source != "direct") throw py::value_error("source must be 'closed' or 'direct'");
        const auto rows =
            squeeze_scan(n, ps, phis, source == "direct" ? SqueezeSource::direct : SqueezeSource::closed_form);
        Eigen::MatrixXd out(static_cast<Index>(rows.size()), 4);
        for (std::size_t i = 0; i < rows.size(); ++i) {
          out.row(static_cast<Index>(i)) << rows[i].p, rows[i].phi, rows[i].s_x, rows[i].s_p;
        }
        return out;
      },
      py::arg("N"), py::arg("p_grid"), py::arg("phi_grid"), py::arg("source") = "closed",
      "Rows (p, phi, S_X, S_P), p outer.");

  m.def(
      "cas_state", [](int two_j, const BlochAngles& a) { return cas_state({SpinJ(two_j), a}).amplitudes(); },
      py::arg("two_j"), py::arg("angles"));
  m.def(
      "disentangled_rotation",
      [](int two_j, const BlochAngles& a) { return disentangled_rotation(SpinJ(two_j), a).entries(); },
      py::arg("two_j"), py::arg("angles"));
  m.def(
      "cas_rotation", [](int two_j, const BlochAngles& a) { return cas_rotation(SpinJ(two_j), a).entries(); },
      py::arg("two_j"), py::arg("angles"));
  m.def("cas_overlap_modulus_sq", [](int two_j, const BlochAngles& a, const BlochAngles& b) {
    return cas_overlap_modulus_sq(SpinJ(two_j), a, b);
  });
  m.def("great_circle_angle", &great_circle_angle, py::arg("a"), py::arg("b"));

  m.def("verify_groups", &verify_group_names);
  m.def(
      "verify_json",
      [](double tolerance, std::uint64_t seed, int n, const std::vector<std::string>& groups) {
        VerifyConfig cfg;
        cfg.tolerance = tolerance;
        cfg.seed = seed;
        cfg.max_photons = n;
        cfg.groups = groups;
        py::gil_scoped_release release;
        return report_to_json(run_verification(cfg)).dump();
      },
      py::arg("tolerance") = kDefaultTolerance, py::arg("seed") = VerifyConfig{}.seed, py::arg("N") = -1,
      py::arg("groups") = std::vector<std::string>{});
}
