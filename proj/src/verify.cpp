#include "binom/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "binom/cas.hpp"
#include "binom/delta_basis.hpp"
#include "binom/gbs.hpp"
#include "binom/hp_algebra.hpp"
#include "binom/numerics.hpp"
#include "binom/resolution.hpp"
#include "binom/squeezing.hpp"

namespace binom {
namespace {

class Suite {
 public:
  Suite(std::string name, double scale) : scale_(scale) { result_.name = std::move(name); }

  void max_error(const std::string& name, double value, double nominal) {
    const double threshold = nominal * scale_;
    result_.checks.push_back({name, value, threshold, true, value <= threshold});
  }
  void at_least(const std::string& name, double value, double bound) {
    result_.checks.push_back({name, value, bound, false, value >= bound});
  }
  GroupResult take() { return std::move(result_); }

 private:
  GroupResult result_;
  double scale_;
};

struct Context {
  const VerifyConfig& config;
  std::mt19937_64 rng;

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  int photons(int lo, int hi) { return config.max_photons >= 0 ? config.max_photons : uniform_int(lo, hi); }
  std::vector<int> photon_set(std::vector<int> defaults) const {
    return config.max_photons >= 0 ? std::vector<int>{config.max_photons} : defaults;
  }
  GbsParams params(int lo, int hi) {
    const int n = photons(lo, hi);
    return GbsParams(n, uniform(0.0, 1.0), uniform(0.0, kTwoPi));
  }
};

double residual(const OperatorMatrix& a, const OperatorMatrix& b) { return max_abs_diff(a, b); }

double eigen_residual(const OperatorMatrix& op, const StateVector& v, Complex lambda) {
  return max_abs_diff(apply(op, v), lambda * v);
}

void orthogonality(Context& ctx, Suite& s) {
  double worst = 0.0;
  // N = 0 has a single state, so there is no partner to be orthogonal to.
  for (int i = 0; i < 200; ++i) {
    const GbsParams a = ctx.params(1, 50);
    worst = std::max(worst, std::abs(gbs_overlap(a, orthogonal_partner(a))));
  }
  s.max_error("partner_overlap", worst, 1e-12);
}

void overlap(Context& ctx, Suite& s) {
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const GbsParams a = ctx.params(0, 50);
    const GbsParams b(a.max_photons(), ctx.uniform(0.0, 1.0), ctx.uniform(0.0, kTwoPi));
    worst = std::max(worst, std::abs(gbs_overlap(a, b) - inner(gbs_state(a), gbs_state(b))));
  }
  s.max_error("closed_form_vs_inner", worst, 1e-12);
}

void rotation(Context& ctx, Suite& s) {
  double infidelity = 0.0;
  double unitarity = 0.0;
  for (int i = 0; i < 40; ++i) {
    const GbsParams g = ctx.params(0, 30);
    const int n = g.max_photons();
    const OperatorMatrix r = rotation_operator(n, RotationSpec(params_to_angles(g)));
    infidelity = std::max(infidelity, 1.0 - fidelity(gbs_state(g), apply(r, StateVector::basis(n + 1, n))));
    unitarity = std::max(unitarity, residual(r * adjoint(r), OperatorMatrix::identity(n + 1)));
  }
  s.max_error("gbs_is_rotated_top_state", infidelity, 1e-10);
  s.max_error("rotation_unitarity", unitarity, 1e-10);
}

void algebra(Context& ctx, Suite& s) {
  double comm = 0.0;
  double eig = 0.0;
  double conj = 0.0;
  for (int n : ctx.photon_set({1, 2, 5, 10, 30})) {
    const PseudoSpinSet ops = hp_operators(n);
    const double p = ctx.uniform(0.0, 1.0);
    const double phi = ctx.uniform(0.0, kTwoPi);
    const PseudoSpinSet rot = rotated_operators(n, p, phi);
    for (const PseudoSpinSet* set : {&ops, &rot}) {
      comm = std::max(comm, residual(commutator(set->j_plus, set->j_minus), Complex(2.0) * set->j3));
      comm = std::max(comm, residual(commutator(set->j3, set->j_plus), set->j_plus));
      comm = std::max(comm, residual(commutator(set->j3, set->j_minus), Complex(-1.0) * set->j_minus));
      comm = std::max(comm, commutator(set->j_sq, set->j_plus).entries().cwiseAbs().maxCoeff());
    }
    const GbsParams g(n, p, phi);
    const StateVector top = gbs_state(g);
    const StateVector bottom = gbs_state(orthogonal_partner(g));
    eig = std::max(eig, eigen_residual(rot.j3, top, 0.5 * n));
    eig = std::max(eig, eigen_residual(rot.j3, bottom, -0.5 * n));
    eig = std::max(eig, apply(rot.j_plus, top).amplitudes().cwiseAbs().maxCoeff());
    eig = std::max(eig, apply(rot.j_minus, bottom).amplitudes().cwiseAbs().maxCoeff());
    const PseudoSpinSet by_conj =
        conjugated(ops, rotation_operator(n, RotationSpec(params_to_angles(g))));
    conj = std::max({conj, residual(rot.j3, by_conj.j3), residual(rot.j_plus, by_conj.j_plus)});
  }
  s.max_error("commutators", comm, 1e-10);
  s.max_error("eigen_relations", eig, 1e-10);
  s.max_error("closed_form_vs_conjugation", conj, 1e-10);
}

void completeness(Context& ctx, Suite& s) {
  double identity_err = 0.0;
  double recon_err = 0.0;
  const std::vector<int> all = [] {
    std::vector<int> v;
    for (int n = 0; n <= 20; ++n) v.push_back(n);
    return v;
  }();
  for (int n : ctx.photon_set(all)) {
    const SphereQuadrature quad = SphereQuadrature::default_for(n);
    identity_err = std::max(identity_err, residual(identity_resolution(n, quad).op, OperatorMatrix::identity(n + 1)));
  }
  for (int i = 0; i < 10; ++i) {
    const int n = ctx.photons(0, 12);
    CVector c(n + 1);
    for (Index k = 0; k <= n; ++k) c(k) = Complex(ctx.uniform(-1.0, 1.0), ctx.uniform(-1.0, 1.0));
    const StateVector psi = StateVector(c).normalized();
    recon_err = std::max(recon_err, max_abs_diff(reconstruct(psi, n, SphereQuadrature::default_for(n)), psi));
  }
  s.max_error("identity_resolution", identity_err, 1e-12);
  s.max_error("reconstruction", recon_err, 1e-10);
}

void delta(Context& ctx, Suite& s) {
  double ortho = 0.0;
  double eig = 0.0;
  for (int n : ctx.photon_set({1, 2, 5, 10, 30})) {
    const double p = ctx.uniform(0.0, 1.0);
    const double phi = ctx.uniform(0.0, kTwoPi);
    const DeltaBasis b = delta_basis(n, p, phi);
    const PseudoSpinSet rot = rotated_operators(n, p, phi);
    for (int i = 0; i <= n; ++i) {
      eig = std::max(eig, eigen_residual(rot.j3, b.states[static_cast<std::size_t>(i)], i - 0.5 * n));
      for (int j = 0; j <= n; ++j) {
        const Complex ip = inner(b.states[static_cast<std::size_t>(i)], b.states[static_cast<std::size_t>(j)]);
        ortho = std::max(ortho, std::abs(ip - (i == j ? 1.0 : 0.0)));
      }
    }
  }
  double two_photon = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double p = ctx.uniform(0.0, 1.0);
    const double phi = ctx.uniform(0.0, kTwoPi);
    const double r = std::sqrt(2.0 * p * (1.0 - p));
    CVector expected(3);
    expected << r, (2.0 * p - 1.0) * std::polar(1.0, phi), -r * std::polar(1.0, 2.0 * phi);
    two_photon = std::max(two_photon, max_abs_diff(delta_basis(2, p, phi).states[1], StateVector(expected)));
  }
  s.max_error("orthonormality", ortho, 1e-9);
  s.max_error("j3_eigen_residual", eig, 1e-9);
  s.max_error("two_photon_middle_state", two_photon, 1e-12);
}

void squeezing(Context& ctx, Suite& s) {
  const std::vector<double> p_grid = linspace(0.0, 1.0, 21);
  const std::vector<double> phi_grid = linspace(0.0, kTwoPi, 21);
  double agree = 0.0;
  double endpoints = 0.0;
  for (int n : ctx.photon_set({1, 2, 5, 20, 100})) {
    const auto closed = squeeze_scan(n, p_grid, phi_grid, SqueezeSource::closed_form);
    const auto direct = squeeze_scan(n, p_grid, phi_grid, SqueezeSource::direct);
    for (std::size_t i = 0; i < closed.size(); ++i) {
      agree = std::max({agree, std::abs(closed[i].s_x - direct[i].s_x), std::abs(closed[i].s_p - direct[i].s_p)});
    }
    for (double phi : phi_grid) {
      const SqueezingIndexes lo = closed_form_indexes(n, 0.0, phi);
      const SqueezingIndexes hi = closed_form_indexes(n, 1.0, phi);
      endpoints = std::max({endpoints, std::abs(lo.s_x), std::abs(lo.s_p), std::abs(hi.s_x + 2.0 * n),
                            std::abs(hi.s_p + 2.0 * n)});
    }
  }
  s.max_error("closed_form_vs_direct", agree, 1e-10);
  s.max_error("endpoints", endpoints, 1e-12);

  auto max_sx = [&](int n) {
    double best = -1e300;
    for (const SqueezeRow& r : squeeze_scan(n, p_grid, phi_grid, SqueezeSource::closed_form)) best = std::max(best, r.s_x);
    return best;
  };
  const double m2 = max_sx(2);
  const double m100 = max_sx(100);
  s.at_least("max_sx_N2_positive", m2, 0.0);
  s.at_least("max_sx_N100_minus_N2", m100 - m2, 0.0);
}

void bijection(Context& ctx, Suite& s) {
  double ladder = 0.0;
  std::vector<int> upto12;
  for (int n = 0; n <= 12; ++n) upto12.push_back(n);
  for (int n : ctx.photon_set(upto12)) {
    for (int i = 0; i < 5; ++i) {
      const GbsParams g(n, ctx.uniform(0.0, 1.0), ctx.uniform(0.0, kTwoPi));
      ladder = std::max(ladder, max_abs_diff(cas_state(gbs_to_cas(g)), gbs_state(g)));
    }
  }
  s.max_error("gbs_equals_cas_coefficients", ladder, 1e-12);

  double tensor = 0.0;
  const int top = ctx.config.max_photons >= 1 ? std::min(ctx.config.max_photons, 8) : 8;
  const int bottom = ctx.config.max_photons >= 1 ? top : 1;
  for (int atoms = bottom; atoms <= top; ++atoms) {
    const GbsParams g(atoms, ctx.uniform(0.0, 1.0), ctx.uniform(0.0, kTwoPi));
    const StateVector coeffs =
        project_onto_dicke(tensor_cas_state(atoms, params_to_angles(g)), dicke_states_tensor(atoms));
    tensor = std::max(tensor, max_abs_diff(align_phase(coeffs, gbs_state(g)), gbs_state(g)));
  }
  s.max_error("tensor_product_oracle", tensor, 1e-10);
}

void appendix(Context& ctx, Suite& s) {
  double dis = 0.0;
  for (int i = 0; i < 30; ++i) {
    const SpinJ j(ctx.uniform_int(1, 10));
    const BlochAngles a(ctx.uniform(0.0, 3.0), ctx.uniform(0.0, kTwoPi));
    dis = std::max(dis, frobenius_distance(disentangled_rotation(j, a), cas_rotation(j, a)));
  }
  double law = 0.0;
  double antipodal = 0.0;
  for (int i = 0; i < 100; ++i) {
    const SpinJ j(ctx.uniform_int(0, 20));
    const BlochAngles a(ctx.uniform(0.0, kPi), ctx.uniform(0.0, kTwoPi));
    const BlochAngles b(ctx.uniform(0.0, kPi), ctx.uniform(0.0, kTwoPi));
    const double direct = std::norm(inner(cas_state({j, a}), cas_state({j, b})));
    law = std::max(law, std::abs(direct - cas_overlap_modulus_sq(j, a, b)));
    const BlochAngles anti(kPi - a.theta(), a.varphi() + kPi);
    if (j.two_j() > 0) {
      antipodal = std::max(antipodal, std::abs(inner(cas_state({j, a}), cas_state({j, anti}))));
    }
  }
  s.max_error("disentangling_theorem", dis, 1e-9);
  s.max_error("overlap_law", law, 1e-10);
  s.max_error("antipodal_overlap", antipodal, 1e-12);
}

void coherent(Context&, Suite& s) {
  const Complex alpha = 1.0;
  std::vector<double> fids;
  for (int n : {10, 50, 200}) {
    const Index dim = std::max<Index>(coherent_min_dim(alpha), n + 1);
    fids.push_back(fidelity(coherent_state_truncated(alpha, dim), gbs_state(GbsParams(n, 1.0 / n, 0.0), dim)));
  }
  s.at_least("fidelity_N200", fids[2], 0.99);
  s.at_least("monotone_10_50", fids[1] - fids[0], 0.0);
  s.at_least("monotone_50_200", fids[2] - fids[1], 0.0);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

using GroupFn = std::function<void(Context&, Suite&)>;

const std::vector<std::pair<std::string, GroupFn>>& registry() {
  static const std::vector<std::pair<std::string, GroupFn>> groups = {
      {"orthogonality", orthogonality}, {"overlap", overlap},     {"rotation", rotation},
      {"algebra", algebra},             {"completeness", completeness}, {"delta", delta},
      {"squeezing", squeezing},         {"bijection", bijection}, {"appendix", appendix},
      {"coherent", coherent},
  };
  return groups;
}

}  // namespace

bool GroupResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

bool VerifyReport::passed() const {
  return std::all_of(groups.begin(), groups.end(), [](const GroupResult& g) { return g.passed(); });
}

const std::vector<std::string>& verify_group_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

VerifyReport run_verification(const VerifyConfig& config) {
  if (!(config.tolerance > 0.0)) throw std::invalid_argument("verify: tolerance must be > 0");
  for (const std::string& g : config.groups) {
    const auto& names = verify_group_names();
    if (std::find(names.begin(), names.end(), g) == names.end()) {
      throw std::invalid_argument("verify: unknown group '" + g + "'");
    }
  }
  VerifyReport report{config.tolerance, config.seed, {}};
  const double scale = config.tolerance / kDefaultTolerance;
  for (const auto& [name, fn] : registry()) {
    if (!config.groups.empty() &&
        std::find(config.groups.begin(), config.groups.end(), name) == config.groups.end()) {
      continue;
    }
    // Each group gets its own stream so filtering does not change results.
    Context ctx{config, std::mt19937_64(config.seed ^ fnv1a(name))};
    Suite suite(name, scale);
    fn(ctx, suite);
    report.groups.push_back(suite.take());
  }
  return report;
}

nlohmann::json report_to_json(const VerifyReport& report) {
  nlohmann::json groups = nlohmann::json::array();
  for (const GroupResult& g : report.groups) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : g.checks) {
      checks.push_back({{"name", c.name},
                        {"value", c.value},
                        {"threshold", c.threshold},
                        {"bound", c.upper_bound ? "max" : "min"},
                        {"passed", c.passed}});
    }
    groups.push_back({{"name", g.name}, {"passed", g.passed()}, {"checks", std::move(checks)}});
  }
  return {{"tolerance", report.tolerance},
          {"seed", report.seed},
          {"passed", report.passed()},
          {"groups", std::move(groups)}};
}

}  // namespace binom
