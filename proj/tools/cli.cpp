#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "binom/delta_basis.hpp"
#include "binom/gbs.hpp"
#include "binom/io.hpp"
#include "binom/numerics.hpp"
#include "binom/resolution.hpp"
#include "binom/squeezing.hpp"
#include "binom/verify.hpp"

namespace binom::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writes to the file named by `path`, or to `fallback` when it is empty.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : target_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw UsageError("cannot open '" + path + "' for writing");
      target_ = file_.get();
    }
  }
  std::ostream& stream() { return *target_; }
  void finish() {
    target_->flush();
    if (!*target_) throw UsageError("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* target_;
};

struct Angle {
  double value = 0.0;
  double radians(bool degrees) const { return degrees ? value * kPi / 180.0 : value; }
};

void emit_json(const nlohmann::json& doc, const std::string& path, std::ostream& out) {
  Sink sink(path, out);
  sink.stream() << doc.dump(2) << '\n';
  sink.finish();
}

void emit_text(const std::string& text, const std::string& path, std::ostream& out) {
  Sink sink(path, out);
  sink.stream() << text;
  sink.finish();
}

double default_tolerance() {
  const char* env = std::getenv(kToleranceEnv);
  if (env == nullptr || *env == '\0') return kDefaultTolerance;
  char* end = nullptr;
  const double value = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(value > 0.0)) {
    throw UsageError(std::string(kToleranceEnv) + " must be a positive number, got '" + env + "'");
  }
  return value;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string report_to_csv(const VerifyReport& report) {
  std::ostringstream out;
  out << "group,check,value,threshold,bound,passed\n";
  for (const GroupResult& g : report.groups) {
    for (const CheckResult& c : g.checks) {
      out << g.name << ',' << c.name << ',' << io::format_fixed17(c.value) << ','
          << io::format_fixed17(c.threshold) << ',' << (c.upper_bound ? "max" : "min") << ','
          << (c.passed ? "true" : "false") << '\n';
    }
  }
  return out.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized binomial states: construction, bases, squeezing and self-checks", "binom"};
  app.require_subcommand(1);
  bool degrees = false;
  app.add_flag("--degrees", degrees, "Read every phase / angle argument in degrees");

  std::string output;
  std::string format = "json";
  auto add_output = [&](CLI::App* sub, bool with_format) {
    sub->add_option("-o,--output", output, "Output file (default: stdout)");
    if (with_format) sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  };

  int n_photons = 0;
  double p = 0.0;
  Angle phi;

  // state
  auto* state = app.add_subcommand("state", "Amplitudes of |N, p, phi>");
  state->add_option("-N", n_photons, "Maximum photon number")->required();
  state->add_option("-p", p, "Single-photon probability in [0, 1]")->required();
  state->add_option("--phi", phi.value, "Mean phase");
  add_output(state, true);

  // overlap
  auto* overlap = app.add_subcommand("overlap", "Closed-form <N,p1,phi1|N,p2,phi2>");
  double p2 = 0.0;
  Angle phi2;
  overlap->add_option("-N", n_photons, "Maximum photon number")->required();
  overlap->add_option("--p1", p, "p of the bra state")->required();
  overlap->add_option("--phi1", phi.value, "phi of the bra state");
  overlap->add_option("--p2", p2, "p of the ket state")->required();
  overlap->add_option("--phi2", phi2.value, "phi of the ket state");
  add_output(overlap, false);

  // partner
  auto* partner = app.add_subcommand("partner", "The GBS orthogonal to |N, p, phi>");
  partner->add_option("-N", n_photons, "Maximum photon number")->required();
  partner->add_option("-p", p, "Single-photon probability")->required();
  partner->add_option("--phi", phi.value, "Mean phase");
  add_output(partner, false);

  // basis
  auto* basis = app.add_subcommand("basis", "Orthonormal Delta basis built on |N, p, phi>");
  basis->add_option("-N", n_photons, "Maximum photon number")->required();
  basis->add_option("-p", p, "Single-photon probability")->required();
  basis->add_option("--phi", phi.value, "Mean phase");
  add_output(basis, true);

  // expand
  auto* expand = app.add_subcommand("expand", "Rebuild a state from its GBS expansion");
  std::string input;
  int expand_n = -1;
  int theta_nodes = 0;
  int phi_nodes = 0;
  expand->add_option("input", input, "State file (JSON as written by `state`, or n,re,im CSV)")->required();
  expand->add_option("-N", expand_n, "Maximum photon number (default: from the file)");
  expand->add_option("--theta-nodes", theta_nodes, "Polar Gauss-Legendre nodes (default: exact grid)");
  expand->add_option("--phi-nodes", phi_nodes, "Azimuthal nodes (default: exact grid)");
  add_output(expand, true);

  // squeeze-scan
  auto* scan = app.add_subcommand("squeeze-scan", "Squeezing indexes over a (p, phi) grid");
  int p_steps = 21;
  int phi_steps = 21;
  std::string source = "closed";
  scan->add_option("-N", n_photons, "Maximum photon number")->required();
  scan->add_option("--p-steps", p_steps, "Points in p over [0, 1], endpoints included");
  scan->add_option("--phi-steps", phi_steps, "Points in phi over [0, 2pi], endpoints included");
  scan->add_option("--source", source, "closed (formula) or direct (expectation values)")
      ->check(CLI::IsMember({"closed", "direct"}));
  add_output(scan, false);

  // verify
  auto* verify = app.add_subcommand("verify", "Run the built-in identity checks");
  VerifyConfig config;
  std::optional<double> tolerance;
  verify->add_option("--group", config.groups, "Restrict to these groups (repeatable)");
  verify->add_option("-N", config.max_photons, "Use a single N where a group sweeps N");
  verify->add_option("--tolerance", tolerance, "Residual scale; default 1e-10 or $" + std::string(kToleranceEnv));
  verify->add_option("--seed", config.seed, "Seed for randomized draws");
  add_output(verify, true);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (state->parsed()) {
      const GbsParams params(n_photons, p, phi.radians(degrees));
      const StateVector v = gbs_state(params);
      if (format == "csv") {
        emit_text(io::state_to_csv(v), output, out);
      } else {
        emit_json(io::state_to_json(params, v), output, out);
      }
    } else if (overlap->parsed()) {
      const GbsParams a(n_photons, p, phi.radians(degrees));
      const GbsParams b(n_photons, p2, phi2.radians(degrees));
      const Complex z = gbs_overlap(a, b);
      emit_json({{"a", io::params_to_json(a)},
                 {"b", io::params_to_json(b)},
                 {"overlap", io::complex_to_json(z)},
                 {"modulus", std::abs(z)}},
                output, out);
    } else if (partner->parsed()) {
      const GbsParams a(n_photons, p, phi.radians(degrees));
      const GbsParams b = orthogonal_partner(a);
      emit_json({{"state", io::params_to_json(a)},
                 {"partner", io::params_to_json(b)},
                 {"overlap", io::complex_to_json(gbs_overlap(a, b))}},
                output, out);
    } else if (basis->parsed()) {
      const DeltaBasis b = delta_basis(n_photons, p, phi.radians(degrees));
      if (format == "csv") {
        emit_text(io::basis_to_csv(b), output, out);
      } else {
        emit_json(io::basis_to_json(b), output, out);
      }
    } else if (expand->parsed()) {
      io::LoadedState loaded = io::parse_state(read_file(input));
      const int n = expand_n >= 0 ? expand_n
                                  : loaded.max_photons.value_or(static_cast<int>(loaded.state.dim()) - 1);
      const SphereQuadrature def = SphereQuadrature::default_for(n);
      const SphereQuadrature quad(theta_nodes > 0 ? theta_nodes : static_cast<int>(def.theta_nodes().size()),
                                  phi_nodes > 0 ? phi_nodes : def.phi_nodes());
      const StateVector psi = loaded.state.dim() < n + 1 ? loaded.state.resized(n + 1) : loaded.state;
      const StateVector rebuilt = reconstruct(psi, n, quad);
      if (format == "csv") {
        emit_text(io::state_to_csv(rebuilt), output, out);
      } else {
        emit_json({{"N", n},
                   {"theta_nodes", quad.theta_nodes().size()},
                   {"phi_nodes", quad.phi_nodes()},
                   {"under_resolved", !quad.resolves(n)},
                   {"max_abs_error", max_abs_diff(rebuilt, psi)},
                   {"amplitudes", io::amplitudes_to_json(rebuilt)}},
                  output, out);
      }
    } else if (scan->parsed()) {
      if (p_steps < 2 || phi_steps < 2) throw UsageError("--p-steps and --phi-steps must be >= 2");
      const auto rows = squeeze_scan(n_photons, linspace(0.0, 1.0, p_steps), linspace(0.0, kTwoPi, phi_steps),
                                     source == "direct" ? SqueezeSource::direct : SqueezeSource::closed_form);
      Sink sink(output, out);
      io::write_squeeze_csv(sink.stream(), rows);
      sink.finish();
    } else if (verify->parsed()) {
      config.tolerance = tolerance.value_or(default_tolerance());
      const VerifyReport report = run_verification(config);
      if (format == "csv") {
        emit_text(report_to_csv(report), output, out);
      } else {
        emit_json(report_to_json(report), output, out);
      }
      return report.passed() ? kExitOk : kExitVerifyFailed;
    }
  } catch (const io::ParseError& e) {
    err << "binom: " << input << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "binom: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace binom::cli
