// JSON / CSV serialization for the command-line tool.
//
// JSON floats use nlohmann's shortest round-trip formatting; CSV floats use
// a fixed 17 significant digits so that scans diff cleanly.
#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "binom/delta_basis.hpp"
#include "binom/gbs.hpp"
#include "binom/hilbert.hpp"
#include "binom/squeezing.hpp"

namespace binom::io {

/// Malformed input.  `line` is 1-based and 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::string field = {});

  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

/// printf("%.17g").
std::string format_fixed17(double value);

nlohmann::json complex_to_json(Complex z);
nlohmann::json amplitudes_to_json(const StateVector& v);

/// {"N":…, "p":…, "phi":…, "amplitudes":[{"re":…, "im":…}, …]}
nlohmann::json state_to_json(const GbsParams& params, const StateVector& v);
nlohmann::json params_to_json(const GbsParams& params);

/// CSV with header `n,re,im`, one row per amplitude.
std::string state_to_csv(const StateVector& v);

/// {"N", "p", "phi", "states": [{"m", "label_j", "label_m", "amplitudes"}]}
nlohmann::json basis_to_json(const DeltaBasis& basis);
/// CSV with header `m,n,re,im`.
std::string basis_to_csv(const DeltaBasis& basis);

/// Header `N,p,phi,S_X,S_P`, rows in the given order.
void write_squeeze_csv(std::ostream& out, const std::vector<SqueezeRow>& rows);

struct LoadedState {
  /// N when the file states it; otherwise the caller decides.
  std::optional<int> max_photons;
  StateVector state;
};

/// Accepts the state JSON written above; only "amplitudes" is required.
LoadedState parse_state_json(std::string_view text);
/// Accepts the `n,re,im` CSV written above; rows may come in any order but
/// each n must appear once.
LoadedState parse_state_csv(std::string_view text);
/// JSON if the first non-blank character is '{', CSV otherwise.
LoadedState parse_state(std::string_view text);

}  // namespace binom::io
