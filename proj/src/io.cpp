#include "binom/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>

namespace binom::io {
namespace {

using nlohmann::json;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(std::string_view(line).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return fields;
}

double parse_double(const std::string& text, std::size_t line, const std::string& field) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ParseError("expected a number, got '" + text + "'", line, field);
  }
  return value;
}

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

double number_field(const json& obj, const char* key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError("missing field", 0, path + "." + key);
  if (!it->is_number()) throw ParseError("expected a number", 0, path + "." + key);
  return it->get<double>();
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line, std::string field)
    : std::runtime_error([&] {
        std::string where;
        if (line > 0) where += "line " + std::to_string(line);
        if (!field.empty()) where += (where.empty() ? "" : ", ") + std::string("field '") + field + "'";
        return where.empty() ? message : where + ": " + message;
      }()),
      line_(line),
      field_(std::move(field)) {}

std::string format_fixed17(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

json complex_to_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json amplitudes_to_json(const StateVector& v) {
  json arr = json::array();
  for (Index n = 0; n < v.dim(); ++n) arr.push_back(complex_to_json(v[n]));
  return arr;
}

json params_to_json(const GbsParams& params) {
  return json{{"N", params.max_photons()}, {"p", params.p()}, {"phi", params.phi()}};
}

json state_to_json(const GbsParams& params, const StateVector& v) {
  json out = params_to_json(params);
  out["amplitudes"] = amplitudes_to_json(v);
  return out;
}

std::string state_to_csv(const StateVector& v) {
  std::ostringstream out;
  out << "n,re,im\n";
  for (Index n = 0; n < v.dim(); ++n) {
    out << n << ',' << format_fixed17(v[n].real()) << ',' << format_fixed17(v[n].imag()) << '\n';
  }
  return out.str();
}

json basis_to_json(const DeltaBasis& basis) {
  json out{{"N", basis.max_photons}, {"p", basis.p}, {"phi", basis.phi}};
  json states = json::array();
  for (std::size_t m = 0; m < basis.states.size(); ++m) {
    states.push_back(json{{"m", m},
                          {"label_j", 0.5 * basis.max_photons},
                          {"label_m", static_cast<double>(m) - 0.5 * basis.max_photons},
                          {"amplitudes", amplitudes_to_json(basis.states[m])}});
  }
  out["states"] = std::move(states);
  return out;
}

std::string basis_to_csv(const DeltaBasis& basis) {
  std::ostringstream out;
  out << "m,n,re,im\n";
  for (std::size_t m = 0; m < basis.states.size(); ++m) {
    const StateVector& v = basis.states[m];
    for (Index n = 0; n < v.dim(); ++n) {
      out << m << ',' << n << ',' << format_fixed17(v[n].real()) << ',' << format_fixed17(v[n].imag())
          << '\n';
    }
  }
  return out.str();
}

void write_squeeze_csv(std::ostream& out, const std::vector<SqueezeRow>& rows) {
  out << "N,p,phi,S_X,S_P\n";
  for (const SqueezeRow& r : rows) {
    out << r.max_photons << ',' << format_fixed17(r.p) << ',' << format_fixed17(r.phi) << ','
        << format_fixed17(r.s_x) << ',' << format_fixed17(r.s_p) << '\n';
  }
}

LoadedState parse_state_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1));
  }
  if (!doc.is_object()) throw ParseError("expected a JSON object", 1);
  const auto amps = doc.find("amplitudes");
  if (amps == doc.end()) throw ParseError("missing field", 0, "amplitudes");
  if (!amps->is_array() || amps->empty()) throw ParseError("expected a non-empty array", 0, "amplitudes");

  CVector c(static_cast<Index>(amps->size()));
  for (std::size_t n = 0; n < amps->size(); ++n) {
    const std::string path = "amplitudes[" + std::to_string(n) + "]";
    const json& entry = (*amps)[n];
    if (entry.is_number()) {
      c(static_cast<Index>(n)) = entry.get<double>();
    } else if (entry.is_object()) {
      c(static_cast<Index>(n)) = Complex(number_field(entry, "re", path), number_field(entry, "im", path));
    } else {
      throw ParseError("expected {\"re\":…, \"im\":…} or a number", 0, path);
    }
  }

  std::optional<int> max_photons;
  if (const auto it = doc.find("N"); it != doc.end()) {
    if (!it->is_number_integer() || it->get<int>() < 0) {
      throw ParseError("expected a non-negative integer", 0, "N");
    }
    max_photons = it->get<int>();
  }
  return {max_photons, StateVector(std::move(c))};
}

LoadedState parse_state_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::map<long, Complex> entries;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto fields = split_commas(line);
    if (!header_seen) {
      if (fields != std::vector<std::string>{"n", "re", "im"}) {
        throw ParseError("expected header 'n,re,im'", line_no);
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 3) {
      throw ParseError("expected 3 fields, got " + std::to_string(fields.size()), line_no);
    }
    long n = -1;
    const auto [ptr, ec] = std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), n);
    if (ec != std::errc() || ptr != fields[0].data() + fields[0].size() || n < 0) {
      throw ParseError("expected a non-negative integer, got '" + fields[0] + "'", line_no, "n");
    }
    if (entries.count(n) != 0) throw ParseError("duplicate index " + fields[0], line_no, "n");
    entries[n] = Complex(parse_double(fields[1], line_no, "re"), parse_double(fields[2], line_no, "im"));
  }
  if (!header_seen) throw ParseError("empty input", 0);
  if (entries.empty()) throw ParseError("no amplitude rows", line_no);
  const long dim = entries.rbegin()->first + 1;
  if (static_cast<long>(entries.size()) != dim) {
    throw ParseError("indices must cover 0.." + std::to_string(dim - 1) + " without gaps", 0, "n");
  }
  CVector c(dim);
  for (const auto& [n, z] : entries) c(n) = z;
  return {std::nullopt, StateVector(std::move(c))};
}

LoadedState parse_state(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_state_json(text);
  return parse_state_csv(text);
}

}  // namespace binom::io
