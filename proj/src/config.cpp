// Copyright 2026 The Collapse Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "collapse/config.hpp"

#include <charconv>
#include <cmath>
#include <set>

#include "collapse/errors.hpp"
#include "json.hpp"

namespace collapse {

namespace {

using nlohmann::json;

double parse_double_strict(const std::string& s, const std::string& what) {
  std::string t = s;
  if (!t.empty() && t.front() == '+') t.erase(t.begin());
  double value = 0.0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), value);
  if (res.ec != std::errc() || res.ptr != t.data() + t.size()) {
    throw ConfigError(what + ": cannot parse number '" + s + "'");
  }
  return value;
}

}  // namespace

Complex parse_complex_literal(const std::string& text) {
  std::string s;
  for (const char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw ConfigError("empty complex literal");

  const bool has_j = s.back() == 'j' || s.back() == 'J';
  if (!has_j) return Complex(parse_double_strict(s, "complex literal"), 0.0);
  s.pop_back();

  // Split at the last sign that does not belong to an exponent.
  size_t split = std::string::npos;
  for (size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }

  std::string real_part, imag_part;
  if (split == std::string::npos) {
    imag_part = s;
  } else {
    real_part = s.substr(0, split);
    imag_part = s.substr(split);
  }

  double imag;
  if (imag_part.empty() || imag_part == "+") {
    imag = 1.0;
  } else if (imag_part == "-") {
    imag = -1.0;
  } else {
    imag = parse_double_strict(imag_part, "complex literal");
  }
  const double real =
      real_part.empty() ? 0.0 : parse_double_strict(real_part, "complex literal");
  return Complex(real, imag);
}

namespace {

Complex parse_entry(const json& j, const std::string& key) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_string()) return parse_complex_literal(j.get<std::string>());
  throw ConfigError(key + ": matrix entries must be numbers or 're+imj' strings");
}

CVec parse_cvec(const json& j, const std::string& key) {
  if (!j.is_array() || j.empty()) {
    throw ConfigError(key + ": expected a non-empty array");
  }
  CVec v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(parse_entry(e, key));
  return v;
}

ComplexMatrix parse_matrix(const json& j, const std::string& key) {
  if (!j.is_array() || j.empty()) {
    throw ConfigError(key + ": expected an array of rows");
  }
  const int dim = static_cast<int>(j.size());
  try {
    ComplexMatrix m(dim);
    for (int r = 0; r < dim; ++r) {
      const auto& row = j[r];
      if (!row.is_array() || static_cast<int>(row.size()) != dim) {
        throw ConfigError(key + ": row " + std::to_string(r) +
                          " does not have " + std::to_string(dim) + " entries");
      }
      for (int c = 0; c < dim; ++c) m(r, c) = parse_entry(row[c], key);
    }
    return m;
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(key + ": " + e.what());
  }
}

std::vector<ComplexMatrix> parse_matrix_list(const json& j, const std::string& key) {
  if (!j.is_array() || j.empty()) {
    throw ConfigError(key + ": expected an array of matrices");
  }
  std::vector<ComplexMatrix> out;
  for (size_t i = 0; i < j.size(); ++i) {
    out.push_back(parse_matrix(j[i], key + "[" + std::to_string(i) + "]"));
  }
  return out;
}

DensityMatrix parse_state(const json& j, const std::string& key) {
  try {
    if (j.is_string()) {
      const std::string name = j.get<std::string>();
      const double s = std::sqrt(0.5);
      if (name == "zero") return DensityMatrix::pure({1.0, 0.0});
      if (name == "one") return DensityMatrix::pure({0.0, 1.0});
      if (name == "plus") return DensityMatrix::pure({s, s});
      if (name == "minus") return DensityMatrix::pure({s, -s});
      if (name == "mixed" || name == "mixed:I/2") {
        return DensityMatrix::maximally_mixed(2);
      }
      throw ConfigError(key + ": unknown state preset '" + name + "'");
    }
    if (j.is_object() && j.contains("bloch")) {
      const auto& b = j.at("bloch");
      if (!b.is_array() || b.size() != 3) {
        throw ConfigError(key + ".bloch: expected [x, y, z]");
      }
      return DensityMatrix::from_bloch(b[0].get<double>(), b[1].get<double>(),
                                       b[2].get<double>());
    }
    if (j.is_object() && j.contains("matrix")) {
      return DensityMatrix(parse_matrix(j.at("matrix"), key + ".matrix"));
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(key + ": " + e.what());
  }
  throw ConfigError(key + ": expected a preset name, {\"bloch\": ...} or "
                          "{\"matrix\": ...}");
}

Measurement parse_measurement(const json& j, const std::string& key) {
  try {
    if (j.is_string()) {
      const std::string name = j.get<std::string>();
      if (name == "sigmaz") return Measurement::sigma_z();
      if (name == "sigmax") return Measurement::sigma_x();
      if (name == "sigmay") return Measurement::sigma_y();
      throw ConfigError(key + ": unknown measurement preset '" + name + "'");
    }
    if (j.is_object() && j.contains("basis_angle")) {
      return Measurement::rotated_qubit_basis(j.at("basis_angle").get<double>());
    }
    if (j.is_object() && j.contains("basis")) {
      const auto& b = j.at("basis");
      if (!b.is_array() || b.empty()) {
        throw ConfigError(key + ".basis: expected an array of vectors");
      }
      std::vector<CVec> basis;
      for (size_t i = 0; i < b.size(); ++i) {
        basis.push_back(
            parse_cvec(b[i], key + ".basis[" + std::to_string(i) + "]"));
      }
      return Measurement::from_basis(std::move(basis));
    }
    if (j.is_object() && j.contains("effects")) {
      std::vector<ComplexMatrix> effects =
          parse_matrix_list(j.at("effects"), key + ".effects");
      const std::string kind =
          j.contains("kind") ? j.at("kind").get<std::string>() : "povm";
      if (kind == "povm") return Measurement::povm(std::move(effects));
      if (kind == "projective") return Measurement::projective(std::move(effects));
      throw ConfigError(key + ".kind: expected 'povm' or 'projective'");
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(key + ": " + e.what());
  }
  throw ConfigError(key + ": expected a preset name, {\"basis_angle\": ...}, "
                          "{\"basis\": ...} or {\"effects\": ...}");
}

Realization parse_realization(const json& j, const Measurement& a,
                              const std::string& key) {
  try {
    if (j.is_string()) {
      const std::string name = j.get<std::string>();
      if (name == "ideal" || name == "lueders") return IdealLueders{};
      throw ConfigError(key + ": unknown realization '" + name + "'");
    }
    if (j.is_object() && j.contains("unitaries")) {
      return RealizationUnitaries{
          parse_matrix_list(j.at("unitaries"), key + ".unitaries")};
    }
    if (j.is_object() && j.contains("kraus")) {
      return NoisyChannel{parse_matrix_list(j.at("kraus"), key + ".kraus")};
    }
    if (j.is_object() && j.contains("depolarizing_after_lueders")) {
      const double lambda = j.at("depolarizing_after_lueders").get<double>();
      return noisy_lueders(a, depolarizing_kraus(a.dim(), lambda), 0.0)
          .realization();
    }
    if (j.is_object() && j.contains("amplitude_damping_after_lueders")) {
      const double gamma = j.at("amplitude_damping_after_lueders").get<double>();
      return noisy_lueders(a, amplitude_damping_kraus(gamma), 0.0).realization();
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(key + ": " + e.what());
  }
  throw ConfigError(key + ": expected 'ideal', {\"unitaries\": ...}, "
                          "{\"kraus\": ...} or a noise preset");
}

}  // namespace

namespace {

std::uint64_t get_u64(const json& doc, const std::string& key,
                      std::uint64_t fallback) {
  if (!doc.contains(key)) return fallback;
  const auto& v = doc.at(key);
  if (!v.is_number_unsigned()) {
    throw ConfigError(key + ": expected a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

double get_finite(const json& doc, const std::string& key, double fallback) {
  if (!doc.contains(key)) return fallback;
  const auto& v = doc.at(key);
  if (!v.is_number()) throw ConfigError(key + ": expected a number");
  return v.get<double>();
}

RunConfig parse_config_checked(const json& doc);

}  // namespace

RunConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config syntax error: ") + e.what());
  }
  try {
    return parse_config_checked(doc);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config error: ") + e.what());
  }
}

namespace {

RunConfig parse_config_checked(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");

  static const std::set<std::string> known{
      "state",     "measurement_a", "measurement_b", "realization",
      "real_effects_b", "n",        "n_upper",       "seed",
      "trust",     "epsilon_a",     "epsilon_b",     "budget"};
  for (const auto& [k, v] : doc.items()) {
    if (!known.count(k)) throw ConfigError("unknown config key '" + k + "'");
  }
  for (const char* req : {"state", "measurement_a", "measurement_b"}) {
    if (!doc.contains(req)) {
      throw ConfigError(std::string("missing required key '") + req + "'");
    }
  }

  DensityMatrix rho = parse_state(doc.at("state"), "state");
  Measurement ma = parse_measurement(doc.at("measurement_a"), "measurement_a");
  Measurement mb = parse_measurement(doc.at("measurement_b"), "measurement_b");

  const double eps_a = get_finite(doc, "epsilon_a", 0.0);
  const double eps_b = get_finite(doc, "epsilon_b", 0.0);

  Realization realization =
      doc.contains("realization")
          ? parse_realization(doc.at("realization"), ma, "realization")
          : Realization{IdealLueders{}};

  std::optional<std::vector<ComplexMatrix>> real_effects;
  if (doc.contains("real_effects_b")) {
    real_effects = parse_matrix_list(doc.at("real_effects_b"), "real_effects_b");
  }

  const std::uint64_t n = get_u64(doc, "n", 1000000ULL);
  const std::uint64_t n_upper =
      get_u64(doc, "n_upper",
              static_cast<std::uint64_t>(
                  std::ceil(std::sqrt(static_cast<double>(n)))));
  const std::uint64_t seed = get_u64(doc, "seed", 1ULL);

  TrustLevel trust = TrustLevel::untrusted_povm();
  const std::string trust_name =
      doc.contains("trust") ? doc.at("trust").get<std::string>() : "untrusted";
  try {
    if (trust_name == "untrusted" || trust_name == "untrusted_povm") {
      trust = TrustLevel::untrusted_povm();
    } else if (trust_name == "projective" ||
               trust_name == "projective_uncharacterized") {
      trust = TrustLevel::projective_uncharacterized();
    } else if (trust_name == "trusted_von_neumann") {
      trust = TrustLevel::trusted_von_neumann(overlap_matrix(ma, mb));
    } else {
      throw ConfigError("trust: unknown level '" + trust_name + "'");
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(std::string("trust: ") + e.what());
  }

  const std::uint64_t budget = get_u64(doc, "budget", 1000ULL);
  if (budget < 1 || budget > 100000000ULL) {
    throw ConfigError("budget must lie in [1, 10^8]");
  }

  try {
    InstrumentSpec instrument(std::move(ma), std::move(realization), eps_a);
    TestMeasurementSpec test(std::move(mb), std::move(real_effects), eps_b);
    Scenario scenario(std::move(rho), std::move(instrument), std::move(test), n,
                      n_upper, seed);
    return RunConfig{std::move(scenario), std::move(trust),
                     NoiseParams(eps_a, eps_b), static_cast<int>(budget)};
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace

}  // namespace collapse
