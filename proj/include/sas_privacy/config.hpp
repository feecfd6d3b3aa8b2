// Copyright 2026 The SaS Privacy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// EvalConfig defaults from a key=value file and the environment.

#ifndef SAS_PRIVACY_CONFIG_HPP_
#define SAS_PRIVACY_CONFIG_HPP_

#include <cstdlib>
#include <fstream>
#include <istream>
#include <string>
#include <string_view>

#include "sas_privacy/error.hpp"
#include "sas_privacy/stable.hpp"

namespace sas_privacy {

inline constexpr const char* kQuadTolEnv = "SAS_PRIVACY_QUAD_TOL";

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline double parse_config_number(std::string_view key, std::string_view text) {
  const std::string str(text);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(str, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != str.size() || str.empty()) {
    throw DomainError("config key '" + std::string(key) + "' has non-numeric value '" + str +
                      "'");
  }
  return value;
}

}  // namespace detail

// Reads lines of the form `key = value`. Blank lines and lines starting with
// '#' are ignored. Recognized keys: quad_rel_tol, quad_abs_tol,
// tail_crossover, series_terms.
inline EvalConfig parse_eval_config(std::istream& in, EvalConfig cfg = {}) {
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = detail::trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw DomainError("config line " + std::to_string(line_no) + " has no '='");
    }
    const auto key = detail::trim(text.substr(0, eq));
    const double value = detail::parse_config_number(key, detail::trim(text.substr(eq + 1)));
    if (key == "quad_rel_tol") {
      cfg.quad_rel_tol = value;
    } else if (key == "quad_abs_tol") {
      cfg.quad_abs_tol = value;
    } else if (key == "tail_crossover") {
      cfg.tail_crossover = value;
    } else if (key == "series_terms") {
      if (value != static_cast<int>(value)) throw DomainError("series_terms must be an integer");
      cfg.series_terms = static_cast<int>(value);
    } else {
      throw DomainError("unknown config key '" + std::string(key) + "'");
    }
  }
  cfg.validate();
  return cfg;
}

inline EvalConfig load_eval_config(const std::string& path, EvalConfig cfg = {}) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open config file '" + path + "'");
  return parse_eval_config(in, cfg);
}

// SAS_PRIVACY_QUAD_TOL, when set, replaces the relative quadrature tolerance.
inline EvalConfig apply_environment(EvalConfig cfg) {
  if (const char* tol = std::getenv(kQuadTolEnv); tol != nullptr && *tol != '\0') {
    cfg.quad_rel_tol = detail::parse_config_number(kQuadTolEnv, tol);
    cfg.validate();
  }
  return cfg;
}

}  // namespace sas_privacy

#endif  // SAS_PRIVACY_CONFIG_HPP_
