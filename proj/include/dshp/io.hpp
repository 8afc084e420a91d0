// Copyright 2026 The DSHP Authors
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

#ifndef DSHP_IO_HPP_
#define DSHP_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "dshp/errors.hpp"
#include "dshp/model.hpp"
#include "dshp/rational.hpp"

// Instance and solution files are UTF-8 JSON. Numbers that carry values are
// strings in decimal ("1.25") or fraction ("5/4") form so that they parse
// exactly; integer JSON literals are also accepted for them.
//
// Instance: {"n", "m", "k", "c": [n], "p": [m], "f": [n][m], "label"?}
// Solution: {"first_stage": [...], "second_stage": [m][...], "value": "a/b"}

namespace dshp {

using Json = nlohmann::ordered_json;

namespace io_detail {

inline std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON at " + line_col(text, e.byte) + ": " +
                     e.what());
  }
}

inline const Json& member(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return *it;
}

inline int to_int(const Json& v, const std::string& field) {
  if (!v.is_number_integer()) {
    throw ParseError("field '" + field + "': expected an integer");
  }
  const auto x = v.get<long long>();
  if (x < -(1LL << 30) || x > (1LL << 30)) {
    throw ParseError("field '" + field + "': integer out of range");
  }
  return static_cast<int>(x);
}

inline Rational to_rational(const Json& v, const std::string& field) {
  if (v.is_string()) {
    if (auto r = Rational::parse(v.get<std::string>())) return *r;
    throw ParseError("field '" + field + "': '" + v.get<std::string>() +
                     "' is not a rational numeral");
  }
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Rational(v.get<unsigned long long>())
                                  : Rational(v.get<long long>());
  }
  throw ParseError("field '" + field +
                   "': expected a numeric string such as \"1.25\" or \"5/4\"");
}

inline const Json& array_of(const Json& v, const std::string& field,
                            std::size_t size) {
  if (!v.is_array()) throw ParseError("field '" + field + "': expected array");
  if (v.size() != size) {
    throw ParseError("field '" + field + "': expected " + std::to_string(size) +
                     " entries, found " + std::to_string(v.size()));
  }
  return v;
}

inline std::vector<int> index_list(const Json& v, const std::string& field) {
  if (!v.is_array()) throw ParseError("field '" + field + "': expected array");
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(to_int(v[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace io_detail

/// Parses an instance file. Shape mismatches and bad numerals raise
/// ParseError with the offending field path; invariants such as the
/// probability sum are left to validate().
inline Instance parse_instance(std::string_view text) {
  using namespace io_detail;
  const Json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("instance must be a JSON object");
  Instance in;
  in.n = to_int(member(doc, "n"), "n");
  in.m = to_int(member(doc, "m"), "m");
  in.k = to_int(member(doc, "k"), "k");
  if (in.n < 0 || in.m < 0) throw ParseError("field 'n'/'m': negative size");
  const auto& c = array_of(member(doc, "c"), "c", in.n);
  for (std::size_t i = 0; i < c.size(); ++i) {
    in.c.push_back(to_rational(c[i], "c[" + std::to_string(i) + "]"));
  }
  const auto& p = array_of(member(doc, "p"), "p", in.m);
  for (std::size_t j = 0; j < p.size(); ++j) {
    in.p.push_back(to_rational(p[j], "p[" + std::to_string(j) + "]"));
  }
  const auto& f = array_of(member(doc, "f"), "f", in.n);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const std::string row_name = "f[" + std::to_string(i) + "]";
    const auto& row = array_of(f[i], row_name, in.m);
    auto& out = in.f.emplace_back();
    for (std::size_t j = 0; j < row.size(); ++j) {
      out.push_back(to_rational(row[j], row_name + "[" + std::to_string(j) + "]"));
    }
  }
  if (auto it = doc.find("label"); it != doc.end()) {
    if (!it->is_string()) throw ParseError("field 'label': expected string");
    in.label = it->get<std::string>();
  }
  return in;
}

inline Json instance_to_json(const Instance& in) {
  Json doc;
  doc["n"] = in.n;
  doc["m"] = in.m;
  doc["k"] = in.k;
  doc["c"] = Json::array();
  for (const auto& v : in.c) doc["c"].push_back(v.to_string());
  doc["p"] = Json::array();
  for (const auto& v : in.p) doc["p"].push_back(v.to_string());
  doc["f"] = Json::array();
  for (const auto& row : in.f) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(v.to_string());
    doc["f"].push_back(std::move(r));
  }
  if (!in.label.empty()) doc["label"] = in.label;
  return doc;
}

// One JSON object followed by a newline.
inline std::string serialize_instance(const Instance& in) {
  return instance_to_json(in).dump() + "\n";
}

inline Solution parse_solution(std::string_view text) {
  using namespace io_detail;
  const Json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("solution must be a JSON object");
  Solution sol;
  sol.first_stage = index_list(member(doc, "first_stage"), "first_stage");
  const auto& second = member(doc, "second_stage");
  if (!second.is_array()) {
    throw ParseError("field 'second_stage': expected array");
  }
  for (std::size_t j = 0; j < second.size(); ++j) {
    sol.second_stage.push_back(
        index_list(second[j], "second_stage[" + std::to_string(j) + "]"));
  }
  sol.value = to_rational(member(doc, "value"), "value");
  return sol;
}

inline Json solution_to_json(const Solution& sol) {
  Json doc;
  doc["first_stage"] = sol.first_stage;
  doc["second_stage"] = Json::array();
  for (const auto& s : sol.second_stage) doc["second_stage"].push_back(s);
  doc["value"] = sol.value.to_string();
  return doc;
}

inline std::string serialize_solution(const Solution& sol) {
  return solution_to_json(sol).dump() + "\n";
}

}  // namespace dshp

#endif  // DSHP_IO_HPP_
