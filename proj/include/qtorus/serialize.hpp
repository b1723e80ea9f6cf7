// Copyright 2026 The qtorus Authors
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

// JSON forms of the library's values. Complex numbers are [re, im] and
// matrices are row-major nested arrays of them.

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qtorus/compiler.hpp"
#include "qtorus/errors.hpp"
#include "qtorus/generators.hpp"
#include "qtorus/lieclosure.hpp"
#include "qtorus/linalg.hpp"
#include "qtorus/symalg.hpp"

namespace qtorus {

using Json = nlohmann::json;

inline Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Json to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    detail::fail(ErrorCode::invalid_argument, "json: complex entries must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

/// Square matrix from nested arrays; plain numbers are read as real entries.
inline ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) {
    detail::fail(ErrorCode::invalid_argument, "json: matrix must be a non-empty array of rows");
  }
  const auto n = static_cast<Eigen::Index>(j.size());
  ComplexMatrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      detail::fail(ErrorCode::dimension_mismatch, "json: matrix must be square");
    }
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  validate(m, "json matrix");
  return m;
}

inline Json to_json(const GeneratorSet& s, bool with_matrices = false) {
  Json elements = Json::array();
  for (const auto& g : s.elements) {
    Json e = {{"id", g.id},
              {"locality", g.locality},
              {"hermiticity", std::string(to_string(g.hermiticity))}};
    if (with_matrices) e["matrix"] = to_json(g.matrix);
    elements.push_back(std::move(e));
  }
  return {{"family", std::string(to_string(s.family))},
          {"n", s.n},
          {"l", s.l},
          {"dim", s.dim()},
          {"count", s.elements.size()},
          {"elements", std::move(elements)},
          {"notes", s.notes}};
}

inline Json to_json(const RelationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"max_violation", c.max_violation}});
  }
  return {{"family", std::string(to_string(r.family))},
          {"n", r.n},
          {"l", r.l},
          {"checks", std::move(checks)},
          {"max_locality", r.max_locality},
          {"max_violation", r.max_violation()}};
}

inline Json to_json(const LieBasis& b) {
  Json elements = Json::array();
  for (std::size_t j = 0; j < b.size(); ++j) {
    elements.push_back({{"index", j},
                        {"generation", b.generation[j]},
                        {"recipe", to_sexpr(b.recipes[j])},
                        {"scale", b.scale(j)}});
  }
  Json out = {{"matrix_dim", b.matrix_dim},
              {"dim", b.size()},
              {"dim_ambient", b.dim_ambient},
              {"max_generation", b.max_generation()},
              {"recipe_error", recipe_fidelity_error(b)},
              {"elements", std::move(elements)}};
  out["center_index"] = b.center_index ? Json(*b.center_index) : Json(nullptr);
  return out;
}

inline Json to_json(const Membership& m) {
  return {{"member", m.member}, {"residual", m.residual}, {"coefficients", m.coefficients}};
}

inline Json to_json(const Monomial& m) {
  return {{"l", m.l},
          {"n", m.n},
          {"phase_exp", m.phase_exp},
          {"exps", m.exps},
          {"text", render(m)}};
}

inline Json to_json(const CompileReport& r) {
  Json out = {{"frob_error", r.frob_error},
              {"phase_invariant_error", r.phase_invariant_error},
              {"slices", r.slice_count},
              {"gate_count", r.gate_count},
              {"global_phase", r.global_phase},
              {"membership_residual", r.membership_residual},
              {"branch_split", r.branch_split},
              {"target_met", r.target_met}};
  out["target_error"] = r.target_error ? Json(*r.target_error) : Json(nullptr);
  return out;
}

inline Json to_json(const GateSequence& seq) {
  Json items = Json::array();
  for (const auto& it : seq.items) items.push_back(Json::array({it.id, it.tau}));
  return {{"gens", seq.gens},
          {"n", seq.n},
          {"l", seq.l},
          {"target_dim", seq.target_dim},
          {"items", std::move(items)},
          {"report", to_json(seq.report)}};
}

/// Reads the "items" list of a serialized sequence ([[id, tau], ...]).
inline std::vector<GateItem> items_from_json(const Json& j) {
  const Json& list = j.is_object() ? j.at("items") : j;
  if (!list.is_array()) detail::fail(ErrorCode::invalid_argument, "json: items must be an array");
  std::vector<GateItem> out;
  for (const auto& e : list) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_number()) {
      detail::fail(ErrorCode::invalid_argument, "json: each item must be [id, tau]");
    }
    out.push_back({e[0].get<std::string>(), e[1].get<double>()});
  }
  return out;
}

inline Json to_json(const ConvergenceTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    rows.push_back({{"slices", r.slices},
                    {"phase_invariant_error", r.phase_invariant_error},
                    {"frob_error", r.frob_error},
                    {"gate_count", r.gate_count}});
  }
  return {{"rows", std::move(rows)}, {"monotone", t.monotone}, {"improvement", t.improvement}};
}

inline Json to_json(const DimensionRow& r, bool with_timing = true) {
  Json out = {{"family", std::string(to_string(r.family))},
              {"n", r.n},
              {"l", r.l},
              {"measure", std::string(to_string(r.measure))},
              {"predicted", r.predicted},
              {"measured", r.measured()},
              {"dim", r.dim},
              {"dim_with_phase", r.dim_with_phase},
              {"generations", r.generations},
              {"recipe_error", r.recipe_error},
              {"pass", r.pass()},
              {"note", r.note}};
  if (with_timing) out["seconds"] = r.seconds;
  return out;
}

inline Json to_json(const SpinReport& r) {
  return {{"n", r.n},
          {"dim", r.dim},
          {"predicted", r.predicted},
          {"generator_count", r.generator_count},
          {"pair_count", r.pair_count},
          {"span_rank", r.span_rank},
          {"closure_in_span", r.closure_in_span},
          {"span_in_closure", r.span_in_closure},
          {"pass", r.pass()}};
}

inline Json error_json(const Error& e) {
  Json err = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
  if (const auto* nm = dynamic_cast<const NotMemberError*>(&e)) err["residual"] = nm->residual();
  return {{"error", std::move(err)}};
}

}  // namespace qtorus
