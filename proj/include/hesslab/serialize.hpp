#pragma once

#include "hesslab/gradmap.hpp"
#include "hesslab/quadform.hpp"
#include "hesslab/triangulate.hpp"

#include <json.hpp>

#include <string>

namespace hesslab {

/// JSON encodings of the structured records.  All scalars serialize as exact
/// canonical strings; identical inputs produce byte-identical output.

scalar parse_scalar(const std::string& text, field_kind field);

nlohmann::json to_json(const scalar_matrix& m);
scalar_matrix matrix_from_json(const nlohmann::json& j, field_kind field);

nlohmann::json to_json(const poly_matrix& m);
nlohmann::json to_json(const weight_fn& w);
weight_fn weights_from_json(const nlohmann::json& j);

nlohmann::json to_json(const anti_tri_witness& w);
/// Reads back T, route, w, leading and constants; the caller re-verifies the
/// invariants against its polynomial via make_anti_tri_witness.
anti_tri_witness witness_from_json(const nlohmann::json& j, const context_ptr& ctx);

nlohmann::json to_json(const classification& cls);
nlohmann::json to_json(const descent_certificate& cert);
descent_certificate certificate_from_json(const nlohmann::json& j);
nlohmann::json to_json(const isotropy_result& r);
nlohmann::json to_json(const inverse_witness& w);

std::string witness_case_tag(witness_route route);

} // namespace hesslab
