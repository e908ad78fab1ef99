#pragma once

#include <string>

#include <json.hpp>

#include "tabrw/crystal.hpp"
#include "tabrw/rewriting.hpp"

namespace tabrw {

/// Diagram wire format, bit-exact:
///   {"n": <int>, "columns": [[top,...,bottom],...], "gluing": [p1,...]}
/// The empty diagram is {"n": k, "columns": [], "gluing": []}.
nlohmann::json diagram_to_json(const StringOfColumns& w, int n);
StringOfColumns diagram_from_json(const nlohmann::json& j, int* n_out = nullptr);

/// Trace wire format: a list of {"rule", "index", "diagram"} objects.
nlohmann::json trace_to_json(const ReductionTrace& t, int n);
ReductionTrace trace_from_json(const nlohmann::json& j);

nlohmann::json graph_to_json(const CrystalGraph<Word>& g);
nlohmann::json graph_to_json(const CrystalGraph<StringOfColumns>& g, int n);

}  // namespace tabrw
