#pragma once

#include <string>

#include "json.hpp"
#include "monocat/catalog.hpp"
#include "monocat/decomp.hpp"
#include "monocat/rep.hpp"
#include "monocat/tree.hpp"
#include "monocat/valuated.hpp"

namespace monocat {

using Json = nlohmann::ordered_json;

/// Current document version, written as "schema" and checked on input when present.
inline constexpr int kSchema = 1;

/// {schema, p, n, quiver: {vertices, arrows: [[s,t],…]} | "a3", modules: [[parts]…],
///  maps: [{arrow, entries: [[…]]}]}. Arrows without an entry in `maps` get the zero map.
/// Optional "name" and "meta" (ignored) fields are accepted; anything else is rejected.
Rep rep_from_json(const Json& j);
Json rep_to_json(const Rep& M);

Quiver quiver_from_json(const Json& j);
Json quiver_to_json(const Quiver& q);

/// {schema, components: [{vertex, entries}]}; shapes are taken from M and N.
RepMorphism morphism_from_json(const Json& j, const Rep& M, const Rep& N);
Json morphism_to_json(const RepMorphism& f);

/// {n, parent: [..] (1-based, 0 = root), valuation: [..]} or a string in tree syntax.
/// When the JSON form carries "n" it is stored in *n.
ValuatedTree tree_from_json(const Json& j, int* n = nullptr);
Json tree_to_json(const ValuatedTree& T, int n);

Json valuated_group_to_json(const ValuatedGroup& B);
Json mono_to_json(const MonoResult& r);
Json decomposition_to_json(const Decomposition& D);
Json catalog_report_to_json(const CatalogReport& r);

/// Parse text as JSON; syntax errors become InputError.
Json parse_json(const std::string& text);

}  // namespace monocat
