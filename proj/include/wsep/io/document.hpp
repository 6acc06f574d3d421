#pragma once

#include "wsep/collection.hpp"
#include "wsep/plabic_graph.hpp"
#include "wsep/positroid.hpp"
#include "wsep/tiling.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace wsep::io {

using json = nlohmann::ordered_json;

inline constexpr const char* format_version = "1";

// Reads JSON text; syntax errors become parse_error with a "line:column" location.
json parse_text(const std::string& text);
// two-space indented, trailing newline
std::string dump(const json& doc);

// checks the version field and returns the document kind
std::string document_kind(const json& doc);

json subset_json(subset s);
subset subset_from_json(const json& v, int n, const std::string& loc);

json to_json(const collection& c);
json to_json(const necklace& nk);
json to_json(const decorated_perm& p);
json to_json(const plabic_graph& g);
json to_json(const embedded_tiling& et);

// strict: sizes, weak separation and anchor membership are load invariants;
// a violation is a parse_error naming the offending sets.
collection collection_from_json(const json& doc, bool strict = true);
necklace necklace_from_json(const json& doc);
decorated_perm permutation_from_json(const json& doc);
plabic_graph plabic_from_json(const json& doc);
// re-embeds the collection on the stored polygon and checks the stored coordinates
embedded_tiling tiling_from_json(const json& doc);

json site_json(const mutation_site& s);
mutation_site site_from_json(const json& v, int n, const std::string& loc);

json report_json(const std::string& suite, bool ok, const std::string& summary,
                 const std::vector<std::string>& details = {});

} // namespace wsep::io
