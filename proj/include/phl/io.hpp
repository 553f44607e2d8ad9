#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "phl/construction.hpp"
#include "phl/ev_system.hpp"
#include "phl/factorization.hpp"
#include "phl/gscheme.hpp"
#include "phl/hom.hpp"
#include "phl/poset.hpp"

namespace phl::io {

using json = nlohmann::ordered_json;

/// {"labels": [...], "pairs": [[a, b], ...], "mode": "covers"}; pairs are the covers.
json poset_to_json(const Poset& p);
/// Accepts "mode" = "covers" (default) or "full". MalformedInput on bad shape.
Poset poset_from_json(const json& doc);

/// "catalog:<name>", "file:<path>", an inline JSON object, or a bare path.
/// Relative paths resolve against base_dir.
Poset load_poset(std::string_view ref, const std::filesystem::path& base_dir = {});
/// A string reference or an embedded poset document.
Poset poset_from_ref(const json& ref, const std::filesystem::path& base_dir = {});

json read_json_file(const std::filesystem::path& path);

/// {"<dom label>": "<cod label>", ...} in domain order.
json hom_to_json(const HomMap& f);
/// MalformedInput unless every domain label is mapped exactly once.
HomMap hom_from_json(const json& doc, const Poset& dom, const Poset& cod);

json ev_element_to_json(const EVSystem& e, std::size_t i);
/// One JSON object per line, in element order.
std::string ev_to_jsonl(const EVSystem& e);
/// <+ edges drawn upward, one cluster per fibre.
std::string ev_to_dot(const EVSystem& e, std::string_view graph_name = "E");

json certificate_to_json(const TransportCertificate& cert);
/// MalformedCertificate on any shape or reference problem. Lambda entries
/// may be 0-based indices into "q" or poset references matched up to
/// isomorphism.
TransportCertificate certificate_from_json(const json& doc, const std::filesystem::path& base_dir = {});

json spec_to_json(const ConstructionSpec& spec);
ConstructionSpec spec_from_json(const json& doc, const std::filesystem::path& base_dir = {});

/// Three blocks (sro, emb, strict) of comma separated rows with a header.
std::string format_csv(const FactorMatrices& m);
/// Aligned columns with zero cells left blank.
std::string format_pretty(const FactorMatrices& m);

}  // namespace phl::io
