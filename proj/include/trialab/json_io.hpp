#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include "trialab/crossed.hpp"

namespace trialab {

/// One loadable document: the payload type is identified by the "schema" tag
/// ("trialab/<type>@1" with type one of algebra, map, subspace, action,
/// crossed-module).
using Document = std::variant<Algebra, Mat, Subspace, Action, CrossedModule>;

/// Parses and validates a document; unknown fields, malformed coefficients,
/// duplicate tensor entries and out-of-range indices are input errors that
/// name the offending field path. File references inside action and
/// crossed-module documents resolve relative to the referring file.
Document load_document(const std::filesystem::path& path);

Algebra load_algebra(const std::filesystem::path& path);
Mat load_map(const std::filesystem::path& path);
Subspace load_subspace(const std::filesystem::path& path);
Action load_action(const std::filesystem::path& path);
CrossedModule load_crossed_module(const std::filesystem::path& path);

/// Canonical serialization: fixed key order, sorted tensor entries,
/// lowest-terms rationals rendered as "p" or "p/q", two-space indent, final
/// newline. save(load(save(x))) is byte-identical to save(x).
std::string document_to_text(const Document& doc);
void save_document(const Document& doc, const std::filesystem::path& path);

}  // namespace trialab
