#pragma once

#include "prframe/construct.hpp"
#include "prframe/lifting.hpp"
#include "prframe/subspaces.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace prframe {

using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings (integers as "p"); plain JSON integers
// are accepted on input. Index lists in reports are one-based.

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json vector_to_json(const RatVector& v);
RatVector vector_from_json(const Json& j, std::size_t n);
Json indices_to_json(IndexSet s);
Json indices_to_json(const std::vector<std::size_t>& indices);

/// {"n": n, "vectors": [[...], ...], "meta": meta}
Json frame_to_json(const Frame& frame, const Json& meta = Json::object());
/// Throws ParseError on malformed input and NotAFrame if the vectors do not span.
Frame frame_from_json(const Json& j);

/// {"n": n, "basis": [[...], ...]} with one entry per basis vector.
Json subspace_to_json(const Subspace& m);
Subspace subspace_from_json(const Json& j);

Json witness_to_json(const S2Witness& w);
Json certificate_to_json(const Certificate& c);
Json verdict_to_json(const MaximalityVerdict& v);

/// Comma-separated rationals, e.g. "1,1/2,-3".
RatVector parse_vector_list(const std::string& text);

Json read_json_file(const std::filesystem::path& path);
/// Two-space indentation and a trailing newline.
void write_json_file(const std::filesystem::path& path, const Json& j);
std::string dump(const Json& j);

}  // namespace prframe
