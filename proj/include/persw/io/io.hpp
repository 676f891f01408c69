#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "persw/bundle/bundle.hpp"
#include "persw/projective/projective.hpp"
#include "persw/z2/persistence.hpp"

namespace persw::io {

using nlohmann::json;

/// {"n", "m", "gamma", "points": [{"x": [...], "A": [[...]]}]}
json cloud_to_json(const bundle::LiftedCloud& cloud);

/// Inverse of cloud_to_json. A point may give "v" (a line direction) in place of "A".
/// Throws InvalidArgument for malformed documents or an empty cloud.
bundle::LiftedCloud cloud_from_json(const json& doc);

/// [{"dim", "birth", "death"}] with null for infinite deaths.
json barcode_to_json(const z2::Barcode& barcode);
z2::Barcode barcode_from_json(const json& doc);

/// {"t_max", "t_dagger", "resolution", "evaluations": [{"t", "nonzero", "subdivisions"}], "caveat"}
json lifebar_to_json(const bundle::Lifebar& bar);
bundle::Lifebar lifebar_from_json(const json& doc);

/// {"vertex_count", "simplices": [[...], ...]} in canonical order.
json complex_to_json(const SimplicialComplex& complex);

/// complex_to_json plus "m", "labels", "embeddings" and the w1 support edges.
json triangulation_to_json(const projective::ProjectiveTriangulation& t);

/// Reads and parses a JSON file. Throws InvalidArgument when the file cannot be read or parsed.
json read_json(const std::filesystem::path& path);
/// Writes `text` to `path`. Throws Error when the file cannot be written.
void write_text(const std::filesystem::path& path, std::string_view text);

/// Self-contained SVG: one row per bar, grouped by dimension; infinite bars end in an arrow.
std::string render_barcode_svg(const z2::Barcode& barcode);
/// Self-contained SVG of the index set [0, t_max): solid where the class is nonzero,
/// hatched elsewhere.
std::string render_lifebar_svg(const bundle::Lifebar& bar);

/// Text rendering with 80-column lines.
std::string render_barcode_text(const z2::Barcode& barcode);
std::string render_lifebar_text(const bundle::Lifebar& bar);

}  // namespace persw::io
