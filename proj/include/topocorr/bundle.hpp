#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "topocorr/scalar_field.hpp"
#include "topocorr/shapes.hpp"
#include "topocorr/simplicial_complex.hpp"

namespace topocorr {

/// One self-contained space: a complex, named per-vertex fields, optional
/// embedding coordinates. The on-disk form is a JSON document with keys
/// `vertices`, `simplices`, `fields` and optional `coordinates`.
struct Bundle {
    int vertex_count = 0;
    SimplicialComplex complex;
    std::map<std::string, ScalarField> fields;
    std::optional<std::vector<std::array<double, 3>>> coordinates;

    const ScalarField& field(const std::string& name) const;
};

/// Parse and validate a bundle document. Every declared vertex becomes a
/// 0-simplex; listed simplices are face-closed; field lengths, finiteness
/// and coordinate counts are checked.
Bundle parse_bundle(const std::string& text);

/// Canonical serialization: fixed key order, fields sorted by name,
/// shortest round-trip float formatting. parse(emit(b)) is semantically
/// identical to b.
std::string emit_bundle(const Bundle& bundle);

/// ASCII OFF triangle mesh plus a comma-separated per-vertex field table
/// (header row of field names, one row per mesh vertex).
Bundle parse_off_with_fields(const std::string& off_text, const std::string& table_text);

std::string write_off(const Bundle& bundle);
std::string write_field_table(const Bundle& bundle);

Bundle bundle_from_mesh(const EmbeddedMesh& mesh,
                        const std::vector<std::pair<std::string, ScalarField>>& fields);

} // namespace topocorr
