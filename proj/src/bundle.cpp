#include "topocorr/bundle.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "topocorr/errors.hpp"

namespace topocorr {

namespace {

using json = nlohmann::ordered_json;

std::string format_double(double v) {
    std::array<char, 32> buffer;
    auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), v);
    return std::string(buffer.data(), end);
}

double require_finite_number(const json& j, const std::string& where) {
    if (!j.is_number()) {
        throw BundleParseError("expected a number in " + where);
    }
    const double v = j.get<double>();
    if (!std::isfinite(v)) {
        throw NonFiniteValueError("non-finite value in " + where);
    }
    return v;
}

} // namespace

const ScalarField& Bundle::field(const std::string& name) const {
    auto it = fields.find(name);
    if (it == fields.end()) {
        throw BundleParseError("bundle has no field named '" + name + "'");
    }
    return it->second;
}

Bundle parse_bundle(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw BundleParseError(std::string("bundle is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw BundleParseError("bundle document must be an object");
    if (!doc.contains("vertices") || !doc["vertices"].is_number_integer() ||
        doc["vertices"].get<long long>() < 0) {
        throw BundleParseError("bundle needs a non-negative integer 'vertices'");
    }
    if (!doc.contains("simplices") || !doc["simplices"].is_array()) {
        throw BundleParseError("bundle needs a 'simplices' array");
    }

    Bundle bundle;
    bundle.vertex_count = doc["vertices"].get<int>();

    std::vector<Simplex> simplices;
    for (int v = 0; v < bundle.vertex_count; ++v) simplices.push_back({v});
    for (const json& entry : doc["simplices"]) {
        if (!entry.is_array() || entry.empty()) {
            throw BundleParseError("each simplex must be a non-empty array of vertex indices");
        }
        Simplex s;
        for (const json& v : entry) {
            if (!v.is_number_integer()) {
                throw BundleParseError("simplex vertices must be integers");
            }
            s.push_back(v.get<int>());
        }
        simplices.push_back(std::move(s));
    }
    try {
        bundle.complex = build_complex(simplices, bundle.vertex_count);
    } catch (const MalformedSimplexError& e) {
        throw BundleParseError(std::string("invalid simplices: ") + e.what());
    }

    if (doc.contains("fields")) {
        if (!doc["fields"].is_object()) {
            throw BundleParseError("'fields' must map names to value arrays");
        }
        for (const auto& [name, column] : doc["fields"].items()) {
            if (!column.is_array()) {
                throw BundleParseError("field '" + name + "' must be an array");
            }
            if (column.size() != static_cast<std::size_t>(bundle.vertex_count)) {
                throw BundleParseError("field '" + name + "' has length " +
                                       std::to_string(column.size()) + ", expected " +
                                       std::to_string(bundle.vertex_count));
            }
            std::vector<double> values;
            values.reserve(column.size());
            for (const json& v : column) {
                values.push_back(require_finite_number(v, "field '" + name + "'"));
            }
            bundle.fields.emplace(name, ScalarField(std::move(values)));
        }
    }

    if (doc.contains("coordinates")) {
        if (!doc["coordinates"].is_array() ||
            doc["coordinates"].size() != static_cast<std::size_t>(bundle.vertex_count)) {
            throw BundleParseError("'coordinates' must hold one [x,y,z] per vertex");
        }
        std::vector<std::array<double, 3>> coordinates;
        coordinates.reserve(doc["coordinates"].size());
        for (const json& point : doc["coordinates"]) {
            if (!point.is_array() || point.size() != 3) {
                throw BundleParseError("each coordinate must be a 3-array");
            }
            coordinates.push_back({require_finite_number(point[0], "coordinates"),
                                   require_finite_number(point[1], "coordinates"),
                                   require_finite_number(point[2], "coordinates")});
        }
        bundle.coordinates = std::move(coordinates);
    }

    return bundle;
}

std::string emit_bundle(const Bundle& bundle) {
    json doc;
    doc["vertices"] = bundle.vertex_count;
    json simplices = json::array();
    for (const Simplex& s : bundle.complex.simplices()) {
        if (s.size() == 1) continue; // vertices are implied by the count
        simplices.push_back(s);
    }
    doc["simplices"] = std::move(simplices);
    json fields = json::object();
    for (const auto& [name, field] : bundle.fields) {
        fields[name] = field.values();
    }
    doc["fields"] = std::move(fields);
    if (bundle.coordinates) {
        json coordinates = json::array();
        for (const auto& p : *bundle.coordinates) {
            coordinates.push_back(json::array({p[0], p[1], p[2]}));
        }
        doc["coordinates"] = std::move(coordinates);
    }
    return doc.dump(2) + "\n";
}

Bundle parse_off_with_fields(const std::string& off_text, const std::string& table_text) {
    std::istringstream off(off_text);
    std::string token;
    if (!(off >> token) || token != "OFF") {
        throw BundleParseError("OFF input must start with the OFF keyword");
    }
    long long nv = 0, nf = 0, ne = 0;
    if (!(off >> nv >> nf >> ne) || nv < 0 || nf < 0) {
        throw BundleParseError("OFF header needs vertex and face counts");
    }

    std::vector<std::array<double, 3>> coordinates;
    coordinates.reserve(static_cast<std::size_t>(nv));
    for (long long i = 0; i < nv; ++i) {
        double x, y, z;
        if (!(off >> x >> y >> z)) {
            throw BundleParseError("OFF vertex line " + std::to_string(i) + " is malformed");
        }
        if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) {
            throw NonFiniteValueError("OFF vertex coordinate is not finite");
        }
        coordinates.push_back({x, y, z});
    }

    std::vector<Simplex> simplices;
    for (long long v = 0; v < nv; ++v) simplices.push_back({static_cast<int>(v)});
    for (long long i = 0; i < nf; ++i) {
        int arity = 0;
        if (!(off >> arity) || arity != 3) {
            throw BundleParseError("OFF face " + std::to_string(i) +
                                   " is not a triangle");
        }
        int a, b, c;
        if (!(off >> a >> b >> c)) {
            throw BundleParseError("OFF face " + std::to_string(i) + " is malformed");
        }
        simplices.push_back({a, b, c});
    }

    Bundle bundle;
    bundle.vertex_count = static_cast<int>(nv);
    try {
        bundle.complex = build_complex(simplices, bundle.vertex_count);
    } catch (const MalformedSimplexError& e) {
        throw BundleParseError(std::string("invalid OFF faces: ") + e.what());
    }
    bundle.coordinates = std::move(coordinates);

    // Field table: header row of names, one comma-separated row per vertex.
    std::istringstream table(table_text);
    std::string line;
    if (!std::getline(table, line)) {
        throw BundleParseError("field table is empty");
    }
    auto split = [](const std::string& row) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream stream(row);
        while (std::getline(stream, cell, ',')) cells.push_back(cell);
        return cells;
    };
    const std::vector<std::string> names = split(line);
    if (names.empty()) throw BundleParseError("field table header has no names");

    std::vector<std::vector<double>> columns(names.size());
    std::size_t rows = 0;
    while (std::getline(table, line)) {
        if (line.empty()) continue;
        const std::vector<std::string> cells = split(line);
        if (cells.size() != names.size()) {
            throw BundleParseError("field table row " + std::to_string(rows) +
                                   " has " + std::to_string(cells.size()) +
                                   " cells, expected " + std::to_string(names.size()));
        }
        for (std::size_t c = 0; c < cells.size(); ++c) {
            double v = 0.0;
            try {
                v = std::stod(cells[c]);
            } catch (const std::exception&) {
                throw BundleParseError("field table cell is not a number: " + cells[c]);
            }
            if (!std::isfinite(v)) {
                throw NonFiniteValueError("field table value is not finite");
            }
            columns[c].push_back(v);
        }
        ++rows;
    }
    if (rows != static_cast<std::size_t>(nv)) {
        throw BundleParseError("field table has " + std::to_string(rows) +
                               " rows for " + std::to_string(nv) + " mesh vertices");
    }
    for (std::size_t c = 0; c < names.size(); ++c) {
        bundle.fields.emplace(names[c], ScalarField(std::move(columns[c])));
    }
    return bundle;
}

std::string write_off(const Bundle& bundle) {
    if (!bundle.coordinates) {
        throw BundleParseError("cannot write OFF without coordinates");
    }
    std::size_t triangle_count = 0;
    for (const Simplex& s : bundle.complex.simplices()) {
        if (s.size() == 3) ++triangle_count;
    }
    std::string out = "OFF\n";
    out += std::to_string(bundle.vertex_count) + " " + std::to_string(triangle_count) + " 0\n";
    for (const auto& p : *bundle.coordinates) {
        out += format_double(p[0]) + " " + format_double(p[1]) + " " + format_double(p[2]) + "\n";
    }
    for (const Simplex& s : bundle.complex.simplices()) {
        if (s.size() != 3) continue;
        out += "3 " + std::to_string(s[0]) + " " + std::to_string(s[1]) + " " +
               std::to_string(s[2]) + "\n";
    }
    return out;
}

std::string write_field_table(const Bundle& bundle) {
    std::string header;
    for (const auto& [name, field] : bundle.fields) {
        (void)field;
        if (!header.empty()) header += ",";
        header += name;
    }
    std::string out = header + "\n";
    for (int v = 0; v < bundle.vertex_count; ++v) {
        std::string row;
        for (const auto& [name, field] : bundle.fields) {
            (void)name;
            if (!row.empty()) row += ",";
            row += format_double(field[static_cast<std::size_t>(v)]);
        }
        out += row + "\n";
    }
    return out;
}

Bundle bundle_from_mesh(const EmbeddedMesh& mesh,
                        const std::vector<std::pair<std::string, ScalarField>>& fields) {
    Bundle bundle;
    bundle.vertex_count = mesh.complex.vertex_count();
    bundle.complex = mesh.complex;
    bundle.coordinates = mesh.coordinates;
    for (const auto& [name, field] : fields) {
        if (field.size() != static_cast<std::size_t>(bundle.vertex_count)) {
            throw DimensionMismatchError("field '" + name + "' does not match the mesh");
        }
        bundle.fields.emplace(name, field);
    }
    return bundle;
}

} // namespace topocorr
