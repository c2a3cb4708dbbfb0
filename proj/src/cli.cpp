#include "topocorr/cli.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "topocorr/betti.hpp"
#include "topocorr/bundle.hpp"
#include "topocorr/correlation.hpp"
#include "topocorr/errors.hpp"
#include "topocorr/matching.hpp"
#include "topocorr/persistence.hpp"
#include "topocorr/shapes.hpp"

namespace topocorr {

namespace {

using json = nlohmann::ordered_json;

constexpr double kDefaultTorusMajor = 2.0;
constexpr double kDefaultTorusMinor = 1.0;

struct Space {
    SimplicialComplex complex;
    std::map<std::string, ScalarField> fields;
    std::optional<std::vector<std::array<double, 3>>> coordinates;
    std::string label;
};

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::string item;
    std::istringstream stream(text);
    while (std::getline(stream, item, ',')) {
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

EmbeddedMesh make_shape(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string param = colon == std::string::npos ? "" : spec.substr(colon + 1);
    try {
        if (kind == "circle") {
            return circle_mesh(std::stoi(param));
        }
        if (kind == "sphere") {
            return sphere_mesh(std::stoi(param));
        }
        if (kind == "torus") {
            const auto x = param.find('x');
            if (x == std::string::npos) {
                throw std::invalid_argument("torus spec needs the form torus:MxN");
            }
            return torus_mesh(std::stoi(param.substr(0, x)), std::stoi(param.substr(x + 1)),
                              kDefaultTorusMajor, kDefaultTorusMinor);
        }
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("unusable shape spec '" + spec +
                                    "'; expected circle:N, sphere:K or torus:MxN");
    }
    throw std::invalid_argument("unknown shape '" + kind +
                                "'; expected circle, sphere or torus");
}

Space space_from_mesh(const EmbeddedMesh& mesh, const std::string& label) {
    Space space;
    space.complex = mesh.complex;
    space.coordinates = mesh.coordinates;
    space.fields.emplace("x", projection_field(mesh, Axis::X));
    space.fields.emplace("y", projection_field(mesh, Axis::Y));
    space.fields.emplace("z", projection_field(mesh, Axis::Z));
    space.label = label;
    return space;
}

Space space_from_bundle_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read bundle file: " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    const Bundle bundle = parse_bundle(buffer.str());
    Space space;
    space.complex = bundle.complex;
    space.fields = bundle.fields;
    space.coordinates = bundle.coordinates;
    space.label = path;
    return space;
}

const ScalarField& field_of(const Space& space, const std::string& name) {
    auto it = space.fields.find(name);
    if (it == space.fields.end()) {
        throw std::invalid_argument("space '" + space.label + "' has no field '" + name + "'");
    }
    return it->second;
}

Bifunction bifunction_of(const Space& space, const std::vector<std::string>& names) {
    if (names.size() != 2) {
        throw std::invalid_argument("expected exactly two field names, got " +
                                    std::to_string(names.size()));
    }
    return Bifunction(field_of(space, names[0]), field_of(space, names[1]));
}

json diagram_to_json(const PersistenceDiagram& diagram) {
    json pairs = json::array();
    for (const auto& [birth, death] : diagram.finite_pairs()) {
        pairs.push_back(json::array({birth, death}));
    }
    return json{{"finite_pairs", std::move(pairs)},
                {"essential_births", diagram.essential_births()}};
}

json grid_to_json(const GridSpec& grid) {
    return json{{"n_theta", grid.n_theta},
                {"n_beta", grid.n_beta},
                {"beta_bound", grid.beta_bound},
                {"refine_rounds", grid.refine_rounds},
                {"refine_shrink", grid.refine_shrink}};
}

// Flags shared by the computation subcommands.
struct Options {
    std::string input;
    std::string shape;
    std::string shapes;  // comma list (corr)
    std::string inputs;  // comma list (corr)
    std::vector<std::string> fields;
    std::vector<std::string> fields_a;
    std::vector<std::string> fields_b;
    std::string field;
    std::string field_a;
    std::string field_b;
    std::string at;
    int degree = 0;
    GridSpec grid;
    double tol = kDefaultDegeneracyTol;
    int threads = 0; // 0 = all hardware threads
    std::string output = "-";
    bool timings = false;
};

void add_space_flags(CLI::App* cmd, Options& opt) {
    auto* input = cmd->add_option("--input", opt.input, "bundle file to read");
    auto* shape = cmd->add_option(
        "--shape", opt.shape, "generated space (circle:N, sphere:K or torus:MxN)");
    input->excludes(shape);
}

void add_grid_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--grid-theta", opt.grid.n_theta, "angle samples (default 32)");
    cmd->add_option("--grid-beta", opt.grid.n_beta, "offset samples (default 32)");
    cmd->add_option("--beta-bound", opt.grid.beta_bound,
                    "offset range as a multiple of the field range (default 1.0)");
    cmd->add_option("--refine", opt.grid.refine_rounds, "refinement rounds (default 3)");
    cmd->add_option("--refine-shrink", opt.grid.refine_shrink,
                    "window shrink per round (default 0.5)");
    cmd->add_option("--threads", opt.threads, "worker threads, 0 = all cores");
}

void add_output_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--output", opt.output, "output path, '-' for stdout");
    cmd->add_flag("--timings", opt.timings, "include wall-clock timings in the document");
}

Space load_space(const Options& opt) {
    if (!opt.input.empty()) return space_from_bundle_file(opt.input);
    if (!opt.shape.empty()) return space_from_mesh(make_shape(opt.shape), opt.shape);
    throw std::invalid_argument("either --input or --shape is required");
}

json input_echo(const Options& opt) {
    json inputs = json::object();
    if (!opt.input.empty()) inputs["input"] = opt.input;
    if (!opt.shape.empty()) inputs["shape"] = opt.shape;
    if (!opt.shapes.empty()) inputs["shapes"] = split_list(opt.shapes);
    if (!opt.inputs.empty()) inputs["inputs"] = split_list(opt.inputs);
    return inputs;
}

void write_document(const Options& opt, const json& doc, std::ostream& out) {
    const std::string text = doc.dump(2) + "\n";
    if (opt.output == "-" || opt.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(opt.output, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot write output file: " + opt.output);
    }
    file << text;
}

using Clock = std::chrono::steady_clock;

void finish_document(const Options& opt, json& doc, Clock::time_point started,
                     std::ostream& out) {
    if (opt.timings) {
        const double seconds =
            std::chrono::duration<double>(Clock::now() - started).count();
        doc["timings"] = json{{"total_seconds", seconds}};
    }
    write_document(opt, doc, out);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"persistent-homology distances and topological correlation of scalar fields",
                 "topocorr"};
    app.require_subcommand(1);

    auto opt = std::make_shared<Options>();

    auto* persist = app.add_subcommand("persist", "persistence diagram of one field");
    add_space_flags(persist, *opt);
    persist->add_option("--field", opt->field, "field name")->required();
    persist->add_option("--degree", opt->degree, "homology degree (default 0)");
    add_output_flags(persist, *opt);
    persist->callback([opt, &out]() {
        const auto started = Clock::now();
        const Space space = load_space(*opt);
        const PersistenceDiagram diagram = compute_persistence(
            lower_star_filtration(space.complex, field_of(space, opt->field)), opt->degree);
        json doc;
        doc["inputs"] = input_echo(*opt);
        doc["parameters"] = json{{"field", opt->field}, {"degree", opt->degree}};
        doc["results"] = diagram_to_json(diagram);
        finish_document(*opt, doc, started, out);
    });

    auto* bottleneck = app.add_subcommand(
        "bottleneck", "bottleneck distance between the diagrams of two fields");
    add_space_flags(bottleneck, *opt);
    bottleneck->add_option("--field-a", opt->field_a, "first field")->required();
    bottleneck->add_option("--field-b", opt->field_b, "second field")->required();
    bottleneck->add_option("--degree", opt->degree, "homology degree (default 0)");
    add_output_flags(bottleneck, *opt);
    bottleneck->callback([opt, &out]() {
        const auto started = Clock::now();
        const Space space = load_space(*opt);
        const auto diagram = [&](const std::string& name) {
            return compute_persistence(
                lower_star_filtration(space.complex, field_of(space, name)), opt->degree);
        };
        const ExtendedDistance d = bottleneck_distance(diagram(opt->field_a),
                                                       diagram(opt->field_b));
        json doc;
        doc["inputs"] = input_echo(*opt);
        doc["parameters"] = json{{"field_a", opt->field_a},
                                 {"field_b", opt->field_b},
                                 {"degree", opt->degree}};
        doc["results"] = d.is_infinite() ? json{{"infinite", true}}
                                         : json{{"distance", d.value()}, {"infinite", false}};
        finish_document(*opt, doc, started, out);
    });

    auto* match = app.add_subcommand(
        "match", "sampled matching distance between two bifunctions");
    add_space_flags(match, *opt);
    match->add_option("--fields-a", opt->field_a, "first bifunction, e.g. f,g")->required();
    match->add_option("--fields-b", opt->field_b, "second bifunction, e.g. p,q")->required();
    match->add_option("--degree", opt->degree, "homology degree (default 0)");
    add_grid_flags(match, *opt);
    add_output_flags(match, *opt);
    match->callback([opt, &out]() {
        const auto started = Clock::now();
        const Space space = load_space(*opt);
        const MatchingReport report = matching_distance_report(
            bifunction_of(space, split_list(opt->field_a)),
            bifunction_of(space, split_list(opt->field_b)), space.complex, opt->grid,
            opt->degree, opt->threads);
        json doc;
        doc["inputs"] = input_echo(*opt);
        doc["parameters"] = json{{"fields_a", split_list(opt->field_a)},
                                 {"fields_b", split_list(opt->field_b)},
                                 {"degree", opt->degree},
                                 {"grid", grid_to_json(opt->grid)},
                                 {"threads", opt->threads}};
        doc["results"] = json{{"distance", report.distance},
                              {"component_distance", report.component_distance},
                              {"best_line", json{{"theta", report.best_theta},
                                                 {"beta", report.best_beta}}},
                              {"lines_evaluated", report.lines_evaluated}};
        finish_document(*opt, doc, started, out);
    });

    auto* topodiff = app.add_subcommand(
        "topodiff", "topological difference between two bifunctions");
    add_space_flags(topodiff, *opt);
    topodiff->add_option("--fields-a", opt->field_a, "first bifunction")->required();
    topodiff->add_option("--fields-b", opt->field_b, "second bifunction")->required();
    topodiff->add_option("--degree", opt->degree, "homology degree (default 0)");
    add_grid_flags(topodiff, *opt);
    add_output_flags(topodiff, *opt);
    topodiff->callback([opt, &out]() {
        const auto started = Clock::now();
        const Space space = load_space(*opt);
        const MatchingReport report = matching_distance_report(
            bifunction_of(space, split_list(opt->field_a)),
            bifunction_of(space, split_list(opt->field_b)), space.complex, opt->grid,
            opt->degree, opt->threads);
        json doc;
        doc["inputs"] = input_echo(*opt);
        doc["parameters"] = json{{"fields_a", split_list(opt->field_a)},
                                 {"fields_b", split_list(opt->field_b)},
                                 {"degree", opt->degree},
                                 {"grid", grid_to_json(opt->grid)},
                                 {"threads", opt->threads}};
        doc["results"] = json{{"difference", report.distance - report.component_distance},
                              {"matching_distance", report.distance},
                              {"component_distance", report.component_distance}};
        finish_document(*opt, doc, started, out);
    });

    auto* topocorrelation = app.add_subcommand(
        "topocorr", "topological correlation of one bifunction's components");
    add_space_flags(topocorrelation, *opt);
    topocorrelation->add_option("--fields", opt->field, "bifunction, e.g. f,g")->required();
    topocorrelation->add_option("--degree", opt->degree, "homology degree (default 0)");
    topocorrelation->add_option("--tol", opt->tol, "degeneracy tolerance (default 1e-9)");
    add_grid_flags(topocorrelation, *opt);
    add_output_flags(topocorrelation, *opt);
    topocorrelation->callback([opt, &out]() {
        const auto started = Clock::now();
        const Space space = load_space(*opt);
        const CorrelationReport report = topological_correlation(
            bifunction_of(space, split_list(opt->field)), space.complex, opt->grid,
            opt->degree, opt->tol, opt->threads);
        json doc;
        doc["inputs"] = input_echo(*opt);
        doc["parameters"] = json{{"fields", split_list(opt->field)},
                                 {"degree", opt->degree},
                                 {"grid", grid_to_json(opt->grid)},
                                 {"degeneracy_tol", opt->tol},
                                 {"threads", opt->threads}};
        doc["results"] =
            json{{"correlation", report.correlation},
                 {"delta_phi_f", report.delta_phi_f},
                 {"delta_phi_g", report.delta_phi_g},
                 {"branch", report.branch == CorrelationBranch::Formula ? "FORMULA"
                                                                        : "DEGENERATE"}};
        finish_document(*opt, doc, started, out);
    });

    auto* corr = app.add_subcommand(
        "corr", "collection correlation across several spaces");
    corr->add_option("--shapes", opt->shapes,
                     "comma list of generated spaces, e.g. circle:64,sphere:3,torus:32x32");
    corr->add_option("--inputs", opt->inputs, "comma list of bundle files");
    corr->add_option("--fields", opt->field, "field pair used on every space")->required();
    corr->add_option("--degree", opt->degree, "homology degree (default 0)");
    corr->add_option("--tol", opt->tol, "degeneracy tolerance (default 1e-9)");
    add_grid_flags(corr, *opt);
    add_output_flags(corr, *opt);
    corr->callback([opt, &out]() {
        const auto started = Clock::now();
        std::vector<Space> loaded;
        for (const std::string& spec : split_list(opt->shapes)) {
            loaded.push_back(space_from_mesh(make_shape(spec), spec));
        }
        for (const std::string& path : split_list(opt->inputs)) {
            loaded.push_back(space_from_bundle_file(path));
        }
        if (loaded.empty()) {
            throw EmptyCollectionError("corr needs --shapes and/or --inputs");
        }
        const std::vector<std::string> names = split_list(opt->field);
        json per_space = json::array();
        double sum = 0.0;
        for (const Space& space : loaded) {
            const CorrelationReport report = topological_correlation(
                bifunction_of(space, names), space.complex, opt->grid, opt->degree,
                opt->tol, opt->threads);
            sum += report.correlation;
            per_space.push_back(
                json{{"space", space.label},
                     {"correlation", report.correlation},
                     {"delta_phi_f", report.delta_phi_f},
                     {"delta_phi_g", report.delta_phi_g},
                     {"branch", report.branch == CorrelationBranch::Formula
                                    ? "FORMULA"
                                    : "DEGENERATE"}});
        }
        json doc;
        doc["inputs"] = input_echo(*opt);
        doc["parameters"] = json{{"fields", names},
                                 {"degree", opt->degree},
                                 {"grid", grid_to_json(opt->grid)},
                                 {"degeneracy_tol", opt->tol},
                                 {"threads", opt->threads}};
        doc["results"] = json{{"correlation", sum / static_cast<double>(loaded.size())},
                              {"per_space", std::move(per_space)}};
        finish_document(*opt, doc, started, out);
    });

    auto* betti = app.add_subcommand(
        "betti", "sublevel Betti number of a bifunction at a point");
    add_space_flags(betti, *opt);
    betti->add_option("--fields", opt->field, "bifunction, e.g. x,y")->required();
    betti->add_option("--at", opt->at, "threshold point, e.g. --at=-1,-1")->required();
    betti->add_option("--degree", opt->degree, "homology degree (default 0)");
    add_output_flags(betti, *opt);
    betti->callback([opt, &out]() {
        const auto started = Clock::now();
        const Space space = load_space(*opt);
        const std::vector<std::string> at = split_list(opt->at);
        if (at.size() != 2) {
            throw std::invalid_argument("--at needs two comma-separated numbers");
        }
        const double u = std::stod(at[0]);
        const double v = std::stod(at[1]);
        const int rank = betti_at(space.complex, bifunction_of(space, split_list(opt->field)),
                                  u, v, opt->degree);
        json doc;
        doc["inputs"] = input_echo(*opt);
        doc["parameters"] = json{{"fields", split_list(opt->field)},
                                 {"at", json::array({u, v})},
                                 {"degree", opt->degree}};
        doc["results"] = json{{"betti", rank}};
        finish_document(*opt, doc, started, out);
    });

    auto* shapes = app.add_subcommand(
        "shapes", "generate a built-in space and emit it as a bundle");
    shapes->add_option("--shape", opt->shape, "circle:N, sphere:K or torus:MxN")->required();
    shapes->add_option("--fields", opt->field, "projection fields to attach (default x,y)");
    add_output_flags(shapes, *opt);
    shapes->callback([opt, &out]() {
        const EmbeddedMesh mesh = make_shape(opt->shape);
        std::vector<std::string> names =
            opt->field.empty() ? std::vector<std::string>{"x", "y"} : split_list(opt->field);
        std::vector<std::pair<std::string, ScalarField>> fields;
        for (const std::string& name : names) {
            Axis axis;
            if (name == "x") axis = Axis::X;
            else if (name == "y") axis = Axis::Y;
            else if (name == "z") axis = Axis::Z;
            else throw std::invalid_argument("shape fields must be among x, y, z");
            fields.emplace_back(name, projection_field(mesh, axis));
        }
        const std::string text = emit_bundle(bundle_from_mesh(mesh, fields));
        if (opt->output == "-" || opt->output.empty()) {
            out << text;
        } else {
            std::ofstream file(opt->output, std::ios::binary);
            if (!file) {
                throw std::runtime_error("cannot write output file: " + opt->output);
            }
            file << text;
        }
    });

    std::vector<std::string> argv_storage = args;
    std::vector<char*> argv;
    argv.push_back(const_cast<char*>("topocorr"));
    for (std::string& a : argv_storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace topocorr
