// markovmm_main.cpp -- command line front end for the multi-map library.
//
// Every subcommand prints a JSON report on stdout and a one-line summary on
// stderr. Exit codes: 0 success, 1 domain errors, 2 usage errors.

#include "markovmm/dynamics.hpp"
#include "markovmm/errors.hpp"
#include "markovmm/geometry.hpp"
#include "markovmm/io.hpp"
#include "markovmm/multimap.hpp"
#include "markovmm/realize.hpp"
#include "markovmm/sft.hpp"
#include "markovmm/svg.hpp"
#include "markovmm/trajectory.hpp"
#include "markovmm/validate.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace markovmm;

MarkovMultiMap load_map(const std::string& path) {
    MarkovMultiMap m = multimap_from_json(load_json_file(path));
    validate_or_throw(m);
    return m;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::bad_input, "cannot write " + path);
    out << text;
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(current);
            current.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

std::vector<int> parse_word(const AdjacencyMatrix& m, const std::string& csv) {
    std::vector<int> word;
    for (const std::string& id : split_csv(csv)) {
        const int i = m.index_of(id);
        if (i < 0) throw Error(Errc::bad_input, "unknown symbol id '" + id + "'");
        word.push_back(i);
    }
    if (word.empty()) throw Error(Errc::bad_input, "empty word");
    return word;
}

// Resolves a comma-separated symbol list to the nontrivial component with
// exactly that symbol set.
std::vector<int> find_component(const AdjacencyMatrix& m, const std::string& csv) {
    std::vector<int> wanted = parse_word(m, csv);
    std::sort(wanted.begin(), wanted.end());
    for (const auto& c : nontrivial_components(m)) {
        if (c == wanted) return c;
    }
    throw Error(Errc::bad_input, "'" + csv + "' is not an irreducible component");
}

void emit(const Json& doc) { std::cout << dump_json(doc); }

std::string word_to_text(const AdjacencyMatrix& m, const std::vector<int>& word) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i > 0) out += " ";
        out += m.alphabet[word[i]];
    }
    return out;
}

// Certificate search over every nontrivial component (or one selected one).
int run_find(const std::string& map_path, const std::string& component_csv, int depth,
             bool coding) {
    const MarkovMultiMap mm = load_map(map_path);
    const AdjacencyMatrix m = build_matrix(mm);
    std::vector<std::vector<int>> targets;
    if (component_csv.empty()) {
        targets = nontrivial_components(m);
    } else {
        targets.push_back(find_component(m, component_csv));
    }

    Json rows = Json::array();
    int found = 0;
    for (const auto& c : targets) {
        Json row;
        Json ids = Json::array();
        for (int i : c) ids.push_back(m.alphabet[i]);
        row["symbols"] = ids;
        const auto cert = coding
                              ? find_coding_certificate(mm, m, c, depth, default_word_cap())
                              : find_avoiding_word(mm, m, c, depth, default_word_cap());
        if (cert) {
            row["certificate"] = certificate_to_json(m, *cert);
            ++found;
        } else {
            row["certificate"] = nullptr;
        }
        rows.push_back(row);
    }
    emit(Json{{"components", rows}});
    std::cerr << (coding ? "coding" : "avoiding") << " certificates: " << found << "/"
              << targets.size() << " components\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Markov multi-maps of the interval: exact models, the associated shift "
                 "of finite type, entropy, and entropy realization"};
    app.require_subcommand(1);

    std::string map_path, matrix_path, out_path, traj_path, word_csv, component_csv, x0_text;
    int depth = 8, coding_depth = -1, avoiding_depth = -1;
    int length = 0, size = 640, stroke = 3;
    double tol = 1e-6;
    std::uint64_t seed = 0;
    bool log2_display = false, no_grid = false, labels = false;
    bool normalize = false, verify = false;

    auto* validate_cmd = app.add_subcommand("validate", "Check a multi-map file against the model conditions");
    validate_cmd->add_option("--map", map_path, "multi-map JSON file")->required();

    auto* matrix_cmd = app.add_subcommand("matrix", "Print the associated 0/1 transition matrix");
    matrix_cmd->add_option("--map", map_path, "multi-map JSON file")->required();

    auto* components_cmd = app.add_subcommand("components", "Classify the irreducible components of the shift");
    components_cmd->add_option("--map", map_path, "multi-map JSON file")->required();

    auto* entropy_cmd = app.add_subcommand("entropy", "Topological entropy of the shift of finite type");
    auto* entropy_map = entropy_cmd->add_option("--map", map_path, "multi-map JSON file");
    auto* entropy_matrix = entropy_cmd->add_option("--matrix", matrix_path, "matrix JSON file");
    entropy_cmd->add_flag("--log2", log2_display, "also report the base-2 value");
    entropy_map->excludes(entropy_matrix);

    auto* interval_cmd = app.add_subcommand("interval", "Exact nested interval of an admissible word");
    interval_cmd->add_option("--map", map_path, "multi-map JSON file")->required();
    interval_cmd->add_option("--word", word_csv, "comma-separated symbol ids")->required();

    auto* coding_cmd = app.add_subcommand("find-coding", "Search for coding certificates per component");
    coding_cmd->add_option("--map", map_path, "multi-map JSON file")->required();
    coding_cmd->add_option("--component", component_csv, "restrict to one component (symbol ids)");
    coding_cmd->add_option("--depth", depth, "maximum word length")->capture_default_str();

    auto* avoiding_cmd = app.add_subcommand("find-avoiding", "Search for avoiding words per component");
    avoiding_cmd->add_option("--map", map_path, "multi-map JSON file")->required();
    avoiding_cmd->add_option("--component", component_csv, "restrict to one component (symbol ids)");
    avoiding_cmd->add_option("--depth", depth, "maximum word length")->capture_default_str();

    auto* certify_cmd = app.add_subcommand("certify", "Decide membership in the certified class");
    certify_cmd->add_option("--map", map_path, "multi-map JSON file")->required();
    certify_cmd->add_option("--depth", depth, "search depth for both certificate kinds")
        ->capture_default_str();
    certify_cmd->add_option("--coding-depth", coding_depth, "override the coding search depth");
    certify_cmd->add_option("--avoiding-depth", avoiding_depth, "override the avoiding search depth");

    auto* realize_cmd = app.add_subcommand("realize", "Build a multi-map realizing a matrix's entropy");
    realize_cmd->add_option("--matrix", matrix_path, "irreducible 0/1 matrix JSON file")->required();
    realize_cmd->add_option("--out", out_path, "write the constructed multi-map here");
    realize_cmd->add_flag("--normalize", normalize, "rescale the output onto [0,1]");
    realize_cmd->add_flag("--verify", verify, "re-derive and check the construction end to end");
    realize_cmd->add_option("--tol", tol, "entropy comparison tolerance for --verify")
        ->capture_default_str();

    auto* render_cmd = app.add_subcommand("render", "Draw the graph of a multi-map as SVG");
    render_cmd->add_option("--map", map_path, "multi-map JSON file")->required();
    render_cmd->add_option("--out", out_path, "write the SVG here instead of stdout");
    render_cmd->add_option("--size", size, "canvas edge in pixels")->capture_default_str();
    render_cmd->add_flag("--no-grid", no_grid, "omit the partition gridlines");
    render_cmd->add_flag("--labels", labels, "draw symbol ids");
    render_cmd->add_option("--stroke", stroke, "stroke width for graph pieces")
        ->capture_default_str();

    auto* sample_cmd = app.add_subcommand("sample", "Sample a finite trajectory of the multi-map");
    sample_cmd->add_option("--map", map_path, "multi-map JSON file")->required();
    sample_cmd->add_option("--x0", x0_text, "start point, as p/q")->required();
    sample_cmd->add_option("--len", length, "number of points to produce")->required();
    sample_cmd->add_option("--seed", seed, "random seed")->capture_default_str();
    sample_cmd->add_option("--out", out_path, "write the trajectory here instead of stdout");

    auto* label_cmd = app.add_subcommand("label", "Label a trajectory with its unique open-part word");
    label_cmd->add_option("--map", map_path, "multi-map JSON file")->required();
    label_cmd->add_option("--traj", traj_path, "trajectory JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (validate_cmd->parsed()) {
            const MarkovMultiMap m = multimap_from_json(load_json_file(map_path));
            const auto violations = check_multimap(m);
            emit(violations_to_json(violations));
            if (violations.empty()) {
                std::cerr << "valid: " << m.symbols.size() << " symbols, "
                          << m.cells().size() << " cells\n";
                return 0;
            }
            std::cerr << violations.size() << " violation(s)\n";
            return 1;
        }

        if (matrix_cmd->parsed()) {
            const MarkovMultiMap mm = load_map(map_path);
            const AdjacencyMatrix m = build_matrix(mm);
            emit(matrix_to_json(m));
            std::cerr << "matrix: " << m.size() << " symbols\n";
            return 0;
        }

        if (components_cmd->parsed()) {
            const MarkovMultiMap mm = load_map(map_path);
            const AdjacencyMatrix m = build_matrix(mm);
            const Decomposition d = decompose(mm, m);
            emit(decomposition_to_json(m, d));
            std::cerr << d.components.size() << " component(s), " << d.wandering.size()
                      << " wandering symbol(s)\n";
            return 0;
        }

        if (entropy_cmd->parsed()) {
            if (map_path.empty() == matrix_path.empty()) {
                std::cerr << "entropy: pass exactly one of --map or --matrix\n";
                return 2;
            }
            AdjacencyMatrix m;
            if (!map_path.empty()) {
                m = build_matrix(load_map(map_path));
            } else {
                m = matrix_from_json(load_json_file(matrix_path));
            }
            const EntropyResult r = entropy(m);
            Json doc = entropy_to_json(r, log2_display);
            Json rows = Json::array();
            for (const auto& c : nontrivial_components(m)) {
                const EntropyResult cr = entropy_of_component(m, c);
                Json ids = Json::array();
                for (int i : c) ids.push_back(m.alphabet[i]);
                rows.push_back(Json{{"symbols", ids}, {"entropy", format_double(cr.value)}});
            }
            doc["components"] = rows;
            emit(doc);
            std::cerr << "entropy: " << format_double(r.value) << "\n";
            return 0;
        }

        if (interval_cmd->parsed()) {
            const MarkovMultiMap mm = load_map(map_path);
            const AdjacencyMatrix m = build_matrix(mm);
            const IntervalQ iv = interval_of_word(mm, m, parse_word(m, word_csv));
            emit(interval_to_json(iv));
            std::cerr << "I = [" << format_rat(iv.lo) << ", " << format_rat(iv.hi) << "]"
                      << (iv.exact ? "" : " (outward bound)") << "\n";
            return 0;
        }

        if (coding_cmd->parsed()) return run_find(map_path, component_csv, depth, true);
        if (avoiding_cmd->parsed()) return run_find(map_path, component_csv, depth, false);

        if (certify_cmd->parsed()) {
            const MarkovMultiMap mm = load_map(map_path);
            const AdjacencyMatrix m = build_matrix(mm);
            const ClassFVerdict v = certify_class_f(mm, coding_depth > 0 ? coding_depth : depth,
                                                    avoiding_depth > 0 ? avoiding_depth : depth);
            emit(class_f_verdict_to_json(m, v));
            std::cerr << "status: " << class_f_status_name(v.status) << "\n";
            return 0;
        }

        if (realize_cmd->parsed()) {
            const AdjacencyMatrix input = matrix_from_json(load_json_file(matrix_path));
            RealizationOutput out = realize(input);
            if (normalize) out.multimap = normalize_to_unit(out.multimap);
            Json doc = realization_to_json(out);
            if (verify) {
                const RealizationReport report = verify_realization(input, out, tol);
                doc["report"] = realization_report_to_json(build_matrix(out.multimap), report);
            }
            if (!out_path.empty()) write_text_file(out_path, dump_json(multimap_to_json(out.multimap)));
            emit(doc);
            std::cerr << "realized: " << out.multimap.symbols.size() << " symbols, k="
                      << out.k << (verify ? ", verified" : "") << "\n";
            return 0;
        }

        if (render_cmd->parsed()) {
            const MarkovMultiMap mm = load_map(map_path);
            RenderOptions options;
            options.size = size;
            options.grid = !no_grid;
            options.labels = labels;
            options.stroke = stroke;
            const std::string svg = render_svg(mm, options);
            if (!out_path.empty()) {
                write_text_file(out_path, svg);
            } else {
                std::cout << svg;
            }
            std::cerr << "rendered " << graph_primitives(mm).size() << " graph pieces\n";
            return 0;
        }

        if (sample_cmd->parsed()) {
            const MarkovMultiMap mm = load_map(map_path);
            const auto points = sample_trajectory(mm, parse_rat(x0_text), length, seed);
            const Json doc = trajectory_to_json(points);
            if (!out_path.empty()) {
                write_text_file(out_path, dump_json(doc));
            } else {
                emit(doc);
            }
            std::cerr << "sampled " << points.size() << " points\n";
            return 0;
        }

        if (label_cmd->parsed()) {
            const MarkovMultiMap mm = load_map(map_path);
            const AdjacencyMatrix m = build_matrix(mm);
            const auto points = trajectory_from_json(load_json_file(traj_path));
            const auto word = label_special(mm, points);
            const LabelCheck check = check_labeled(mm, m, points, word);
            Json doc;
            Json ids = Json::array();
            for (int i : word) ids.push_back(m.alphabet[i]);
            doc["word"] = ids;
            doc["check"] = label_check_to_json(check);
            emit(doc);
            std::cerr << "word: " << word_to_text(m, word) << "\n";
            return 0;
        }
    } catch (const ValidationError& e) {
        emit(violations_to_json(e.violations()));
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        emit(Json{{"error", errc_name(e.code())}, {"message", e.what()}});
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
