// taxograph: command-line front end for the cluster-graph taxonomy library.
//
// Exit codes: 0 success, 1 validation or graph errors, 2 parse/file errors,
// 3 golden or diff mismatch, 64 usage errors.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "taxograph/cuts.hpp"
#include "taxograph/dcase.hpp"
#include "taxograph/errors.hpp"
#include "taxograph/framework.hpp"
#include "taxograph/graph.hpp"
#include "taxograph/io.hpp"

namespace {

using namespace taxograph;

struct data_options {
    std::string thesaurus_path;
    std::string records_path;

    thesaurus load_thesaurus() const {
        if (thesaurus_path.empty()) {
            return embedded_thesaurus();
        }
        return parse_thesaurus(read_file(thesaurus_path));
    }

    decomposition_rules load_rules() const {
        if (records_path.empty()) {
            return embedded_rules();
        }
        return parse_rules(read_file(records_path));
    }

    // The working graph: an explicit document, or the bundled taxonomy.
    taxonomy_graph load_graph(const std::string& path) const {
        if (path.empty()) {
            return init_dcase(load_thesaurus(), load_rules()).graph;
        }
        return import_taxonomy_document(read_file(path));
    }
};

// Writes the document to `out_path` (stdout when empty) and returns the
// stream that secondary output (reports, issues) should go to, so machine
// consumers reading the document from stdout never see it interleaved.
std::ostream& emit_document(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return std::cerr;
    }
    write_file(out_path, text);
    return std::cout;
}

std::set<subset_kind> kinds_from(const std::vector<std::string>& names) {
    std::set<subset_kind> kinds;
    for (const std::string& name : names) {
        auto kind = subset_kind_from(name);
        if (!kind.has_value()) {
            throw error(errc::bad_argument,
                        "unknown subset kind \"" + name +
                            "\" (expected context, environment or event)");
        }
        kinds.insert(*kind);
    }
    return kinds;
}

std::string weight_text(const std::optional<double>& weight) {
    if (!weight.has_value()) {
        return "unset";
    }
    std::ostringstream out;
    out << *weight;
    return out.str();
}

std::string join_kinds(const std::set<subset_kind>& kinds) {
    std::string out;
    for (subset_kind kind : kinds) {
        out += (out.empty() ? "" : ",");
        out += to_string(kind);
    }
    return out.empty() ? "none" : out;
}

// Human-readable structural differences between two graphs; empty when they
// are equal (provenance aside).
std::vector<std::string> graph_diff_lines(const taxonomy_graph& a, const taxonomy_graph& b) {
    std::vector<std::string> lines;
    for (const auto& [text, entry] : a.labels()) {
        auto other = b.labels().find(text);
        if (other == b.labels().end()) {
            lines.push_back("label \"" + text + "\" only in A");
            continue;
        }
        if (entry.kind != other->second.kind) {
            auto name = [](label_kind kind) {
                return kind == label_kind::object   ? "object"
                       : kind == label_kind::action ? "action"
                                                    : "untagged";
            };
            lines.push_back("label \"" + text + "\": tag " + name(entry.kind) + " in A, " +
                            name(other->second.kind) + " in B");
        }
        const auto& kinds_a = a.memberships().at(text);
        const auto& kinds_b = b.memberships().at(text);
        if (kinds_a != kinds_b) {
            lines.push_back("label \"" + text + "\": kinds " + join_kinds(kinds_a) +
                            " in A, " + join_kinds(kinds_b) + " in B");
        }
    }
    for (const auto& [text, entry] : b.labels()) {
        if (!a.labels().contains(text)) {
            lines.push_back("label \"" + text + "\" only in B");
        }
    }
    for (const auto& [name, members] : a.clusters()) {
        auto other = b.clusters().find(name);
        if (other == b.clusters().end()) {
            lines.push_back("cluster \"" + name + "\" only in A");
            continue;
        }
        for (const std::string& member : members) {
            if (!other->second.contains(member)) {
                lines.push_back("cluster \"" + name + "\": member \"" + member +
                                "\" only in A");
            }
        }
        for (const std::string& member : other->second) {
            if (!members.contains(member)) {
                lines.push_back("cluster \"" + name + "\": member \"" + member +
                                "\" only in B");
            }
        }
    }
    for (const auto& [name, members] : b.clusters()) {
        if (!a.clusters().contains(name)) {
            lines.push_back("cluster \"" + name + "\" only in B");
        }
    }
    auto edge_of = [](const std::vector<cross_edge>& edges, const cross_edge& probe) {
        return std::find_if(edges.begin(), edges.end(), [&probe](const cross_edge& edge) {
            return edge.a == probe.a && edge.b == probe.b;
        });
    };
    for (const cross_edge& edge : a.cross_edges()) {
        auto other = edge_of(b.cross_edges(), edge);
        if (other == b.cross_edges().end()) {
            lines.push_back("edge " + edge.a + " -- " + edge.b + " only in A");
        } else if (edge.weight != other->weight) {
            lines.push_back("edge " + edge.a + " -- " + edge.b + ": weight " +
                            weight_text(edge.weight) + " in A, " +
                            weight_text(other->weight) + " in B");
        }
    }
    for (const cross_edge& edge : b.cross_edges()) {
        if (edge_of(a.cross_edges(), edge) == a.cross_edges().end()) {
            lines.push_back("edge " + edge.a + " -- " + edge.b + " only in B");
        }
    }
    return lines;
}

int exit_code_for(const error& failure) {
    switch (failure.code()) {
        case errc::parse_error:
        case errc::unknown_format_version:
            return 2;
        case errc::golden_mismatch:
            return 3;
        default:
            return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cluster-graph taxonomy of sound scene and event labels"};
    app.require_subcommand(1);

    data_options data;
    app.add_option("--thesaurus", data.thesaurus_path,
                   "thesaurus JSON (default: bundled)")
        ->envname("TAXOGRAPH_THESAURUS");
    app.add_option("--records", data.records_path, "curation records JSON (default: bundled)");

    std::function<int()> action;

    // --- init ---
    auto* init_cmd = app.add_subcommand("init", "emit an empty or fully initialized taxonomy");
    struct init_options {
        bool dcase = false;
        bool report_json = false;
        std::string out;
    };
    auto init_opts = std::make_shared<init_options>();
    init_cmd->add_flag("--dcase", init_opts->dcase,
                       "build the bundled challenge taxonomy and check it against the "
                       "canonical label sets");
    init_cmd->add_flag("--report-json", init_opts->report_json, "emit the report as JSON");
    init_cmd->add_option("-o,--out", init_opts->out, "write the document here instead of stdout");
    init_cmd->callback([&action, init_opts, &data] {
        action = [init_opts, &data]() -> int {
            if (!init_opts->dcase) {
                emit_document(export_taxonomy_document(taxonomy_graph{}), init_opts->out);
                return 0;
            }
            dcase_init_result result = init_dcase(data.load_thesaurus(), data.load_rules());
            golden_diff_result diff = golden_diff(result.produced, embedded_golden_sets());
            std::ostream& side =
                emit_document(export_taxonomy_document(result.graph), init_opts->out);
            side << (init_opts->report_json ? report_to_json(result.report)
                                            : render_report(result.report));
            if (!diff.empty()) {
                side << render_golden_diff(diff);
                return 3;
            }
            side << "golden check: ok\n";
            return 0;
        };
    });

    // --- add ---
    auto* add_cmd = app.add_subcommand("add", "run one raw label through the curation pipeline");
    struct add_options {
        std::string text;
        std::string cluster;
        std::vector<std::string> kinds;
        std::string graph;
        std::string out;
    };
    auto add_opts = std::make_shared<add_options>();
    add_cmd->add_option("label", add_opts->text, "raw label text")->required();
    add_cmd->add_option("-c,--cluster", add_opts->cluster, "target cluster")->required();
    add_cmd->add_option("-k,--kind", add_opts->kinds, "subset kind(s) for the label")
        ->delimiter(',');
    add_cmd->add_option("-g,--graph", add_opts->graph,
                        "taxonomy document to extend (default: bundled taxonomy)");
    add_cmd->add_option("-o,--out", add_opts->out, "write the document here instead of stdout");
    add_cmd->callback([&action, add_opts, &data] {
        action = [add_opts, &data]() -> int {
            thesaurus thes = data.load_thesaurus();
            decomposition_rules rules = data.load_rules();
            taxonomy_graph graph = data.load_graph(add_opts->graph);
            auto [next, entry] =
                process_label(graph, raw_label{add_opts->text}, add_opts->cluster,
                              kinds_from(add_opts->kinds), thes, rules);
            curation_report report;
            report.entries.push_back(entry);
            if (entry.error.has_value()) {
                std::cerr << render_report(report);
                return 1;
            }
            std::ostream& side =
                emit_document(export_taxonomy_document(next), add_opts->out);
            side << render_report(report);
            return 0;
        };
    });

    // --- merge ---
    auto* merge_cmd =
        app.add_subcommand("merge", "merge a label-set file through the curation pipeline");
    struct merge_options {
        std::string file;
        std::string cluster;
        std::vector<std::string> kinds;
        std::string graph;
        std::string out;
        bool report_json = false;
    };
    auto merge_opts = std::make_shared<merge_options>();
    merge_cmd->add_option("file", merge_opts->file, "label-set file (plain lines or JSON)")
        ->required();
    merge_cmd->add_option("-c,--cluster", merge_opts->cluster,
                          "cluster for entries that name none themselves");
    merge_cmd->add_option("-k,--kind", merge_opts->kinds,
                          "subset kind(s) for entries that name none themselves")
        ->delimiter(',');
    merge_cmd->add_option("-g,--graph", merge_opts->graph,
                          "taxonomy document to extend (default: bundled taxonomy)");
    merge_cmd->add_flag("--report-json", merge_opts->report_json, "emit the report as JSON");
    merge_cmd->add_option("-o,--out", merge_opts->out,
                          "write the document here instead of stdout");
    merge_cmd->callback([&action, merge_opts, &data] {
        action = [merge_opts, &data]() -> int {
            thesaurus thes = data.load_thesaurus();
            decomposition_rules rules = data.load_rules();
            taxonomy_graph graph = data.load_graph(merge_opts->graph);
            std::set<subset_kind> default_kinds = kinds_from(merge_opts->kinds);
            curation_report report;
            for (const label_set_entry& item : parse_label_set(read_file(merge_opts->file))) {
                std::string cluster = item.cluster.value_or(merge_opts->cluster);
                if (cluster.empty()) {
                    throw error(errc::bad_argument,
                                "no cluster for \"" + item.raw.text +
                                    "\": pass --cluster or use the JSON label-set format");
                }
                auto [next, entry] =
                    process_label(graph, item.raw, cluster,
                                  item.kinds.value_or(default_kinds), thes, rules);
                graph = std::move(next);
                report.entries.push_back(std::move(entry));
            }
            std::ostream& side =
                emit_document(export_taxonomy_document(graph), merge_opts->out);
            side << (merge_opts->report_json ? report_to_json(report)
                                             : render_report(report));
            return 0;
        };
    });

    // --- cut ---
    auto* cut_cmd = app.add_subcommand("cut", "extract a subgraph by kind, cluster or label");
    struct cut_options {
        std::vector<std::string> kinds;
        std::vector<std::string> clusters;
        std::vector<std::string> labels;
        bool any = false;
        bool labels_only = false;
        std::string graph;
        std::string out;
    };
    auto cut_opts = std::make_shared<cut_options>();
    cut_cmd->add_option("-k,--kind", cut_opts->kinds, "keep labels with any of these kinds")
        ->delimiter(',');
    cut_cmd->add_option("-c,--cluster", cut_opts->clusters,
                        "keep labels in any of these clusters");
    cut_cmd->add_option("-l,--label", cut_opts->labels, "keep these labels");
    cut_cmd->add_flag("--any", cut_opts->any,
                      "combine the criteria with union instead of intersection");
    cut_cmd->add_flag("--labels-only", cut_opts->labels_only,
                      "print the sorted label vector instead of a document");
    cut_cmd->add_option("-g,--graph", cut_opts->graph,
                        "taxonomy document to cut (default: bundled taxonomy)");
    cut_cmd->add_option("-o,--out", cut_opts->out, "write the result here instead of stdout");
    cut_cmd->callback([&action, cut_opts, &data] {
        action = [cut_opts, &data]() -> int {
            taxonomy_graph graph = data.load_graph(cut_opts->graph);
            cut_selector selector;
            selector.kinds = kinds_from(cut_opts->kinds);
            selector.clusters.insert(cut_opts->clusters.begin(), cut_opts->clusters.end());
            selector.labels.insert(cut_opts->labels.begin(), cut_opts->labels.end());
            selector.compose = cut_opts->any ? cut_selector::composition::union_of
                                             : cut_selector::composition::intersection;
            taxonomy_graph sub = cut(graph, selector);
            if (cut_opts->labels_only) {
                std::string lines;
                for (const std::string& text : export_label_vector(sub)) {
                    lines += text;
                    lines += "\n";
                }
                emit_document(lines, cut_opts->out);
                return 0;
            }
            emit_document(export_taxonomy_document(sub), cut_opts->out);
            return 0;
        };
    });

    // --- union ---
    auto* union_cmd = app.add_subcommand("union", "synonym-aware union of two documents");
    struct union_options {
        std::string a;
        std::string b;
        std::string out;
    };
    auto union_opts = std::make_shared<union_options>();
    union_cmd->add_option("a", union_opts->a, "first taxonomy document")->required();
    union_cmd->add_option("b", union_opts->b, "second taxonomy document")->required();
    union_cmd->add_option("-o,--out", union_opts->out,
                          "write the document here instead of stdout");
    union_cmd->callback([&action, union_opts, &data] {
        action = [union_opts, &data]() -> int {
            taxonomy_graph merged =
                graph_union(import_taxonomy_document(read_file(union_opts->a)),
                            import_taxonomy_document(read_file(union_opts->b)),
                            data.load_thesaurus());
            emit_document(export_taxonomy_document(merged), union_opts->out);
            return 0;
        };
    });

    // --- validate ---
    auto* validate_cmd = app.add_subcommand("validate", "check a document against the invariants");
    struct validate_options {
        std::string file;
    };
    auto validate_opts = std::make_shared<validate_options>();
    validate_cmd->add_option("file", validate_opts->file, "taxonomy document")->required();
    validate_cmd->callback([&action, validate_opts, &data] {
        action = [validate_opts, &data]() -> int {
            taxonomy_graph graph =
                import_taxonomy_document(read_file(validate_opts->file));
            std::vector<validation_issue> issues = validate(graph, data.load_thesaurus());
            if (issues.empty()) {
                std::cout << "ok\n";
                return 0;
            }
            std::cout << render_issues(issues);
            return 1;
        };
    });

    // --- export-edges ---
    auto* export_cmd = app.add_subcommand("export-edges", "emit a document as an edge list");
    struct export_options {
        std::string file;
        std::string out;
    };
    auto export_opts = std::make_shared<export_options>();
    export_cmd->add_option("file", export_opts->file,
                           "taxonomy document (default: bundled taxonomy)");
    export_cmd->add_option("-o,--out", export_opts->out,
                           "write the edge list here instead of stdout");
    export_cmd->callback([&action, export_opts, &data] {
        action = [export_opts, &data]() -> int {
            taxonomy_graph graph = data.load_graph(export_opts->file);
            emit_document(export_edge_list(graph), export_opts->out);
            return 0;
        };
    });

    // --- import-edges ---
    auto* import_cmd = app.add_subcommand("import-edges", "read an edge list into a document");
    struct import_options {
        std::string file;
        std::string out;
    };
    auto import_opts = std::make_shared<import_options>();
    import_cmd->add_option("file", import_opts->file, "edge-list file")->required();
    import_cmd->add_option("-o,--out", import_opts->out,
                           "write the document here instead of stdout");
    import_cmd->callback([&action, import_opts, &data] {
        action = [import_opts, &data]() -> int {
            taxonomy_graph graph = import_edge_list(read_file(import_opts->file));
            emit_document(export_taxonomy_document(graph), import_opts->out);
            return 0;
        };
    });

    // --- diff ---
    auto* diff_cmd = app.add_subcommand("diff", "compare two taxonomy documents");
    struct diff_options {
        std::string a;
        std::string b;
    };
    auto diff_opts = std::make_shared<diff_options>();
    diff_cmd->add_option("a", diff_opts->a, "first taxonomy document")->required();
    diff_cmd->add_option("b", diff_opts->b, "second taxonomy document")->required();
    diff_cmd->callback([&action, diff_opts] {
        action = [diff_opts]() -> int {
            taxonomy_graph a = import_taxonomy_document(read_file(diff_opts->a));
            taxonomy_graph b = import_taxonomy_document(read_file(diff_opts->b));
            std::vector<std::string> lines = graph_diff_lines(a, b);
            if (lines.empty()) {
                std::cout << "documents are equivalent\n";
                return 0;
            }
            for (const std::string& line : lines) {
                std::cout << line << "\n";
            }
            return 3;
        };
    });

    // let --thesaurus / --records appear after the subcommand name too
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& failure) {
        int code = app.exit(failure);
        return code == 0 ? 0 : 64;
    }

    try {
        return action ? action() : 64;
    } catch (const error& failure) {
        std::cerr << "error: " << failure.what() << "\n";
        return exit_code_for(failure);
    } catch (const std::exception& failure) {
        std::cerr << "error: " << failure.what() << "\n";
        return 1;
    }
}
