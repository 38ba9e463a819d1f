#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "taxograph/dcase.hpp"
#include "taxograph/framework.hpp"
#include "taxograph/graph.hpp"
#include "taxograph/label.hpp"
#include "taxograph/thesaurus.hpp"

namespace taxograph {

// --- Taxonomy document: JSON, deterministic key and array order. ---

std::string export_taxonomy_document(const taxonomy_graph& graph);

// Throws parse_error / error{errc::unknown_format_version}. The result is not
// validated; run validate() separately.
taxonomy_graph import_taxonomy_document(std::string_view text);

// --- Edge-list document: versioned text format. ---
//
//   taxograph-edges v1
//   @cluster <name>
//   <member>\t<kind,...>[\t<object|action>]
//   ...
//   @edges
//   <a>\t<b>[\t<weight>]
//
// Clusters, members and edges are emitted in sorted order; clique edges are
// never expanded. Throws error{errc::invalid_graph} when the graph fails the
// structural validate().
std::string export_edge_list(const taxonomy_graph& graph);

taxonomy_graph import_edge_list(std::string_view text);

// --- Loaders for the bundled data formats. ---

thesaurus parse_thesaurus(std::string_view json_text);
decomposition_rules parse_rules(std::string_view json_text);
golden_sets parse_golden_sets(std::string_view json_text);

// Plain label-set format: one raw label per line, '#' comments, blank lines
// ignored. The JSON variant ([{"raw": ..., "kinds": [...], "cluster": ...}])
// allows per-label overrides; plain entries leave the optionals unset.
struct label_set_entry {
    raw_label raw;
    std::optional<std::string> cluster;
    std::optional<std::set<subset_kind>> kinds;

    friend bool operator==(const label_set_entry&, const label_set_entry&) = default;
};

std::vector<label_set_entry> parse_label_set(std::string_view text);

// --- Report and diff rendering (used by the CLI). ---

std::string report_to_json(const curation_report& report);
std::string render_report(const curation_report& report);
std::string render_issues(const std::vector<validation_issue>& issues);
std::string render_golden_diff(const golden_diff_result& diff);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace taxograph
