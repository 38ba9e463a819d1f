#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "taxograph/graph.hpp"
#include "taxograph/label.hpp"
#include "taxograph/thesaurus.hpp"

namespace taxograph {

enum class atom_outcome { added, duplicate };

// One atom produced for a raw label: the token before synonym resolution,
// the label that actually went into the graph, and what happened to it.
struct atom_result {
    std::string token;
    label stored;
    atom_outcome outcome = atom_outcome::added;

    friend bool operator==(const atom_result&, const atom_result&) = default;
};

// The full audit trail for one raw label.
struct report_entry {
    std::string raw;
    std::string normalized;                        // empty when a raw-keyed record fired first
    std::optional<std::string> compound_resolved;  // set when compound-level resolution changed the text
    std::optional<std::string> record_raw;         // the matching curation record, if any
    std::optional<curation_action> record_action;
    std::vector<atom_result> atoms;
    bool dropped = false;
    std::optional<std::string> error;

    friend bool operator==(const report_entry&, const report_entry&) = default;
};

struct curation_report {
    std::vector<report_entry> entries;

    std::size_t added() const;
    std::size_t duplicates() const;
    std::size_t dropped() const;
    std::size_t errors() const;

    friend bool operator==(const curation_report&, const curation_report&) = default;
};

// Runs one raw label through the fixed pipeline: curation-record lookup on the
// raw text, else normalize -> compound-level synonym resolution -> decompose
// (records by normalized key first, then generic split) -> atom-level synonym
// resolution -> insert_label per atom. Failures (e.g. a label that normalizes
// to nothing) land in the entry's error field; the graph is returned
// unchanged in that case.
std::pair<taxonomy_graph, report_entry> process_label(const taxonomy_graph& graph,
                                                      const raw_label& raw,
                                                      const std::string& cluster_name,
                                                      const std::set<subset_kind>& kinds,
                                                      const thesaurus& thesaurus,
                                                      const decomposition_rules& rules);

// process_label over a whole list, collecting entries. Per-label errors never
// abort the batch.
std::pair<taxonomy_graph, curation_report> merge_label_set(const taxonomy_graph& graph,
                                                           const std::vector<raw_label>& raws,
                                                           const std::string& cluster_name,
                                                           const std::set<subset_kind>& kinds,
                                                           const thesaurus& thesaurus,
                                                           const decomposition_rules& rules);

}  // namespace taxograph
