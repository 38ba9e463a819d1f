#pragma once

#include <set>
#include <string>
#include <vector>

#include "taxograph/framework.hpp"
#include "taxograph/graph.hpp"
#include "taxograph/label.hpp"
#include "taxograph/thesaurus.hpp"

namespace taxograph {

// One published challenge label list, transcribed verbatim (casing and
// punctuation included). `id` follows the DxxTy pattern; the 2013 list is
// d13t23 because Tasks 2 and 3 shared a vocabulary.
struct source_label_set {
    enum class task { events, scenes };

    std::string id;
    task kind = task::events;
    std::vector<std::string> raw_labels;
};

// The canonical label sets the initialization must reproduce exactly.
// events_after_d16t2: event labels once the 2013 and 2016-task-2 lists are in.
// events_after_d16t3_home: ditto after the first (home) block of d16t3.
// combined: dedup-union of events and scenes.
struct golden_sets {
    std::set<std::string> events_after_d16t2;
    std::set<std::string> events_after_d16t3_home;
    std::set<std::string> events;
    std::set<std::string> scenes;
    std::set<std::string> context;
    std::set<std::string> combined;

    friend bool operator==(const golden_sets&, const golden_sets&) = default;
};

struct golden_diff_entry {
    std::string set_name;
    std::vector<std::string> missing;  // in golden, not produced
    std::vector<std::string> extra;    // produced, not in golden

    friend bool operator==(const golden_diff_entry&, const golden_diff_entry&) = default;
};

// Empty iff the produced sets match the goldens exactly. Entries are ordered
// by set name; member lists are sorted.
using golden_diff_result = std::vector<golden_diff_entry>;

struct dcase_init_result {
    taxonomy_graph graph;
    curation_report report;
    golden_sets produced;
};

// Bundled data, parsed once from the same bytes that ship under data/.
const thesaurus& embedded_thesaurus();
const decomposition_rules& embedded_rules();
const std::vector<source_label_set>& embedded_source_sets();
const golden_sets& embedded_golden_sets();

// Builds the full challenge taxonomy: merges every event list chronologically
// into per-task clusters (kind event), then every scene list (kind
// environment), seeds the context subset {meeting, office, shopping} and
// derives the "dcase events"/"dcase scenes" union clusters. Snapshots the
// produced golden sets along the way. With verify_goldens set, throws
// error{errc::golden_mismatch} describing the first diverging set.
dcase_init_result init_dcase(const thesaurus& thesaurus, const decomposition_rules& rules,
                             bool verify_goldens = false);

golden_diff_result golden_diff(const golden_sets& produced, const golden_sets& golden);

}  // namespace taxograph
