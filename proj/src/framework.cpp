#include "taxograph/framework.hpp"

#include <utility>

#include "taxograph/errors.hpp"

namespace taxograph {

std::size_t curation_report::added() const {
    std::size_t n = 0;
    for (const report_entry& entry : entries) {
        for (const atom_result& atom : entry.atoms) {
            n += atom.outcome == atom_outcome::added ? 1 : 0;
        }
    }
    return n;
}

std::size_t curation_report::duplicates() const {
    std::size_t n = 0;
    for (const report_entry& entry : entries) {
        for (const atom_result& atom : entry.atoms) {
            n += atom.outcome == atom_outcome::duplicate ? 1 : 0;
        }
    }
    return n;
}

std::size_t curation_report::dropped() const {
    std::size_t n = 0;
    for (const report_entry& entry : entries) {
        n += entry.dropped ? 1 : 0;
    }
    return n;
}

std::size_t curation_report::errors() const {
    std::size_t n = 0;
    for (const report_entry& entry : entries) {
        n += entry.error.has_value() ? 1 : 0;
    }
    return n;
}

std::pair<taxonomy_graph, report_entry> process_label(const taxonomy_graph& graph,
                                                      const raw_label& raw,
                                                      const std::string& cluster_name,
                                                      const std::set<subset_kind>& kinds,
                                                      const thesaurus& thesaurus,
                                                      const decomposition_rules& rules) {
    report_entry entry;
    entry.raw = raw.text;
    try {
        // Records are consulted before anything else, on the raw text: some
        // published labels carry meaning in characters normalization removes.
        const curation_record* record = rules.find(canon_key(raw.text), cluster_name);
        std::vector<label> atoms;
        if (record == nullptr) {
            label normalized = normalize(raw);
            entry.normalized = normalized.text;
            label resolved = thesaurus.resolve(normalized);
            if (resolved.text != normalized.text) {
                entry.compound_resolved = resolved.text;
            }
            record = rules.find(canon_key(normalized.text), cluster_name);
            if (record == nullptr && resolved.text != normalized.text) {
                record = rules.find(canon_key(resolved.text), cluster_name);
            }
            if (record == nullptr) {
                atoms = decompose(resolved, rules);
            }
        }
        if (record != nullptr) {
            entry.record_raw = record->raw;
            entry.record_action = record->action;
            if (record->action == curation_action::drop) {
                entry.dropped = true;
                return {graph, std::move(entry)};
            }
            atoms = record->outputs;
        }

        taxonomy_graph next = graph;
        for (const label& atom : atoms) {
            label stored = thesaurus.resolve(atom);
            auto [after, outcome] = insert_label(next, stored, cluster_name, kinds, thesaurus);
            next = std::move(after);
            entry.atoms.push_back(atom_result{
                atom.text, stored,
                outcome == insert_outcome::added ? atom_outcome::added
                                                 : atom_outcome::duplicate});
        }
        return {std::move(next), std::move(entry)};
    } catch (const error& failure) {
        // A raw label lands atomically or not at all: on failure the graph is
        // handed back untouched and partial atoms leave the report.
        entry.atoms.clear();
        entry.error = failure.what();
        return {graph, std::move(entry)};
    }
}

std::pair<taxonomy_graph, curation_report> merge_label_set(const taxonomy_graph& graph,
                                                           const std::vector<raw_label>& raws,
                                                           const std::string& cluster_name,
                                                           const std::set<subset_kind>& kinds,
                                                           const thesaurus& thesaurus,
                                                           const decomposition_rules& rules) {
    taxonomy_graph current = graph;
    curation_report report;
    report.entries.reserve(raws.size());
    for (const raw_label& raw : raws) {
        auto [next, entry] = process_label(current, raw, cluster_name, kinds, thesaurus, rules);
        current = std::move(next);
        report.entries.push_back(std::move(entry));
    }
    return {std::move(current), std::move(report)};
}

}  // namespace taxograph
