#include "taxograph/dcase.hpp"

#include <algorithm>
#include <utility>

#include "embedded_data.hpp"
#include "taxograph/cuts.hpp"
#include "taxograph/errors.hpp"
#include "taxograph/io.hpp"

namespace taxograph {

namespace {

std::vector<std::string> raws_from(std::string_view text) {
    std::vector<std::string> out;
    for (label_set_entry& entry : parse_label_set(text)) {
        out.push_back(std::move(entry.raw.text));
    }
    return out;
}

std::vector<source_label_set> load_source_sets() {
    using task = source_label_set::task;
    std::vector<source_label_set> sets;
    sets.push_back({"d13t23", task::events, raws_from(embedded::labels_d13t23)});
    sets.push_back({"d16t2", task::events, raws_from(embedded::labels_d16t2)});
    sets.push_back({"d16t3", task::events, raws_from(embedded::labels_d16t3)});
    sets.push_back({"d17t3", task::events, raws_from(embedded::labels_d17t3)});
    sets.push_back({"d17t4", task::events, raws_from(embedded::labels_d17t4)});
    sets.push_back({"d18t4", task::events, raws_from(embedded::labels_d18t4)});
    sets.push_back({"d13t1", task::scenes, raws_from(embedded::labels_d13t1)});
    sets.push_back({"d16t1", task::scenes, raws_from(embedded::labels_d16t1)});
    sets.push_back({"d17t1", task::scenes, raws_from(embedded::labels_d17t1)});
    sets.push_back({"d18t1", task::scenes, raws_from(embedded::labels_d18t1)});
    return sets;
}

std::set<std::string> texts_with_kind(const taxonomy_graph& graph, subset_kind kind) {
    std::set<std::string> out;
    for (const auto& [text, kinds] : graph.memberships()) {
        if (kinds.contains(kind)) {
            out.insert(text);
        }
    }
    return out;
}

void diff_one(golden_diff_result& diff, std::string name, const std::set<std::string>& produced,
              const std::set<std::string>& golden) {
    golden_diff_entry entry;
    entry.set_name = std::move(name);
    std::set_difference(golden.begin(), golden.end(), produced.begin(), produced.end(),
                        std::back_inserter(entry.missing));
    std::set_difference(produced.begin(), produced.end(), golden.begin(), golden.end(),
                        std::back_inserter(entry.extra));
    if (!entry.missing.empty() || !entry.extra.empty()) {
        diff.push_back(std::move(entry));
    }
}

}  // namespace

const thesaurus& embedded_thesaurus() {
    static const thesaurus instance = parse_thesaurus(embedded::thesaurus);
    return instance;
}

const decomposition_rules& embedded_rules() {
    static const decomposition_rules instance = parse_rules(embedded::records);
    return instance;
}

const std::vector<source_label_set>& embedded_source_sets() {
    static const std::vector<source_label_set> instance = load_source_sets();
    return instance;
}

const golden_sets& embedded_golden_sets() {
    static const golden_sets instance = parse_golden_sets(embedded::goldens);
    return instance;
}

dcase_init_result init_dcase(const thesaurus& thesaurus, const decomposition_rules& rules,
                             bool verify_goldens) {
    // The d16t3 list is published as two recording blocks; the second
    // checkpoint set is snapshotted between them, after these many labels.
    constexpr std::size_t d16t3_first_block = 11;

    dcase_init_result result;
    taxonomy_graph& graph = result.graph;

    auto merge_slice = [&](const source_label_set& set, std::size_t from, std::size_t to) {
        std::vector<raw_label> raws;
        for (std::size_t i = from; i < to && i < set.raw_labels.size(); ++i) {
            raws.push_back(raw_label{set.raw_labels[i]});
        }
        std::set<subset_kind> kinds{set.kind == source_label_set::task::events
                                        ? subset_kind::event
                                        : subset_kind::environment};
        auto [next, report] = merge_label_set(graph, raws, set.id, kinds, thesaurus, rules);
        graph = std::move(next);
        result.report.entries.insert(result.report.entries.end(),
                                     std::make_move_iterator(report.entries.begin()),
                                     std::make_move_iterator(report.entries.end()));
    };

    for (const source_label_set& set : embedded_source_sets()) {
        if (set.kind != source_label_set::task::events) {
            continue;
        }
        if (set.id == "d16t3") {
            merge_slice(set, 0, d16t3_first_block);
            result.produced.events_after_d16t3_home = texts_with_kind(graph, subset_kind::event);
            merge_slice(set, d16t3_first_block, set.raw_labels.size());
        } else {
            merge_slice(set, 0, set.raw_labels.size());
        }
        if (set.id == "d16t2") {
            result.produced.events_after_d16t2 = texts_with_kind(graph, subset_kind::event);
        }
    }
    result.produced.events = texts_with_kind(graph, subset_kind::event);

    for (const source_label_set& set : embedded_source_sets()) {
        if (set.kind == source_label_set::task::scenes) {
            merge_slice(set, 0, set.raw_labels.size());
        }
    }
    result.produced.scenes = texts_with_kind(graph, subset_kind::environment);

    {
        std::vector<raw_label> seeds{raw_label{"meeting"}, raw_label{"office"},
                                     raw_label{"shopping"}};
        auto [next, report] = merge_label_set(graph, seeds, "dcase context",
                                              {subset_kind::context}, thesaurus, rules);
        graph = std::move(next);
        result.report.entries.insert(result.report.entries.end(),
                                     std::make_move_iterator(report.entries.begin()),
                                     std::make_move_iterator(report.entries.end()));
    }
    result.produced.context = texts_with_kind(graph, subset_kind::context);

    // Union clusters spanning everything of one kind, alongside the per-source
    // clusters the labels arrived through.
    for (const std::string& text : texts_with_kind(graph, subset_kind::event)) {
        label entry = graph.labels().at(text);
        graph = insert_label(graph, entry, "dcase events", {subset_kind::event}, thesaurus)
                    .first;
    }
    for (const std::string& text : texts_with_kind(graph, subset_kind::environment)) {
        label entry = graph.labels().at(text);
        graph = insert_label(graph, entry, "dcase scenes", {subset_kind::environment},
                             thesaurus)
                    .first;
    }

    std::set<std::string> combined = texts_with_kind(graph, subset_kind::event);
    std::set<std::string> scenes = texts_with_kind(graph, subset_kind::environment);
    combined.insert(scenes.begin(), scenes.end());
    result.produced.combined = std::move(combined);

    if (verify_goldens) {
        golden_diff_result diff = golden_diff(result.produced, embedded_golden_sets());
        if (!diff.empty()) {
            const golden_diff_entry& first = diff.front();
            throw error(errc::golden_mismatch,
                        "produced \"" + first.set_name + "\" deviates from the golden set (" +
                            std::to_string(first.missing.size()) + " missing, " +
                            std::to_string(first.extra.size()) + " extra)");
        }
    }
    return result;
}

golden_diff_result golden_diff(const golden_sets& produced, const golden_sets& golden) {
    golden_diff_result diff;
    diff_one(diff, "combined", produced.combined, golden.combined);
    diff_one(diff, "context", produced.context, golden.context);
    diff_one(diff, "events", produced.events, golden.events);
    diff_one(diff, "events_after_d16t2", produced.events_after_d16t2,
             golden.events_after_d16t2);
    diff_one(diff, "events_after_d16t3_home", produced.events_after_d16t3_home,
             golden.events_after_d16t3_home);
    diff_one(diff, "scenes", produced.scenes, golden.scenes);
    return diff;
}

}  // namespace taxograph
