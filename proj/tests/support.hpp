#pragma once

// Shared helpers for the test binaries: a seeded RNG, a 200-term synthetic
// vocabulary with a matching thesaurus, generators for valid graphs and
// insert/merge sequences, and brute-force oracles the fast implementations
// are checked against. The oracles deliberately re-derive the documented
// rules instead of calling the code under test.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "taxograph/framework.hpp"
#include "taxograph/graph.hpp"
#include "taxograph/label.hpp"
#include "taxograph/thesaurus.hpp"

namespace taxograph::testing {

using rng_t = std::mt19937_64;

inline std::size_t pick(rng_t& rng, std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

inline bool chance(rng_t& rng, double probability) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < probability;
}

// 200 distinct pronounceable terms, all already in normalized form.
inline const std::vector<std::string>& vocabulary() {
    static const std::vector<std::string> words = [] {
        const std::vector<std::string> first = {"ba", "ce", "di", "fo", "gu", "ha", "ki",
                                                "lo", "mu", "ne", "po", "ra", "si", "tu",
                                                "va", "we", "xi", "yo", "zu", "ta"};
        const std::vector<std::string> second = {"bel", "cor", "dan", "fir", "gol",
                                                 "hem", "jar", "lum", "nor", "pex"};
        std::vector<std::string> out;
        for (const std::string& a : first) {
            for (const std::string& b : second) {
                out.push_back(a + b);
            }
        }
        return out;
    }();
    return words;
}

// Every fifth term owns a synset; every tenth gets a second variant. Variants
// append suffixes, so they never collide with vocabulary() entries.
inline const thesaurus& synthetic_thesaurus() {
    static const thesaurus instance = [] {
        std::vector<synset> synsets;
        const std::vector<std::string>& words = vocabulary();
        for (std::size_t i = 0; i < words.size(); i += 5) {
            synset group;
            group.preferred = words[i];
            group.variants.push_back(words[i] + "like");
            if (i % 10 == 0) {
                group.variants.push_back(words[i] + "ish");
            }
            synsets.push_back(std::move(group));
        }
        return thesaurus{std::move(synsets)};
    }();
    return instance;
}

inline const std::vector<std::string>& cluster_pool() {
    static const std::vector<std::string> names = {
        "area north", "area south", "area east", "area west",
        "area core",  "area rim",   "area top",  "area base"};
    return names;
}

inline std::set<subset_kind> random_kinds(rng_t& rng) {
    static const std::vector<subset_kind> all = {subset_kind::context,
                                                 subset_kind::environment,
                                                 subset_kind::event};
    std::set<subset_kind> kinds;
    kinds.insert(all[pick(rng, all.size())]);
    for (subset_kind kind : all) {
        if (chance(rng, 0.25)) {
            kinds.insert(kind);
        }
    }
    return kinds;
}

inline label_kind random_tag(rng_t& rng) {
    double roll = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    if (roll < 0.5) {
        return label_kind::untagged;
    }
    return roll < 0.75 ? label_kind::object : label_kind::action;
}

// Tag derived from the text so independently generated graphs never
// contradict each other about a term's word role.
inline label_kind stable_tag(const std::string& text) {
    switch (static_cast<unsigned char>(text.front()) % 3) {
        case 0: return label_kind::object;
        case 1: return label_kind::action;
        default: return label_kind::untagged;
    }
}

// A structurally valid random graph: distinct preferred terms, nonempty kind
// sets, every label clustered, cross edges only between labels that share no
// cluster. `with_edges` sprinkles weighted and unweighted cross edges.
inline taxonomy_graph random_graph(rng_t& rng, std::size_t max_labels,
                                   std::size_t max_clusters, bool with_edges = true) {
    const std::vector<std::string>& words = vocabulary();
    std::size_t label_count = 1 + pick(rng, max_labels);
    std::size_t cluster_count = 1 + pick(rng, max_clusters);

    std::vector<std::size_t> indices(words.size());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        indices[i] = i;
    }
    std::shuffle(indices.begin(), indices.end(), rng);

    std::map<std::string, label> labels;
    std::map<std::string, std::set<subset_kind>> memberships;
    std::map<std::string, std::set<std::string>> clusters;
    std::vector<std::string> texts;
    for (std::size_t i = 0; i < label_count; ++i) {
        const std::string& text = words[indices[i]];
        labels.emplace(text, label{text, stable_tag(text)});
        memberships.emplace(text, random_kinds(rng));
        texts.push_back(text);
        clusters[cluster_pool()[pick(rng, cluster_count)]].insert(text);
        if (chance(rng, 0.25)) {
            clusters[cluster_pool()[pick(rng, cluster_count)]].insert(text);
        }
    }

    std::vector<cross_edge> edges;
    if (with_edges) {
        auto share_cluster = [&clusters](const std::string& a, const std::string& b) {
            for (const auto& [name, members] : clusters) {
                if (members.contains(a) && members.contains(b)) {
                    return true;
                }
            }
            return false;
        };
        for (std::size_t attempt = 0; attempt < label_count; ++attempt) {
            const std::string& a = texts[pick(rng, texts.size())];
            const std::string& b = texts[pick(rng, texts.size())];
            if (a == b || share_cluster(a, b)) {
                continue;
            }
            cross_edge edge{std::min(a, b), std::max(a, b), std::nullopt};
            if (chance(rng, 0.5)) {
                edge.weight = chance(rng, 0.25) ? 2.5 : double(1 + pick(rng, 4));
            }
            edges.push_back(std::move(edge));
        }
    }
    return taxonomy_graph::from_parts(std::move(labels), std::move(clusters),
                                      std::move(memberships), std::move(edges));
}

// One step of a randomized build: either a direct insert of a (possibly
// variant-spelled) vocabulary term, or a raw compound pushed through the
// curation pipeline.
struct build_step {
    bool direct = true;
    label entry;        // direct inserts
    raw_label raw;      // pipeline merges
    std::string cluster;
    std::set<subset_kind> kinds;
};

inline std::string random_spelling(rng_t& rng) {
    const std::vector<std::string>& words = vocabulary();
    std::size_t i = pick(rng, words.size());
    if (i % 5 == 0 && chance(rng, 0.4)) {
        return chance(rng, 0.5) && i % 10 == 0 ? words[i] + "ish" : words[i] + "like";
    }
    return words[i];
}

inline std::vector<build_step> random_build_sequence(rng_t& rng, std::size_t length) {
    std::vector<build_step> steps;
    for (std::size_t i = 0; i < length; ++i) {
        build_step step;
        step.cluster = cluster_pool()[pick(rng, 4)];
        step.kinds = random_kinds(rng);
        step.direct = chance(rng, 0.5);
        if (step.direct) {
            step.entry = label{random_spelling(rng), random_tag(rng)};
        } else {
            std::string raw = random_spelling(rng);
            if (chance(rng, 0.5)) {
                raw += " " + random_spelling(rng);
            }
            if (chance(rng, 0.3)) {
                raw = "  " + raw + "  ";  // normalization fodder
            }
            step.raw = raw_label{raw};
        }
        steps.push_back(std::move(step));
    }
    return steps;
}

inline taxonomy_graph run_build_sequence(const std::vector<build_step>& steps,
                                         const thesaurus& thes,
                                         const decomposition_rules& rules) {
    taxonomy_graph graph;
    for (const build_step& step : steps) {
        if (step.direct) {
            graph = insert_label(graph, step.entry, step.cluster, step.kinds, thes).first;
        } else {
            graph = process_label(graph, step.raw, step.cluster, step.kinds, thes, rules)
                        .first;
        }
    }
    return graph;
}

// Independent invariant check, written against the documented rules: text in
// normal form (lowercase word characters separated by single spaces), labels
// distinct under the thesaurus, labels clustered and kinded, clusters
// nonempty with known members, edges cross-cluster with nonnegative weights.
inline std::vector<std::string> naive_invariant_failures(const taxonomy_graph& graph,
                                                         const thesaurus& thes) {
    std::vector<std::string> failures;
    auto normal_form = [](const std::string& text) {
        if (text.empty() || text.front() == ' ' || text.back() == ' ') {
            return false;
        }
        bool previous_space = false;
        for (unsigned char c : text) {
            bool word = (std::islower(c) != 0) || (std::isdigit(c) != 0) || c >= 0x80;
            if (!word && c != ' ') {
                return false;
            }
            if (c == ' ' && previous_space) {
                return false;
            }
            previous_space = c == ' ';
        }
        return true;
    };

    for (const auto& [text, entry] : graph.labels()) {
        if (!normal_form(text)) {
            failures.push_back("not normal form: " + text);
        }
        if (graph.clusters().contains(text)) {
            failures.push_back("label doubles as cluster name: " + text);
        }
        auto kinds = graph.memberships().find(text);
        if (kinds == graph.memberships().end() || kinds->second.empty()) {
            failures.push_back("no subset kind: " + text);
        }
        bool clustered = false;
        for (const auto& [name, members] : graph.clusters()) {
            clustered = clustered || members.contains(text);
        }
        if (!clustered) {
            failures.push_back("orphan: " + text);
        }
    }
    for (auto a = graph.labels().begin(); a != graph.labels().end(); ++a) {
        for (auto b = std::next(a); b != graph.labels().end(); ++b) {
            if (thes.are_synonyms(label{a->first}, label{b->first})) {
                failures.push_back("synonyms coexist: " + a->first + " / " + b->first);
            }
        }
    }
    for (const auto& [name, members] : graph.clusters()) {
        if (members.empty()) {
            failures.push_back("empty cluster: " + name);
        }
        for (const std::string& member : members) {
            if (!graph.labels().contains(member)) {
                failures.push_back("unknown member: " + member + " in " + name);
            }
        }
    }
    for (const cross_edge& edge : graph.cross_edges()) {
        if (edge.a == edge.b) {
            failures.push_back("self edge: " + edge.a);
        }
        if (!graph.labels().contains(edge.a) || !graph.labels().contains(edge.b)) {
            failures.push_back("edge endpoint unknown: " + edge.a + " -- " + edge.b);
        }
        for (const auto& [name, members] : graph.clusters()) {
            if (members.contains(edge.a) && members.contains(edge.b)) {
                failures.push_back("edge inside cluster " + name + ": " + edge.a + " -- " +
                                   edge.b);
            }
        }
        if (edge.weight.has_value() &&
            !(std::isfinite(*edge.weight) && *edge.weight >= 0.0)) {
            failures.push_back("bad weight: " + edge.a + " -- " + edge.b);
        }
    }
    return failures;
}

constexpr std::int64_t distance_infinity = std::numeric_limits<std::int64_t>::max() / 4;

// Brute-force all-pairs shortest paths over the expanded adjacency (cluster
// mates at cost 1, cross edges at ceil(weight), 1 when unset).
inline std::vector<std::vector<std::int64_t>> all_pairs_distances(
    const taxonomy_graph& graph, std::vector<std::string>& order_out) {
    order_out.clear();
    std::map<std::string, std::size_t> index;
    for (const auto& [text, entry] : graph.labels()) {
        index.emplace(text, order_out.size());
        order_out.push_back(text);
    }
    std::size_t n = order_out.size();
    std::vector<std::vector<std::int64_t>> dist(
        n, std::vector<std::int64_t>(n, distance_infinity));
    for (std::size_t i = 0; i < n; ++i) {
        dist[i][i] = 0;
    }
    for (const auto& [name, members] : graph.clusters()) {
        for (const std::string& a : members) {
            for (const std::string& b : members) {
                if (a != b) {
                    dist[index.at(a)][index.at(b)] = 1;
                }
            }
        }
    }
    for (const cross_edge& edge : graph.cross_edges()) {
        std::int64_t cost =
            edge.weight.has_value()
                ? static_cast<std::int64_t>(std::llround(std::ceil(*edge.weight)))
                : 1;
        std::size_t a = index.at(edge.a);
        std::size_t b = index.at(edge.b);
        dist[a][b] = std::min(dist[a][b], cost);
        dist[b][a] = std::min(dist[b][a], cost);
    }
    for (std::size_t via = 0; via < n; ++via) {
        for (std::size_t from = 0; from < n; ++from) {
            for (std::size_t to = 0; to < n; ++to) {
                std::int64_t candidate = dist[from][via] + dist[via][to];
                if (candidate < dist[from][to]) {
                    dist[from][to] = candidate;
                }
            }
        }
    }
    return dist;
}

}  // namespace taxograph::testing
