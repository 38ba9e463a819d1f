#include "taxograph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <utility>

#include "taxograph/errors.hpp"

namespace taxograph {

std::string_view to_string(subset_kind kind) {
    switch (kind) {
        case subset_kind::context: return "context";
        case subset_kind::environment: return "environment";
        case subset_kind::event: return "event";
    }
    return "?";
}

std::optional<subset_kind> subset_kind_from(std::string_view name) {
    if (name == "context") return subset_kind::context;
    if (name == "environment") return subset_kind::environment;
    if (name == "event") return subset_kind::event;
    return std::nullopt;
}

taxonomy_graph taxonomy_graph::from_parts(std::map<std::string, label> labels,
                                          std::map<std::string, std::set<std::string>> clusters,
                                          std::map<std::string, std::set<subset_kind>> memberships,
                                          std::vector<cross_edge> edges,
                                          std::optional<provenance> origin) {
    taxonomy_graph graph;
    graph.labels_ = std::move(labels);
    graph.clusters_ = std::move(clusters);
    graph.memberships_ = std::move(memberships);
    for (cross_edge& edge : edges) {
        if (edge.b < edge.a) {
            std::swap(edge.a, edge.b);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [](const cross_edge& x, const cross_edge& y) {
                                return x.a == y.a && x.b == y.b;
                            }),
                edges.end());
    graph.edges_ = std::move(edges);
    graph.origin_ = std::move(origin);
    return graph;
}

bool taxonomy_graph::contains(std::string_view text) const {
    return labels_.find(std::string(text)) != labels_.end();
}

std::set<std::string> taxonomy_graph::label_texts() const {
    std::set<std::string> texts;
    for (const auto& [text, entry] : labels_) {
        texts.insert(text);
    }
    return texts;
}

std::pair<taxonomy_graph, insert_outcome> insert_label(const taxonomy_graph& graph,
                                                       const label& entry,
                                                       const std::string& cluster_name,
                                                       const std::set<subset_kind>& kinds,
                                                       const thesaurus& thesaurus) {
    if (!is_normalized(entry.text)) {
        throw error(errc::bad_argument, "label \"" + entry.text + "\" is not normalized");
    }
    if (!is_normalized(cluster_name)) {
        throw error(errc::bad_argument,
                    "cluster name \"" + cluster_name + "\" is not normalized");
    }
    label resolved = thesaurus.resolve(entry);

    if (graph.clusters_.count(resolved.text) > 0) {
        throw error(errc::subset_name_collision,
                    "label \"" + resolved.text + "\" is already a cluster name");
    }
    if (graph.labels_.count(cluster_name) > 0 && cluster_name != resolved.text) {
        throw error(errc::subset_name_collision,
                    "cluster name \"" + cluster_name + "\" is already a label");
    }
    if (cluster_name == resolved.text) {
        throw error(errc::subset_name_collision,
                    "label \"" + resolved.text + "\" cannot name its own cluster");
    }

    taxonomy_graph next = graph;
    auto [slot, inserted] = next.labels_.emplace(resolved.text, resolved);
    if (!inserted && slot->second.kind == label_kind::untagged) {
        slot->second.kind = resolved.kind;
    }
    if (inserted && kinds.empty()) {
        throw error(errc::bad_argument,
                    "new label \"" + resolved.text + "\" needs at least one subset kind");
    }
    next.clusters_[cluster_name].insert(resolved.text);
    next.memberships_[resolved.text].insert(kinds.begin(), kinds.end());
    return {std::move(next), inserted ? insert_outcome::added : insert_outcome::duplicate};
}

namespace {

void add_issue(std::vector<validation_issue>& issues, std::string code, std::string subject,
               std::string detail) {
    issues.push_back(validation_issue{issue_severity::error, std::move(code),
                                      std::move(subject), std::move(detail)});
}

}  // namespace

std::vector<validation_issue> validate(const taxonomy_graph& graph, const thesaurus& thesaurus) {
    std::vector<validation_issue> issues;

    // UNNORMALIZED_TEXT: every label text and cluster name is normalized form.
    for (const auto& [text, entry] : graph.labels()) {
        if (!is_normalized(text)) {
            add_issue(issues, "UNNORMALIZED_TEXT", text, "label text is not normalized");
        }
        if (entry.text != text) {
            add_issue(issues, "UNNORMALIZED_TEXT", text, "label keyed under a different text");
        }
    }
    for (const auto& [name, members] : graph.clusters()) {
        if (!is_normalized(name)) {
            add_issue(issues, "UNNORMALIZED_TEXT", name, "cluster name is not normalized");
        }
        // SUBSET_NAME_AS_NODE: cluster names never appear as labels.
        if (graph.labels().count(name) > 0) {
            add_issue(issues, "SUBSET_NAME_AS_NODE", name, "cluster name is also a label");
        }
        // EMPTY_CLUSTER / UNKNOWN_MEMBER: clusters are non-empty and reference labels.
        if (members.empty()) {
            add_issue(issues, "EMPTY_CLUSTER", name, "cluster has no members");
        }
        for (const std::string& member : members) {
            if (graph.labels().count(member) == 0) {
                add_issue(issues, "UNKNOWN_MEMBER", name,
                          "member \"" + member + "\" is not a label");
            }
        }
    }

    // ORPHAN_LABEL / MISSING_KIND: every label lives somewhere and has a kind.
    std::set<std::string> clustered;
    for (const auto& [name, members] : graph.clusters()) {
        clustered.insert(members.begin(), members.end());
    }
    for (const auto& [text, entry] : graph.labels()) {
        if (clustered.count(text) == 0) {
            add_issue(issues, "ORPHAN_LABEL", text, "label belongs to no cluster");
        }
        auto kinds = graph.memberships().find(text);
        if (kinds == graph.memberships().end() || kinds->second.empty()) {
            add_issue(issues, "MISSING_KIND", text, "label has no subset kind");
        }
    }
    for (const auto& [text, kinds] : graph.memberships()) {
        if (graph.labels().count(text) == 0) {
            add_issue(issues, "UNKNOWN_MEMBER", text, "subset membership for a non-label");
        }
    }

    // SYNONYM_COLLISION: no two labels resolve to the same preferred term.
    if (!thesaurus.empty()) {
        std::map<std::string, std::string> seen;
        for (const auto& [text, entry] : graph.labels()) {
            std::string preferred = thesaurus.resolve_text(text);
            auto [it, inserted] = seen.emplace(preferred, text);
            if (!inserted) {
                add_issue(issues, "SYNONYM_COLLISION", text,
                          "synonym of \"" + it->second + "\" (both resolve to \"" +
                              preferred + "\")");
            }
        }
    }

    // Edge sanity: endpoints exist, are distinct, never share a cluster, and
    // weights are non-negative.
    for (const cross_edge& edge : graph.cross_edges()) {
        std::string name = edge.a + " -- " + edge.b;
        if (edge.a == edge.b) {
            add_issue(issues, "SELF_EDGE", name, "edge joins a label to itself");
            continue;
        }
        bool known = true;
        for (const std::string* end : {&edge.a, &edge.b}) {
            if (graph.labels().count(*end) == 0) {
                add_issue(issues, "EDGE_ENDPOINT_UNKNOWN", name,
                          "endpoint \"" + *end + "\" is not a label");
                known = false;
            }
        }
        if (known) {
            for (const auto& [cluster, members] : graph.clusters()) {
                if (members.count(edge.a) > 0 && members.count(edge.b) > 0) {
                    add_issue(issues, "INTRA_CLUSTER_EDGE", name,
                              "both endpoints share cluster \"" + cluster + "\"");
                    break;
                }
            }
        }
        if (edge.weight.has_value() && (*edge.weight < 0.0 || std::isnan(*edge.weight))) {
            add_issue(issues, "NEGATIVE_EDGE_WEIGHT", name, "weight must be non-negative");
        }
    }

    std::sort(issues.begin(), issues.end(),
              [](const validation_issue& x, const validation_issue& y) {
                  return std::tie(x.code, x.subject, x.detail) <
                         std::tie(y.code, y.subject, y.detail);
              });
    return issues;
}

std::vector<validation_issue> validate(const taxonomy_graph& graph) {
    return validate(graph, thesaurus{});
}

std::set<std::string> neighbors(const taxonomy_graph& graph, std::string_view text) {
    std::string key(text);
    if (!graph.contains(key)) {
        throw error(errc::unknown_label, "no label \"" + key + "\" in the graph");
    }
    std::set<std::string> result;
    for (const auto& [name, members] : graph.clusters()) {
        if (members.count(key) > 0) {
            result.insert(members.begin(), members.end());
        }
    }
    result.erase(key);
    for (const cross_edge& edge : graph.cross_edges()) {
        if (edge.a == key) {
            result.insert(edge.b);
        } else if (edge.b == key) {
            result.insert(edge.a);
        }
    }
    return result;
}

std::optional<std::int64_t> distance(const taxonomy_graph& graph, std::string_view a,
                                     std::string_view b) {
    std::string from(a);
    std::string to(b);
    for (const std::string* end : {&from, &to}) {
        if (!graph.contains(*end)) {
            throw error(errc::unknown_label, "no label \"" + *end + "\" in the graph");
        }
    }
    if (from == to) {
        return 0;
    }

    // Dijkstra over the implicit adjacency: cluster mates at cost 1, cross
    // edges at ceil(weight) (unset = 1).
    std::map<std::string, std::vector<std::pair<std::string, std::int64_t>>> adjacency;
    for (const auto& [name, members] : graph.clusters()) {
        for (const std::string& x : members) {
            for (const std::string& y : members) {
                if (x != y) {
                    adjacency[x].emplace_back(y, 1);
                }
            }
        }
    }
    for (const cross_edge& edge : graph.cross_edges()) {
        std::int64_t cost = 1;
        if (edge.weight.has_value()) {
            cost = static_cast<std::int64_t>(std::ceil(*edge.weight));
        }
        adjacency[edge.a].emplace_back(edge.b, cost);
        adjacency[edge.b].emplace_back(edge.a, cost);
    }

    std::map<std::string, std::int64_t> best;
    using queued = std::pair<std::int64_t, std::string>;
    std::priority_queue<queued, std::vector<queued>, std::greater<>> frontier;
    best[from] = 0;
    frontier.emplace(0, from);
    while (!frontier.empty()) {
        auto [cost, node] = frontier.top();
        frontier.pop();
        auto seen = best.find(node);
        if (seen != best.end() && cost > seen->second) {
            continue;
        }
        if (node == to) {
            return cost;
        }
        for (const auto& [next, step] : adjacency[node]) {
            std::int64_t through = cost + step;
            auto slot = best.find(next);
            if (slot == best.end() || through < slot->second) {
                best[next] = through;
                frontier.emplace(through, next);
            }
        }
    }
    return std::nullopt;
}

}  // namespace taxograph
