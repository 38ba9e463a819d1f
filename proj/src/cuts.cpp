#include "taxograph/cuts.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "taxograph/errors.hpp"

namespace taxograph {

std::string cut_selector::describe() const {
    std::ostringstream out;
    out << (compose == composition::intersection ? "all of" : "any of");
    auto list = [&out](std::string_view name, const auto& values, auto render) {
        if (values.empty()) {
            return;
        }
        out << " " << name << "{";
        bool first = true;
        for (const auto& value : values) {
            out << (first ? "" : ", ") << render(value);
            first = false;
        }
        out << "}";
    };
    list("kinds", kinds, [](subset_kind k) { return std::string(to_string(k)); });
    list("clusters", clusters, [](const std::string& s) { return s; });
    list("labels", labels, [](const std::string& s) { return s; });
    return out.str();
}

taxonomy_graph cut(const taxonomy_graph& graph, const cut_selector& selector) {
    if (selector.empty()) {
        throw error(errc::bad_argument, "cut selector names no criterion");
    }
    for (const std::string& name : selector.clusters) {
        if (graph.clusters().count(name) == 0) {
            throw error(errc::unknown_cluster, "no cluster \"" + name + "\" in the graph");
        }
    }

    std::set<std::string> in_selected_clusters;
    for (const std::string& name : selector.clusters) {
        const auto& members = graph.clusters().at(name);
        in_selected_clusters.insert(members.begin(), members.end());
    }

    const bool want_all = selector.compose == cut_selector::composition::intersection;
    std::set<std::string> selected;
    for (const auto& [text, entry] : graph.labels()) {
        bool by_kind = false;
        if (!selector.kinds.empty()) {
            auto kinds = graph.memberships().find(text);
            if (kinds != graph.memberships().end()) {
                by_kind = std::any_of(selector.kinds.begin(), selector.kinds.end(),
                                      [&](subset_kind k) { return kinds->second.count(k) > 0; });
            }
        }
        bool by_cluster = in_selected_clusters.count(text) > 0;
        bool by_list = selector.labels.count(text) > 0;

        bool match = want_all;
        if (!selector.kinds.empty()) {
            match = want_all ? (match && by_kind) : (match || by_kind);
        }
        if (!selector.clusters.empty()) {
            match = want_all ? (match && by_cluster) : (match || by_cluster);
        }
        if (!selector.labels.empty()) {
            match = want_all ? (match && by_list) : (match || by_list);
        }
        if (match) {
            selected.insert(text);
        }
    }

    std::map<std::string, label> labels;
    std::map<std::string, std::set<subset_kind>> memberships;
    for (const std::string& text : selected) {
        labels.emplace(text, graph.labels().at(text));
        auto kinds = graph.memberships().find(text);
        if (kinds != graph.memberships().end()) {
            memberships.emplace(text, kinds->second);
        }
    }
    std::map<std::string, std::set<std::string>> clusters;
    for (const auto& [name, members] : graph.clusters()) {
        std::set<std::string> kept;
        for (const std::string& member : members) {
            if (selected.count(member) > 0) {
                kept.insert(member);
            }
        }
        if (!kept.empty()) {
            clusters.emplace(name, std::move(kept));
        }
    }
    std::vector<cross_edge> edges;
    for (const cross_edge& edge : graph.cross_edges()) {
        if (selected.count(edge.a) > 0 && selected.count(edge.b) > 0) {
            edges.push_back(edge);
        }
    }

    std::ostringstream parent;
    parent << "graph(" << graph.size() << " labels, " << graph.clusters().size()
           << " clusters)";
    return taxonomy_graph::from_parts(std::move(labels), std::move(clusters),
                                      std::move(memberships), std::move(edges),
                                      provenance{parent.str(), selector.describe()});
}

namespace {

// Maps every label text of a graph to its resolved spelling, raising
// synonym_conflict when two distinct non-preferred variants of one synset
// meet across the inputs: folding both into a spelling neither graph uses
// would fabricate a label.
std::string resolved_or_throw(const thesaurus& thesaurus, const std::string& a_text,
                              const std::string& b_text) {
    std::string preferred = thesaurus.resolve_text(a_text);
    if (a_text != b_text && a_text != preferred && b_text != preferred) {
        throw error(errc::synonym_conflict,
                    "\"" + a_text + "\" and \"" + b_text +
                        "\" are distinct variants of \"" + preferred + "\"");
    }
    return preferred;
}

// Index of resolved text -> original text for one graph.
std::map<std::string, std::string> resolution_index(const taxonomy_graph& graph,
                                                    const thesaurus& thesaurus) {
    std::map<std::string, std::string> index;
    for (const auto& [text, entry] : graph.labels()) {
        index.emplace(thesaurus.resolve_text(text), text);
    }
    return index;
}

std::optional<double> merge_weights(const std::optional<double>& x,
                                    const std::optional<double>& y) {
    if (x == y) {
        return x;
    }
    return std::nullopt;
}

// Order-independent, like merge_weights: agreement wins, an untagged side
// yields, contradiction resets to untagged.
label merge_tags(const label& x, const label& y) {
    label out = x;
    if (x.kind == y.kind || y.kind == label_kind::untagged) {
        return out;
    }
    out.kind = x.kind == label_kind::untagged ? y.kind : label_kind::untagged;
    return out;
}

// An explicit edge between labels that a cluster merge has made cluster mates
// is redundant (clique adjacency already covers it) and would no longer
// validate; drop it.
std::vector<cross_edge> without_intra_cluster(
    std::vector<cross_edge> edges, const std::map<std::string, std::set<std::string>>& clusters) {
    std::erase_if(edges, [&clusters](const cross_edge& edge) {
        for (const auto& [name, members] : clusters) {
            if (members.contains(edge.a) && members.contains(edge.b)) {
                return true;
            }
        }
        return false;
    });
    return edges;
}

}  // namespace

taxonomy_graph graph_union(const taxonomy_graph& a, const taxonomy_graph& b,
                           const thesaurus& thesaurus) {
    auto index_a = resolution_index(a, thesaurus);
    auto index_b = resolution_index(b, thesaurus);

    // Final spelling per resolved text: the preferred spelling when the two
    // graphs disagree, the shared spelling otherwise.
    std::map<std::string, std::string> spelling;
    std::map<std::string, std::string> rename_a;
    std::map<std::string, std::string> rename_b;
    for (const auto& [resolved, text_a] : index_a) {
        auto in_b = index_b.find(resolved);
        std::string final_text = text_a;
        if (in_b != index_b.end() && in_b->second != text_a) {
            final_text = resolved_or_throw(thesaurus, text_a, in_b->second);
        }
        spelling[resolved] = final_text;
        rename_a[text_a] = final_text;
        if (in_b != index_b.end()) {
            rename_b[in_b->second] = final_text;
        }
    }
    for (const auto& [resolved, text_b] : index_b) {
        if (spelling.count(resolved) == 0) {
            spelling[resolved] = text_b;
            rename_b[text_b] = text_b;
        }
    }

    std::map<std::string, label> labels;
    std::map<std::string, std::set<subset_kind>> memberships;
    std::map<std::string, std::set<std::string>> clusters;
    std::vector<cross_edge> edges;

    auto absorb = [&](const taxonomy_graph& graph,
                      const std::map<std::string, std::string>& rename) {
        for (const auto& [text, entry] : graph.labels()) {
            const std::string& final_text = rename.at(text);
            label renamed{final_text, entry.kind};
            auto [slot, inserted] = labels.emplace(final_text, renamed);
            if (!inserted) {
                slot->second = merge_tags(slot->second, renamed);
            }
            auto kinds = graph.memberships().find(text);
            if (kinds != graph.memberships().end()) {
                memberships[final_text].insert(kinds->second.begin(), kinds->second.end());
            }
        }
        for (const auto& [name, members] : graph.clusters()) {
            for (const std::string& member : members) {
                clusters[name].insert(rename.at(member));
            }
        }
        for (const cross_edge& edge : graph.cross_edges()) {
            cross_edge renamed{rename.at(edge.a), rename.at(edge.b), edge.weight};
            if (renamed.b < renamed.a) {
                std::swap(renamed.a, renamed.b);
            }
            auto twin = std::find_if(edges.begin(), edges.end(), [&](const cross_edge& e) {
                return e.a == renamed.a && e.b == renamed.b;
            });
            if (twin == edges.end()) {
                edges.push_back(std::move(renamed));
            } else {
                twin->weight = merge_weights(twin->weight, renamed.weight);
            }
        }
    };
    absorb(a, rename_a);
    absorb(b, rename_b);
    edges = without_intra_cluster(std::move(edges), clusters);

    return taxonomy_graph::from_parts(std::move(labels), std::move(clusters),
                                      std::move(memberships), std::move(edges));
}

taxonomy_graph graph_intersect(const taxonomy_graph& a, const taxonomy_graph& b,
                               const thesaurus& thesaurus) {
    auto index_a = resolution_index(a, thesaurus);
    auto index_b = resolution_index(b, thesaurus);

    std::map<std::string, label> labels;
    std::map<std::string, std::set<subset_kind>> memberships;
    std::map<std::string, std::set<std::string>> clusters;
    std::vector<cross_edge> edges;

    std::map<std::string, std::string> rename_a;
    std::map<std::string, std::string> rename_b;
    for (const auto& [resolved, text_a] : index_a) {
        auto in_b = index_b.find(resolved);
        if (in_b == index_b.end()) {
            continue;
        }
        const std::string& text_b = in_b->second;

        // Only what both graphs agree on survives. A label they kind or
        // cluster differently has no placement both sides stand behind, and
        // keeping it degraded would not validate.
        std::set<subset_kind> kinds;
        static const std::set<subset_kind> none;
        const auto& kinds_a =
            a.memberships().count(text_a) ? a.memberships().at(text_a) : none;
        const auto& kinds_b =
            b.memberships().count(text_b) ? b.memberships().at(text_b) : none;
        std::set_intersection(kinds_a.begin(), kinds_a.end(), kinds_b.begin(), kinds_b.end(),
                              std::inserter(kinds, kinds.begin()));
        if (kinds.empty()) {
            continue;
        }
        std::set<std::string> shared;
        for (const auto& [name, members] : a.clusters()) {
            auto in_b_clusters = b.clusters().find(name);
            if (members.count(text_a) > 0 && in_b_clusters != b.clusters().end() &&
                in_b_clusters->second.count(text_b) > 0) {
                shared.insert(name);
            }
        }
        if (shared.empty()) {
            continue;
        }

        std::string final_text = text_a;
        if (text_a != text_b) {
            // The preferred spelling when one side uses it; between two plain
            // variants the lexicographically smaller one (deterministic and
            // order-independent).
            final_text = (text_a == resolved || text_b == resolved) ? resolved
                                                                    : std::min(text_a, text_b);
        }
        rename_a[text_a] = final_text;
        rename_b[text_b] = final_text;
        labels.emplace(final_text, merge_tags(label{final_text, a.labels().at(text_a).kind},
                                              b.labels().at(text_b)));
        memberships.emplace(final_text, std::move(kinds));
        for (const std::string& name : shared) {
            clusters[name].insert(final_text);
        }
    }

    for (const cross_edge& edge : a.cross_edges()) {
        auto ra = rename_a.find(edge.a);
        auto rb = rename_a.find(edge.b);
        if (ra == rename_a.end() || rb == rename_a.end()) {
            continue;
        }
        cross_edge renamed{ra->second, rb->second, edge.weight};
        if (renamed.b < renamed.a) {
            std::swap(renamed.a, renamed.b);
        }
        for (const cross_edge& other : b.cross_edges()) {
            auto oa = rename_b.find(other.a);
            auto ob = rename_b.find(other.b);
            if (oa == rename_b.end() || ob == rename_b.end()) {
                continue;
            }
            std::string x = oa->second;
            std::string y = ob->second;
            if (y < x) {
                std::swap(x, y);
            }
            if (x == renamed.a && y == renamed.b) {
                renamed.weight = merge_weights(renamed.weight, other.weight);
                edges.push_back(renamed);
                break;
            }
        }
    }

    return taxonomy_graph::from_parts(std::move(labels), std::move(clusters),
                                      std::move(memberships), std::move(edges));
}

std::vector<std::string> export_label_vector(const taxonomy_graph& graph) {
    std::vector<std::string> texts;
    texts.reserve(graph.size());
    for (const auto& [text, entry] : graph.labels()) {
        texts.push_back(text);
    }
    return texts;  // std::map iteration is already lexicographic
}

}  // namespace taxograph
