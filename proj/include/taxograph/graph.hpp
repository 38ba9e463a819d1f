#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "taxograph/label.hpp"
#include "taxograph/thesaurus.hpp"

namespace taxograph {

// The three subset kinds a label can belong to. Closed set.
enum class subset_kind { context, environment, event };

std::string_view to_string(subset_kind kind);
std::optional<subset_kind> subset_kind_from(std::string_view name);

// An explicit edge between labels of different clusters. Stored with a < b.
// Intra-cluster adjacency is implicit (clusters are cliques) and never stored.
struct cross_edge {
    std::string a;
    std::string b;
    std::optional<double> weight;

    friend bool operator==(const cross_edge&, const cross_edge&) = default;
    friend auto operator<=>(const cross_edge& x, const cross_edge& y) {
        return std::tie(x.a, x.b) <=> std::tie(y.a, y.b);
    }
};

enum class insert_outcome { added, duplicate };

enum class issue_severity { warning, error };

struct validation_issue {
    issue_severity severity = issue_severity::error;
    std::string code;
    std::string subject;
    std::string detail;

    friend bool operator==(const validation_issue&, const validation_issue&) = default;
};

// Where a subgraph came from: a description of the parent and the selector
// that produced it. Annotation only; excluded from graph equality.
struct provenance {
    std::string parent;
    std::string selector;

    friend bool operator==(const provenance&, const provenance&) = default;
};

// Immutable cluster-graph taxonomy. Labels live in named clusters (cliques);
// only cross-cluster edges are explicit. All operations return new values.
class taxonomy_graph {
public:
    taxonomy_graph() = default;

    // Unchecked assembly from parts, for imports and tests. validate() is the
    // checking counterpart.
    static taxonomy_graph from_parts(std::map<std::string, label> labels,
                                     std::map<std::string, std::set<std::string>> clusters,
                                     std::map<std::string, std::set<subset_kind>> memberships,
                                     std::vector<cross_edge> edges,
                                     std::optional<provenance> origin = std::nullopt);

    const std::map<std::string, label>& labels() const { return labels_; }
    const std::map<std::string, std::set<std::string>>& clusters() const { return clusters_; }
    const std::map<std::string, std::set<subset_kind>>& memberships() const {
        return memberships_;
    }
    const std::vector<cross_edge>& cross_edges() const { return edges_; }
    const std::optional<provenance>& origin() const { return origin_; }

    bool contains(std::string_view text) const;
    std::size_t size() const { return labels_.size(); }
    std::set<std::string> label_texts() const;

    // Equality on labels, memberships, clusters and edges; provenance is not
    // part of graph identity.
    friend bool operator==(const taxonomy_graph& a, const taxonomy_graph& b) {
        return a.labels_ == b.labels_ && a.clusters_ == b.clusters_ &&
               a.memberships_ == b.memberships_ && a.edges_ == b.edges_;
    }

private:
    std::map<std::string, label> labels_;
    std::map<std::string, std::set<std::string>> clusters_;
    std::map<std::string, std::set<subset_kind>> memberships_;
    std::vector<cross_edge> edges_;  // sorted, unique, a < b within each edge
    std::optional<provenance> origin_;

    friend std::pair<taxonomy_graph, insert_outcome> insert_label(
        const taxonomy_graph&, const label&, const std::string&,
        const std::set<subset_kind>&, const thesaurus&);
};

// Inserts resolve(entry) into `cluster_name` with the given subset kinds,
// creating the cluster on demand. Returns added when the resolved text was
// new, duplicate otherwise; duplicates still extend cluster membership and
// kinds. An untagged stored label adopts the incoming tag; an established tag
// wins otherwise. Throws subset_name_collision when the label text equals a
// cluster name or vice versa, and bad_argument on unnormalized input or when
// a brand-new label arrives with no subset kind (the graph could never
// validate afterwards).
std::pair<taxonomy_graph, insert_outcome> insert_label(const taxonomy_graph& graph,
                                                       const label& entry,
                                                       const std::string& cluster_name,
                                                       const std::set<subset_kind>& kinds,
                                                       const thesaurus& thesaurus);

// Full invariant check. Empty result iff the graph is well formed. Issues are
// sorted by (code, subject, detail). The closed code set is documented in
// graph.cpp next to each check.
std::vector<validation_issue> validate(const taxonomy_graph& graph, const thesaurus& thesaurus);

// Structural check only (synonym collisions need a thesaurus).
std::vector<validation_issue> validate(const taxonomy_graph& graph);

// All labels adjacent to `text`: cluster mates plus cross-edge endpoints.
// Throws unknown_label.
std::set<std::string> neighbors(const taxonomy_graph& graph, std::string_view text);

// Shortest-path distance where cluster mates are 1 apart and a cross edge
// costs ceil(weight) (1 when unset). Returns nullopt when unreachable.
// Throws unknown_label.
std::optional<std::int64_t> distance(const taxonomy_graph& graph, std::string_view a,
                                     std::string_view b);

}  // namespace taxograph
