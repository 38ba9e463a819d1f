#pragma once

#include <set>
#include <string>
#include <vector>

#include "taxograph/graph.hpp"
#include "taxograph/thesaurus.hpp"

namespace taxograph {

// Selects labels by any combination of subset kinds, cluster names and an
// explicit label list. Present criteria are combined with `compose`:
// intersection keeps labels matching every present criterion, union keeps
// labels matching any. Within one criterion, matching is always any-of.
struct cut_selector {
    enum class composition { intersection, union_of };

    std::set<subset_kind> kinds;
    std::set<std::string> clusters;
    std::set<std::string> labels;
    composition compose = composition::intersection;

    bool empty() const { return kinds.empty() && clusters.empty() && labels.empty(); }
    std::string describe() const;
};

// Restriction of `graph` to the selected labels: clusters lose unselected
// members (empty clusters disappear), retained labels keep their full kind
// sets, cross edges survive when both endpoints do. The result carries
// provenance. Throws unknown_cluster for selector clusters the graph lacks,
// bad_argument for an empty selector.
taxonomy_graph cut(const taxonomy_graph& graph, const cut_selector& selector);

// Synonym-aware union: labels whose texts resolve to the same preferred term
// collapse onto the preferred spelling; kinds, cluster memberships and
// cluster contents merge by union. Cross edges merge by endpoint pair; equal
// weights are kept, disagreeing ones reset to unset, and an edge whose
// endpoints become cluster mates is dropped as redundant (all of which keeps
// the operation commutative). Conflicting object/action tags reset to
// untagged. Throws synonym_conflict when two distinct non-preferred variants
// of one synset meet — neither spelling can win.
taxonomy_graph graph_union(const taxonomy_graph& a, const taxonomy_graph& b,
                           const thesaurus& thesaurus);

// Synonym-aware intersection: keeps what both graphs agree on. A label
// survives when it is present (up to synonymy) in both with at least one
// common subset kind and one common cluster; kinds and cluster memberships
// are intersected, edges are kept when both graphs carry them. Strictness
// keeps the operation commutative and associative and the result valid.
taxonomy_graph graph_intersect(const taxonomy_graph& a, const taxonomy_graph& b,
                               const thesaurus& thesaurus);

// The labels of a subgraph in lexicographic order, ready for ML tooling.
std::vector<std::string> export_label_vector(const taxonomy_graph& graph);

}  // namespace taxograph
