#include <doctest.h>

#include "taxograph/cuts.hpp"
#include "taxograph/errors.hpp"
#include "taxograph/graph.hpp"
#include "support.hpp"

using namespace taxograph;
using namespace taxograph::testing;

namespace {

const thesaurus& thes() {
    static const thesaurus instance{{synset{"bike", {"bicycle", "cycle"}, ""},
                                     synset{"metro", {"subway", "tube"}, ""}}};
    return instance;
}

taxonomy_graph insert(const taxonomy_graph& graph, const char* text, const char* cluster,
                      std::set<subset_kind> kinds) {
    return insert_label(graph, label{text}, cluster, kinds, thes()).first;
}

// transit: {tram(ev), bus(ev,env)}; nature: {forest(env), bus}; edge tram--forest.
taxonomy_graph fixture() {
    taxonomy_graph g;
    g = insert(g, "tram", "transit", {subset_kind::event});
    g = insert(g, "bus", "transit", {subset_kind::event});
    g = insert(g, "bus", "nature", {subset_kind::environment});
    g = insert(g, "forest", "nature", {subset_kind::environment});
    return taxonomy_graph::from_parts(g.labels(), g.clusters(), g.memberships(),
                                      {{"forest", "tram", 2.0}});
}

}  // namespace

TEST_SUITE("cuts") {

TEST_CASE("cut by kind keeps full kind sets and surviving edges") {
    taxonomy_graph sub = cut(fixture(), {.kinds = {subset_kind::environment}});
    CHECK(sub.label_texts() == std::set<std::string>{"bus", "forest"});
    // bus keeps its event kind even though the cut selected by environment
    CHECK(sub.memberships().at("bus") ==
          std::set<subset_kind>{subset_kind::environment, subset_kind::event});
    CHECK(sub.cross_edges().empty());  // tram is gone, so the edge is too
    CHECK(sub.clusters().at("nature") == std::set<std::string>{"bus", "forest"});
    CHECK(sub.clusters().at("transit") == std::set<std::string>{"bus"});
}

TEST_CASE("cut by cluster trims other clusters and keeps internal edges") {
    taxonomy_graph sub = cut(fixture(), {.clusters = {"transit"}});
    CHECK(sub.label_texts() == std::set<std::string>{"bus", "tram"});
    // bus is shared, so a sliver of the other cluster legitimately survives
    CHECK(sub.clusters().at("nature") == std::set<std::string>{"bus"});
    taxonomy_graph both = cut(fixture(), {.clusters = {"transit", "nature"},
                                          .compose = cut_selector::composition::union_of});
    CHECK(both == fixture());
}

TEST_CASE("cut by explicit labels") {
    taxonomy_graph sub = cut(fixture(), {.labels = {"tram", "forest"}});
    CHECK(sub.label_texts() == std::set<std::string>{"forest", "tram"});
    REQUIRE(sub.cross_edges().size() == 1);
    CHECK(sub.cross_edges().front().weight == 2.0);
}

TEST_CASE("intersection composition requires every criterion") {
    taxonomy_graph sub = cut(fixture(), {.kinds = {subset_kind::event},
                                         .clusters = {"nature"}});
    CHECK(sub.label_texts() == std::set<std::string>{"bus"});
    taxonomy_graph any = cut(fixture(), {.kinds = {subset_kind::event},
                                         .clusters = {"nature"},
                                         .compose = cut_selector::composition::union_of});
    CHECK(any.label_texts() == std::set<std::string>{"bus", "forest", "tram"});
}

TEST_CASE("cut records provenance but equality ignores it") {
    taxonomy_graph sub = cut(fixture(), {.clusters = {"transit"}});
    REQUIRE(sub.origin().has_value());
    CHECK(sub.origin()->selector.find("transit") != std::string::npos);
}

TEST_CASE("cut rejects an empty or unknown selector") {
    CHECK_THROWS_AS(cut(fixture(), {}), error);
    try {
        cut(fixture(), {.clusters = {"nowhere"}});
        FAIL("expected an error");
    } catch (const error& failure) {
        CHECK(failure.code() == errc::unknown_cluster);
    }
    // Unknown labels and empty results are fine: an empty subgraph is valid.
    CHECK(cut(fixture(), {.labels = {"ghost"}}).size() == 0);
}

TEST_CASE("cut results always validate") {
    rng_t rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        taxonomy_graph graph = random_graph(rng, 20, 5);
        cut_selector selector;
        selector.kinds = random_kinds(rng);
        if (chance(rng, 0.5)) {
            selector.compose = cut_selector::composition::union_of;
        }
        taxonomy_graph sub = cut(graph, selector);
        CHECK(validate(sub, synthetic_thesaurus()).empty());
    }
}

TEST_CASE("union merges synonym spellings onto the preferred term") {
    taxonomy_graph a = insert({}, "bicycle", "transit", {subset_kind::event});
    taxonomy_graph b = insert({}, "bike", "sport", {subset_kind::context});
    taxonomy_graph merged = graph_union(a, b, thes());
    CHECK(merged.size() == 1);
    CHECK(merged.contains("bike"));
    CHECK(merged.memberships().at("bike") ==
          std::set<subset_kind>{subset_kind::context, subset_kind::event});
    CHECK(merged.clusters().at("transit") == std::set<std::string>{"bike"});
    CHECK(merged.clusters().at("sport") == std::set<std::string>{"bike"});
}

TEST_CASE("union keeps equal weights and unsets disagreeing ones") {
    auto build = [](double weight) {
        taxonomy_graph g;
        g = insert(g, "tram", "transit", {subset_kind::event});
        g = insert(g, "forest", "nature", {subset_kind::environment});
        return taxonomy_graph::from_parts(g.labels(), g.clusters(), g.memberships(),
                                          {{"forest", "tram", weight}});
    };
    taxonomy_graph same = graph_union(build(2.0), build(2.0), thes());
    REQUIRE(same.cross_edges().size() == 1);
    CHECK(same.cross_edges().front().weight == 2.0);
    taxonomy_graph differs = graph_union(build(2.0), build(3.0), thes());
    REQUIRE(differs.cross_edges().size() == 1);
    CHECK_FALSE(differs.cross_edges().front().weight.has_value());
}

TEST_CASE("union drops an edge made redundant by a cluster merge") {
    // a: tram and forest in different clusters, explicitly connected.
    taxonomy_graph a = insert(insert({}, "tram", "transit", {subset_kind::event}),
                              "forest", "nature", {subset_kind::environment});
    a = taxonomy_graph::from_parts(a.labels(), a.clusters(), a.memberships(),
                                   {{"forest", "tram", std::nullopt}});
    // b: the same two labels share a cluster, making them adjacent already.
    taxonomy_graph b = insert(insert({}, "tram", "both", {subset_kind::event}),
                              "forest", "both", {subset_kind::environment});
    taxonomy_graph merged = graph_union(a, b, thes());
    CHECK(merged.cross_edges().empty());
    CHECK(validate(merged, thes()).empty());
}

TEST_CASE("union resets contradictory tags to untagged") {
    taxonomy_graph a = insert_label({}, label{"glass", label_kind::object}, "kitchen",
                                    {subset_kind::event}, thes())
                           .first;
    taxonomy_graph b = insert_label({}, label{"glass", label_kind::action}, "kitchen",
                                    {subset_kind::event}, thes())
                           .first;
    CHECK(graph_union(a, b, thes()).labels().at("glass").kind == label_kind::untagged);
    CHECK(graph_union(a, b, thes()) == graph_union(b, a, thes()));
}

TEST_CASE("union of two non-preferred variants of one synset is a conflict") {
    taxonomy_graph a = taxonomy_graph::from_parts(
        {{"bicycle", label{"bicycle"}}}, {{"transit", {"bicycle"}}},
        {{"bicycle", {subset_kind::event}}}, {});
    taxonomy_graph b = taxonomy_graph::from_parts(
        {{"cycle", label{"cycle"}}}, {{"transit", {"cycle"}}},
        {{"cycle", {subset_kind::event}}}, {});
    try {
        graph_union(a, b, thes());
        FAIL("expected an error");
    } catch (const error& failure) {
        CHECK(failure.code() == errc::synonym_conflict);
    }
}

TEST_CASE("intersect keeps common labels up to synonymy") {
    taxonomy_graph a = insert({}, "bicycle", "transit", {subset_kind::event});
    a = insert(a, "tram", "transit", {subset_kind::event});
    taxonomy_graph b = insert({}, "bike", "transit", {subset_kind::event});
    b = insert(b, "forest", "nature", {subset_kind::environment});
    taxonomy_graph common = graph_intersect(a, b, thes());
    CHECK(common.label_texts() == std::set<std::string>{"bike"});
    CHECK(common.clusters().at("transit") == std::set<std::string>{"bike"});
}

TEST_CASE("intersect keeps only agreed kinds and clusters") {
    taxonomy_graph a = insert({}, "tram", "transit",
                              {subset_kind::event, subset_kind::environment});
    a = insert(a, "tram", "rail", {});
    taxonomy_graph b = insert({}, "tram", "transit", {subset_kind::event});
    taxonomy_graph common = graph_intersect(a, b, thes());
    REQUIRE(common.contains("tram"));
    CHECK(common.memberships().at("tram") == std::set<subset_kind>{subset_kind::event});
    CHECK(common.clusters().contains("transit"));
    CHECK_FALSE(common.clusters().contains("rail"));
    CHECK(validate(common, thes()).empty());
}

TEST_CASE("intersect drops labels the graphs place incompatibly") {
    taxonomy_graph a = insert({}, "tram", "transit", {subset_kind::event});
    taxonomy_graph b = insert({}, "tram", "rail", {subset_kind::event});
    CHECK(graph_intersect(a, b, thes()).size() == 0);  // no common cluster
    taxonomy_graph c = insert({}, "tram", "transit", {subset_kind::environment});
    CHECK(graph_intersect(a, c, thes()).size() == 0);  // no common kind
}

TEST_CASE("union and intersect are idempotent and commutative on random graphs") {
    rng_t rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        taxonomy_graph a = random_graph(rng, 12, 4);
        taxonomy_graph b = random_graph(rng, 12, 4);
        CHECK(graph_union(a, a, synthetic_thesaurus()) == a);
        CHECK(graph_intersect(a, a, synthetic_thesaurus()) == a);
        CHECK(graph_union(a, b, synthetic_thesaurus()) ==
              graph_union(b, a, synthetic_thesaurus()));
        CHECK(graph_intersect(a, b, synthetic_thesaurus()) ==
              graph_intersect(b, a, synthetic_thesaurus()));
    }
}

TEST_CASE("export_label_vector is sorted and complete") {
    std::vector<std::string> texts = export_label_vector(fixture());
    CHECK(texts == std::vector<std::string>{"bus", "forest", "tram"});
}

}  // TEST_SUITE
