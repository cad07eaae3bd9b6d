#include <doctest.h>

#include <cmath>

#include "common.hpp"
#include "mbd/direct.hpp"

using namespace mbd;
using namespace mbd::testing;

namespace {

AxiomSet diagnosis_of(const DirectOutcome& o) {
    REQUIRE(std::holds_alternative<Diagnosis>(o));
    return std::get<Diagnosis>(o).axioms;
}

}  // namespace

TEST_CASE("sample with test cases") {
    auto p = sample_tests();
    auto o = default_oracle_factory()(p);
    RequirementChecker c(p, *o);
    DirectTrace trace;
    CHECK(diagnosis_of(inv_quick_xplain(c, &trace)) == ax(5, {2, 3}));
    REQUIRE_FALSE(trace.splits.empty());
    CHECK(trace.splits[0].first == ax(5, {1, 2}));
    CHECK(trace.splits[0].second == ax(5, {3, 4, 5}));
    // second split works on {ax3, ax4, ax5}
    REQUIRE(trace.splits.size() >= 2);
    CHECK(trace.splits[1].first == ax(5, {3}));
    CHECK(trace.splits[1].second == ax(5, {4, 5}));
    CHECK(trace.max_depth <= 2 * static_cast<std::size_t>(std::ceil(std::log2(5.0))) + 2);
}

TEST_CASE("same diagnosis when applied twice") {
    auto p = sample_tests();
    auto o = default_oracle_factory()(p);
    RequirementChecker c(p, *o);
    CHECK(diagnosis_of(inv_quick_xplain(c)) == diagnosis_of(inv_quick_xplain(c)));
}

TEST_CASE("trusting ax3 yields [ax1, ax4, ax5]") {
    auto p = sample_tests();
    auto o = default_oracle_factory()(p);
    RequirementChecker c(p, *o);
    CHECK(diagnosis_of(inv_quick_xplain(c, ax(5, {3}))) == ax(5, {1, 4, 5}));

    // same result through an enlarged background
    auto moved = p.ontology()[2].sentence;
    KnowledgeBase onto;
    for (const auto& a : p.ontology().axioms())
        if (a.id != 2) onto.add(a.sentence);
    KnowledgeBase bg = p.background();
    bg.add(moved);
    auto q = build_problem(onto, bg, p.positive(), p.negative());
    auto o2 = default_oracle_factory()(q);
    RequirementChecker c2(q, *o2);
    // ids shift down by one after removing ax3: ax1, ax4, ax5 -> 0, 2, 3
    CHECK(diagnosis_of(inv_quick_xplain(c2)) == AxiomSet(4, {0, 2, 3}));
}

TEST_CASE("guards") {
    SUBCASE("consistent ontology") {
        KnowledgeBase o;
        o.add(parse_sentence("A SubClassOf B"));
        auto p = build_problem(o, {}, {}, {});
        auto orc = default_oracle_factory()(p);
        RequirementChecker c(p, *orc);
        CHECK(std::holds_alternative<Consistent>(inv_quick_xplain(c)));
    }
    SUBCASE("trusted axioms already violate the requirements") {
        auto p = sample_tests();
        auto orc = default_oracle_factory()(p);
        RequirementChecker c(p, *orc);
        CHECK(std::holds_alternative<InconsistentRequirements>(inv_quick_xplain(c, ax(5, {1, 3}))));
    }
    SUBCASE("background alone violates the requirements") {
        KnowledgeBase b;
        b.add(parse_sentence("A(w)"));
        b.add(parse_sentence("(not A)(w)"));
        auto p = assemble_problem({}, b, {}, {});
        auto orc = default_oracle_factory()(p);
        RequirementChecker c(p, *orc);
        CHECK(std::holds_alternative<InconsistentRequirements>(inv_quick_xplain(c)));
    }
}

TEST_CASE("single suspect") {
    KnowledgeBase o, b;
    o.add(parse_sentence("A SubClassOf not A"));
    b.add(parse_sentence("A(w)"));
    auto p = build_problem(o, b, {}, {});
    auto orc = default_oracle_factory()(p);
    RequirementChecker c(p, *orc);
    DirectTrace t;
    CHECK(diagnosis_of(inv_quick_xplain(c, &t)) == AxiomSet(1, {0}));
    CHECK(t.splits.empty());
}
