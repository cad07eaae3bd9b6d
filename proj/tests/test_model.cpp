#include <doctest.h>

#include "common.hpp"
#include "mbd/errors.hpp"
#include "model_oracle.hpp"

using namespace mbd;
using namespace mbd::testing;

TEST_CASE("build_problem") {
    SUBCASE("the sample is a valid instance") {
        auto p = sample(false);
        CHECK(p.size() == 5);
        CHECK(p.background().size() == 3);
        CHECK(p.background_prime().size() == 3);
    }
    SUBCASE("empty instance") {
        auto p = build_problem({}, {}, {}, {});
        CHECK(p.size() == 0);
    }
    SUBCASE("background plus positive test case entails a negative one") {
        KnowledgeBase b;
        b.add(parse_sentence("A SubClassOf B"));
        std::vector<TestCase> pos{{{parse_sentence("A(w)")}, Polarity::Positive}};
        std::vector<TestCase> neg{{{parse_sentence("B(w)")}, Polarity::Negative}};
        CHECK_THROWS_AS(build_problem({}, b, pos, neg), NotDiagnosable);
    }
    SUBCASE("duplicate between ontology and background") {
        KnowledgeBase o, b;
        o.add(parse_sentence("A SubClassOf B"));
        b.add(parse_sentence("A SubClassOf B"));
        CHECK_THROWS_AS(build_problem(o, b, {}, {}), DuplicateAxiom);
    }
    SUBCASE("duplicate inside one knowledge base") {
        KnowledgeBase o;
        o.add(parse_sentence("A SubClassOf B"));
        CHECK_THROWS_AS(o.add(parse_sentence("A SubClassOf B")), DuplicateAxiom);
    }
    SUBCASE("same test case in P and N") {
        std::vector<TestCase> pos{{{parse_sentence("A(w)")}, Polarity::Positive}};
        std::vector<TestCase> neg{{{parse_sentence("A(w)")}, Polarity::Negative}};
        CHECK_THROWS_AS(assemble_problem({}, {}, pos, neg), Error);
    }
}

TEST_CASE("signature covers every name") {
    auto p = sample_tests();
    const auto& sig = p.signature();
    CHECK(sig.classes == std::set<std::string>{"A", "B", "C", "D", "E"});
    CHECK(sig.roles == std::set<std::string>{"s"});
    CHECK(sig.individuals == std::set<std::string>{"v", "w"});
}

TEST_CASE("diagnosis validity on the test-case instance") {
    auto p = sample_tests();
    auto oracle = default_oracle_factory()(p);
    RequirementChecker c(p, *oracle);
    CHECK(is_valid_diagnosis(c, ax(5, {3, 4})));
    CHECK_FALSE(is_valid_diagnosis(c, ax(5, {3})));
    CHECK(is_valid_diagnosis(c, p.all_axioms()));
    CHECK(is_minimal_diagnosis(c, ax(5, {3, 4})));
    CHECK_FALSE(is_minimal_diagnosis(c, ax(5, {1, 3, 4})));
    CHECK(is_minimal_diagnosis(c, ax(5, {1, 4, 5})));
}

TEST_CASE("[ax1, ax4, ax5] is a minimal diagnosis by model enumeration") {
    // Reference check without the grounding reasoner: O \ D ∪ B′ has a model
    // and admits a model of C(w); every proper subset of D fails.
    auto p = sample_tests();
    auto base = p.background_prime();
    auto ref = ModelOracle::for_sentences([&] {
        auto all = base;
        for (const auto& a : p.ontology().axioms()) all.push_back(a.sentence);
        return all;
    }());
    const auto neg = p.negative()[0].sentences;
    auto valid = [&](const AxiomSet& d) {
        auto kb = base;
        for (const auto& a : p.ontology().axioms())
            if (!d.contains(a.id)) kb.push_back(a.sentence);
        return ref.consistent(kb) && !ref.entails(kb, neg);
    };
    auto d = ax(5, {1, 4, 5});
    CHECK(valid(d));
    for (AxiomId id : d.ids()) {
        auto smaller = d;
        smaller.erase(id);
        CHECK_FALSE(valid(smaller));
    }
}

TEST_CASE("verify_requirements") {
    auto p = sample_tests();
    auto oracle = default_oracle_factory()(p);
    std::vector<SentenceHandle> bg, onto;
    for (const auto& s : p.background_prime()) bg.push_back(oracle->intern(s));
    for (const auto& a : p.ontology().axioms()) onto.push_back(oracle->intern(a.sentence));
    std::vector<std::vector<SentenceHandle>> neg;
    for (const auto& n : p.negative()) {
        std::vector<SentenceHandle> h;
        for (const auto& s : n.sentences) h.push_back(oracle->intern(s));
        neg.push_back(h);
    }
    CHECK(verify_requirements(*oracle, bg, ax(5, {3, 4}), onto, neg, false));
    CHECK_FALSE(verify_requirements(*oracle, bg, AxiomSet(5), onto, neg, false));
    CHECK(verify_requirements(*oracle, bg, p.all_axioms(), onto, neg, false));
}

TEST_CASE("memoized verdicts equal uncached ones") {
    auto p = sample_tests();
    auto o1 = default_oracle_factory()(p);
    auto o2 = default_oracle_factory()(p);
    RequirementChecker cached(p, *o1), plain(p, *o2);
    plain.set_memoize(false);
    for (std::uint32_t m = 0; m < 32; ++m) {
        AxiomSet s(5);
        for (int i = 0; i < 5; ++i)
            if ((m >> i) & 1u) s.insert(static_cast<AxiomId>(i));
        bool a = cached.holds(s);
        CHECK(cached.holds(s) == a);
        CHECK(plain.holds(s) == a);
    }
    CHECK(cached.evaluations() == 32);
    CHECK(cached.requests() == 64);
    CHECK(plain.evaluations() == 32);
}

TEST_CASE("acquiring a test case bumps the version") {
    auto p = sample(false);
    auto q = p.with_test_case({{parse_sentence("B(w)")}, Polarity::Positive});
    CHECK(q.version() == p.version() + 1);
    CHECK(q.positive().size() == 1);
    CHECK(q.background_prime().size() == 4);
    CHECK(p.positive().empty());
    CHECK_THROWS_AS(q.with_test_case({{parse_sentence("B(w)")}, Polarity::Negative}), Error);
}

TEST_CASE("format_axioms") {
    CHECK(format_axioms(ax(5, {1, 3})) == "[ax1, ax3]");
    CHECK(format_axioms(AxiomSet(5)) == "[]");
}

TEST_CASE("AxiomSet ordering is cardinality first") {
    CHECK(ax(5, {5}) < ax(5, {1, 2}));
    CHECK(ax(5, {1, 3}) < ax(5, {2, 3}));
    CHECK(ax(70, {65}).contains(64));
}
