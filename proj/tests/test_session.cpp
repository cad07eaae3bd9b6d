#include <doctest.h>

#include <numeric>

#include "common.hpp"
#include "mbd/json_io.hpp"
#include "mbd/session.hpp"

using namespace mbd;
using namespace mbd::testing;

namespace {

std::string text(const Query& q) {
    std::vector<std::string> s;
    for (const auto& x : q.sentences) s.push_back(to_string(x));
    std::sort(s.begin(), s.end());
    std::string out;
    for (const auto& x : s) out += x + ";";
    return out;
}

SessionConfig config(TreeMode mode, Measure measure, std::size_t n = 9) {
    SessionConfig c;
    c.mode = mode;
    c.measure = measure;
    c.n = n;
    return c;
}

bool is_minimal_diagnosis_of(const Session& s, const AxiomSet& d) {
    auto o = default_oracle_factory()(s.problem());
    RequirementChecker c(s.problem(), *o);
    return is_minimal_diagnosis(c, d);
}

}  // namespace

TEST_CASE("two questions pin down [ax3, ax4]") {
    for (TreeMode mode : {TreeMode::Classic, TreeMode::Inverse}) {
        for (Measure m : {Measure::Entropy, Measure::SplitInHalf}) {
            CAPTURE(to_string(mode));
            CAPTURE(to_string(m));
            Session s(sample_tests(), config(mode, m, 2));
            REQUIRE(s.phase() == Phase::AwaitingAnswer);
            CHECK(sorted(s.leading()) == sorted({ax(5, {2, 3}), ax(5, {3, 4})}));
            REQUIRE(s.pending_query());
            CHECK(text(*s.pending_query()).find("E(w);") != std::string::npos);
            s.submit_answer(Answer::Yes);

            REQUIRE(s.phase() == Phase::AwaitingAnswer);
            CHECK(sorted(s.leading()) == sorted({ax(5, {3, 4}), ax(5, {1, 4, 5})}));
            CHECK(text(*s.pending_query()).find("B(v);") != std::string::npos);
            s.submit_answer(Answer::Yes);

            REQUIRE(s.phase() == Phase::Done);
            auto r = s.result();
            REQUIRE(r.size() == 1);
            CHECK(r[0].axioms == ax(5, {3, 4}));
            CHECK(r[0].probability == doctest::Approx(1.0));
            CHECK(s.complete());
            REQUIRE(s.history().size() == 2);
            CHECK(s.history()[0].step == 1);
            CHECK(s.history()[1].step == 2);
            CHECK(s.problem().positive().size() == 1 + 2);
        }
    }
}

TEST_CASE("with n = 9 all three diagnoses lead") {
    Session s(sample_tests(), config(TreeMode::Inverse, Measure::Entropy));
    CHECK(sorted(s.leading()) == sorted({ax(5, {2, 3}), ax(5, {3, 4}), ax(5, {1, 4, 5})}));
    CHECK(s.tree().stats().inv_quick_xplain_calls == 3);
}

TEST_CASE("answers become test cases") {
    Session s(sample_tests(), config(TreeMode::Inverse, Measure::Entropy));
    Query q = *s.pending_query();
    s.submit_answer(Answer::No);
    CHECK(s.problem().negative().size() == 2);
    CHECK(s.problem().negative().back().sentences.size() == q.sentences.size());
    CHECK(s.problem().version() == s.initial_problem().version() + 1);
    // No to E(w) and friends rules out every diagnosis that keeps A ⊑ B ⊑ E.
    for (const auto& d : s.leading()) CHECK((d.contains(0) || d.contains(1)));
}

TEST_CASE("probabilities stay normalized") {
    Session s(sample_tests(), config(TreeMode::Inverse, Measure::Entropy));
    auto sum = [](const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); };
    CHECK(sum(s.probabilities()) == doctest::Approx(1.0));
    CHECK(s.probabilities().size() == s.leading().size());
    s.submit_answer(Answer::Yes);
    CHECK(sum(s.probabilities()) == doctest::Approx(1.0));
}

TEST_CASE("a single diagnosis ends the session at once") {
    auto p = problem_from_text("[ontology]\nA SubClassOf not A\nB SubClassOf C\n[background]\nA(w)\n");
    Session s(p, config(TreeMode::Inverse, Measure::Entropy));
    CHECK(s.phase() == Phase::Done);
    CHECK_FALSE(s.pending_query());
    auto r = s.result();
    REQUIRE(r.size() == 1);
    CHECK(r[0].axioms == AxiomSet(2, {0}));
    CHECK_THROWS_AS(s.submit_answer(Answer::Yes), InvalidPhase);
}

TEST_CASE("indistinguishable diagnoses are reported together") {
    auto p = problem_from_text(
        "[ontology]\nA SubClassOf some r B\nA SubClassOf only r not B\n[background]\nA(w)\n");
    Session s(p, config(TreeMode::Classic, Measure::SplitInHalf));
    REQUIRE(s.phase() == Phase::Done);
    auto r = s.result();
    REQUIRE(r.size() == 2);
    CHECK(r[0].probability == doctest::Approx(0.5));
    CHECK(r[0].axioms == AxiomSet(2, {0}));
    CHECK(r[1].axioms == AxiomSet(2, {1}));
}

TEST_CASE("n = 1 stops after one diagnosis") {
    for (TreeMode mode : {TreeMode::Classic, TreeMode::Inverse}) {
        Session s(sample_tests(), config(mode, Measure::SplitInHalf, 1));
        CHECK(s.phase() == Phase::Done);
        REQUIRE(s.result().size() == 1);
        CHECK(is_minimal_diagnosis_of(s, s.result()[0].axioms));
    }
}

TEST_CASE("every target is found by both modes") {
    for (const auto& target : {ax(5, {2, 3}), ax(5, {3, 4}), ax(5, {1, 4, 5})}) {
        for (TreeMode mode : {TreeMode::Classic, TreeMode::Inverse}) {
            for (Measure m : {Measure::Entropy, Measure::SplitInHalf}) {
                Session s(sample_tests(), config(mode, m));
                ScriptedOracle user(s.initial_problem(), target);
                std::size_t asked = run_scripted(s, user);
                CHECK(asked <= 3);
                REQUIRE(s.result().size() == 1);
                CHECK(s.result()[0].axioms == target);
            }
        }
    }
}

TEST_CASE("explicit axiom priors steer the first leading order") {
    SessionConfig c = config(TreeMode::Inverse, Measure::Entropy);
    c.axiom_priors = std::vector<double>{0.9, 0.01, 0.01, 0.9, 0.9};
    Session s(sample_tests(), c);
    auto best = std::max_element(s.probabilities().begin(), s.probabilities().end()) - s.probabilities().begin();
    CHECK(s.leading()[best] == ax(5, {1, 4, 5}));
}

TEST_CASE("sessions replay deterministically") {
    auto run = [] {
        Session s(sample_tests(), config(TreeMode::Inverse, Measure::Entropy));
        s.submit_answer(Answer::No);
        while (s.phase() == Phase::AwaitingAnswer) s.submit_answer(Answer::Yes);
        return session_json(s).dump();
    };
    CHECK(run() == run());
}

TEST_CASE("scripted oracle") {
    auto p = sample_tests();
    ScriptedOracle user(p, ax(5, {2, 3}));
    CHECK(user(std::vector<Sentence>{parse_sentence("E(w)")}) == Answer::No);
    CHECK(user(std::vector<Sentence>{parse_sentence("B(w)")}) == Answer::Yes);
    CHECK(user(std::vector<Sentence>{parse_sentence("(A or not A)(v)")}) == Answer::Yes);
    ScriptedOracle other(p, ax(5, {3, 4}));
    CHECK(other(std::vector<Sentence>{parse_sentence("E(w)")}) == Answer::Yes);
}

TEST_CASE("sessions terminate under arbitrary answers") {
    for (unsigned seed = 0; seed < 8; ++seed) {
        Session s(sample_tests(), config(seed % 2 ? TreeMode::Classic : TreeMode::Inverse, Measure::Entropy));
        std::size_t guard = 0;
        while (s.phase() == Phase::AwaitingAnswer && guard++ < 20)
            s.submit_answer(((seed >> (guard % 3)) & 1u) ? Answer::Yes : Answer::No);
        CHECK(s.phase() == Phase::Done);
    }
}
