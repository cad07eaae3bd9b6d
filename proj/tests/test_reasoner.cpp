#include <doctest.h>

#include "common.hpp"
#include "mbd/errors.hpp"
#include "mbd/reasoner.hpp"
#include "model_oracle.hpp"

using namespace mbd;
using namespace mbd::testing;

namespace {

std::vector<Sentence> sentences(std::initializer_list<const char*> texts) {
    std::vector<Sentence> out;
    for (auto t : texts) out.push_back(parse_sentence(t));
    return out;
}

const char* kAx[] = {"A SubClassOf B", "B SubClassOf E", "B SubClassOf D and not some s C",
                     "C SubClassOf not (D or E)", "D SubClassOf not B"};

std::vector<Sentence> assertions() { return sentences({"A(w)", "A(v)", "s(v,w)"}); }

struct Fixture {
    std::vector<Sentence> all;
    GroundingReasoner r;
    explicit Fixture(std::vector<Sentence> kb) : all(std::move(kb)), r(signature_of(all).individuals) {}
    static Signature signature_of(const std::vector<Sentence>& kb) {
        Signature s;
        for (const auto& x : kb) s.add(x);
        return s;
    }
    std::vector<SentenceHandle> handles(const std::vector<Sentence>& kb) {
        std::vector<SentenceHandle> h;
        for (const auto& s : kb) h.push_back(r.intern(s));
        return h;
    }
    bool consistent(const std::vector<Sentence>& kb) { return r.is_consistent(handles(kb)); }
    bool entails(const std::vector<Sentence>& kb, const std::vector<Sentence>& q) {
        return r.entails(handles(kb), handles(q));
    }
};

std::vector<Sentence> pick(std::initializer_list<int> one_based, std::vector<Sentence> extra) {
    for (int i : one_based) extra.push_back(parse_sentence(kAx[i - 1]));
    return extra;
}

}  // namespace

TEST_CASE("sample ontology with its assertions is inconsistent") {
    auto kb = pick({1, 2, 3, 4, 5}, assertions());
    Fixture f(kb);
    CHECK_FALSE(f.consistent(kb));
    CHECK_FALSE(is_consistent(ground(kb)));
}

TEST_CASE("empty knowledge base") {
    GroundTheory t = ground(std::vector<Sentence>{});
    CHECK(t.clauses.empty());
    CHECK(is_consistent(t));
}

TEST_CASE("unsatisfiable class witnessed on a fresh individual") {
    auto kb = sentences({"B SubClassOf D and not some s C", "D SubClassOf not B", "B(x)"});
    CHECK_FALSE(is_consistent(ground(kb)));
}

TEST_CASE("hand-made ground theories") {
    GroundTheory one;
    one.num_vars = 1;
    one.clauses = {{1}};
    CHECK(is_consistent(one));
    GroundTheory two = one;
    two.clauses.push_back({-1});
    CHECK_FALSE(is_consistent(two));
}

TEST_CASE("sample without ax5, positive test case folded in, is consistent") {
    auto kb = pick({1, 2, 3, 4}, assertions());
    kb.push_back(parse_sentence("B(w)"));
    Fixture f(kb);
    CHECK(f.consistent(kb));
    CHECK(ModelOracle::for_sentences(kb).consistent(kb));
}

TEST_CASE("entailments of the sample") {
    auto bw = assertions();
    bw.push_back(parse_sentence("B(w)"));
    auto kb1 = pick({1, 2, 5}, bw);
    Fixture f1(kb1);
    CHECK(f1.entails(kb1, sentences({"E(w)"})));

    auto kb2 = pick({2, 3}, bw);
    Fixture f2(kb2);
    CHECK_FALSE(f2.entails(kb2, sentences({"B(v)"})));
    CHECK(f2.entails(kb2, sentences({"(A or not A)(w)"})));
}

TEST_CASE("coherence") {
    SUBCASE("sample terminology: A and B unsatisfiable") {
        auto kb = pick({1, 2, 3, 4, 5}, {});
        Fixture f(kb);
        Coherence c = f.r.coherence(f.handles(kb));
        CHECK_FALSE(c.coherent);
        CHECK(c.unsatisfiable == std::vector<std::string>{"A", "B"});
        // reference: one anonymous element
        auto ref = ModelOracle::for_sentences(kb, {"x"}).unsatisfiable_classes(kb);
        CHECK(ref == std::set<std::string>{"A", "B"});
    }
    SUBCASE("empty terminology") {
        GroundingReasoner r({});
        CHECK(r.coherence({}).coherent);
    }
    SUBCASE("A SubClassOf B, B SubClassOf not A") {
        auto kb = sentences({"A SubClassOf B", "B SubClassOf not A"});
        Fixture f(kb);
        Coherence c = f.r.coherence(f.handles(kb));
        CHECK(c.unsatisfiable == std::vector<std::string>{"A"});
        CHECK(ModelOracle::for_sentences(kb, {"x"}).unsatisfiable_classes(kb) == std::set<std::string>{"A"});
    }
}

TEST_CASE("subsumption entailment is not closed-domain") {
    // With only w named and A(w) false, closed-domain grounding alone would
    // give A SubClassOf B for free; the anonymous individual prevents that.
    auto kb = sentences({"(not A)(w)"});
    Fixture f(kb);
    CHECK_FALSE(f.entails(kb, sentences({"A SubClassOf B"})));
    auto kb2 = sentences({"A SubClassOf C", "C SubClassOf B", "(not A)(w)"});
    Fixture f2(kb2);
    CHECK(f2.entails(kb2, sentences({"A SubClassOf B"})));
}

TEST_CASE("entailed pool") {
    auto kb = pick({1, 2, 5}, assertions());
    kb.push_back(parse_sentence("B(w)"));
    Fixture f(kb);
    auto pool = sentences({"E(w)", "B(v)", "C(w)", "D(v)"});
    auto hs = f.handles(pool);
    auto got = f.r.entailed_pool(f.handles(kb), hs);
    CHECK(got == std::vector<std::size_t>{0, 1});
    CHECK(f.r.entailed_pool(f.handles(kb), {}).empty());

    auto bad = pick({1, 2, 3, 4, 5}, assertions());
    Fixture g(bad);
    auto all = g.r.entailed_pool(g.handles(bad), g.handles(pool));
    CHECK(all.size() == pool.size());
}

TEST_CASE("call counter increments once per query") {
    auto kb = assertions();
    Fixture f(kb);
    auto h = f.handles(kb);
    auto before = f.r.calls();
    f.r.is_consistent(h);
    f.r.entails(h, f.handles(sentences({"A(w)"})));
    f.r.coherence(h);
    CHECK(f.r.calls() == before + 3);
}

TEST_CASE("unknown individuals are reported") {
    GroundingReasoner r({"w"});
    CHECK_THROWS_AS(r.intern(parse_sentence("A(zz)")), UnsupportedConstruct);
}

TEST_CASE("resource limit is distinct from a verdict") {
    GroundTheory t;
    const int P = 8, H = 7;
    auto v = [&](int p, int h) { return p * H + h + 1; };
    t.num_vars = P * H;
    for (int p = 0; p < P; ++p) {
        std::vector<int> c;
        for (int h = 0; h < H; ++h) c.push_back(v(p, h));
        t.clauses.push_back(c);
    }
    for (int h = 0; h < H; ++h)
        for (int p = 0; p < P; ++p)
            for (int q = p + 1; q < P; ++q) t.clauses.push_back({-v(p, h), -v(q, h)});
    CHECK_THROWS_AS(is_consistent(t, 3), ResourceLimit);
}

TEST_CASE("DIMACS export") {
    auto kb = sentences({"A SubClassOf B", "A(w)"});
    GroundTheory t = ground(kb);
    std::string d = to_dimacs(t);
    CHECK(d.find("p cnf " + std::to_string(t.num_vars) + " " + std::to_string(t.clauses.size())) != std::string::npos);
    std::istringstream in(d);
    std::string line;
    std::size_t clauses = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c' || line[0] == 'p') continue;
        CHECK(line.substr(line.size() - 2) == " 0");
        ++clauses;
    }
    CHECK(clauses == t.clauses.size());
}

TEST_CASE("agreement with model enumeration on assertion entailment") {
    auto kb = pick({1, 2, 3, 4}, assertions());
    Fixture f(kb);
    auto ref = ModelOracle::for_sentences(kb);
    for (const char* q : {"B(w)", "B(v)", "E(w)", "E(v)", "D(w)", "C(w)", "(not C)(w)", "(some s C)(v)", "(not D)(v)"}) {
        auto qs = sentences({q});
        CHECK_MESSAGE(f.entails(kb, qs) == ref.entails(kb, qs), q);
    }
}
