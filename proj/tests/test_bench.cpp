#include <doctest.h>

#include "common.hpp"
#include "mbd/bench.hpp"
#include "mbd/json_io.hpp"

using namespace mbd;
using namespace mbd::testing;

TEST_CASE("bench spec parsing") {
    auto s = parse_bench_spec("m=300,conflicts=12,size=3,seed=4,overlap=0.5,n=1+9,modes=inverse,nodes=500,seconds=2;m=50");
    REQUIRE(s.instances.size() == 2);
    CHECK(s.instances[0].axioms == 300);
    CHECK(s.instances[0].conflicts == 12);
    CHECK(s.instances[0].max_conflict_size == 3);
    CHECK(s.instances[0].seed == 4);
    CHECK(s.instances[0].overlap == doctest::Approx(0.5));
    CHECK(s.instances[1].axioms == 50);
    CHECK(s.ns == std::vector<std::size_t>{1, 9});
    CHECK(s.modes == std::vector<TreeMode>{TreeMode::Inverse});
    CHECK(s.limits.max_nodes == 500);
    CHECK(s.limits.max_seconds == doctest::Approx(2.0));

    CHECK(parse_bench_spec("").instances.empty());
    CHECK(run_benchmark(parse_bench_spec("")).empty());
    CHECK_THROWS_AS(parse_bench_spec("m=abc"), Error);
    CHECK_THROWS_AS(parse_bench_spec("colour=blue"), Error);
}

TEST_CASE("exhausted runs report equal families") {
    auto rows = run_benchmark(parse_bench_spec("m=30,conflicts=3,size=3,seed=3,n=1000"));
    REQUIRE(rows.size() == 2);
    for (const auto& r : rows) {
        CHECK(r.complete);
        CHECK(r.verified);
        CHECK(r.families_equal == "yes");
    }
    CHECK(rows[0].diagnoses == rows[1].diagnoses);
}

TEST_CASE("one diagnosis costs fewer checks in inverse mode") {
    auto rows = run_benchmark(parse_bench_spec("m=400,conflicts=20,size=4,seed=7,n=1"));
    REQUIRE(rows.size() == 2);
    const BenchRow& classic = rows[0].mode == TreeMode::Classic ? rows[0] : rows[1];
    const BenchRow& inverse = rows[0].mode == TreeMode::Inverse ? rows[0] : rows[1];
    CHECK(inverse.decision_calls < classic.decision_calls);
    CHECK(inverse.direct_calls == 1);
    CHECK(classic.families_equal == "na");
}

TEST_CASE("csv has a header even when empty") {
    std::string csv = to_csv({});
    CHECK(csv.rfind("instance,axioms,conflicts,mode,n,", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1);
}

TEST_CASE("session config from json") {
    bool coh = false;
    auto c = config_from_json(Json{{"mode", "classic"}, {"n", 4}, {"measure", "split"}, {"singletons", true},
                                   {"coherency", true}, {"max_nodes", 77}},
                              &coh);
    CHECK(c.mode == TreeMode::Classic);
    CHECK(c.n == 4);
    CHECK(c.measure == Measure::SplitInHalf);
    CHECK(c.queries.singletons_only);
    CHECK(coh);
    CHECK(c.tree_limits.max_nodes == 77);

    auto d = config_from_json(Json::object());
    CHECK(d.mode == TreeMode::Inverse);
    CHECK(d.n == 9);
    CHECK(d.measure == Measure::Entropy);
    CHECK_THROWS_AS(config_from_json(Json{{"measure", "vibes"}}), Error);
    CHECK_THROWS_AS(answer_from_string("perhaps"), Error);
    CHECK(answer_from_string("yes") == Answer::Yes);
    CHECK(answer_from_string("no") == Answer::No);
}

TEST_CASE("config json round trip") {
    SessionConfig c;
    c.mode = TreeMode::Classic;
    c.n = 3;
    bool coh = false;
    auto back = config_from_json(config_json(c, true), &coh);
    CHECK(back.mode == c.mode);
    CHECK(back.n == c.n);
    CHECK(back.measure == c.measure);
    CHECK(coh);
}
