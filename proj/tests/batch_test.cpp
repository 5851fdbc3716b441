#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <string>

#include "ore5/batch.hpp"
#include "ore5/engine.hpp"
#include "ore5/generators.hpp"

using namespace ore5;

#ifndef ORE5_CORPUS_DIR
#error "ORE5_CORPUS_DIR must point at the corpus directory"
#endif

TEST_CASE("corpus parser reads groups, weights, and per-shape rounding") {
    const std::string text = R"json({
        "name": "parse-check",
        "groups": [
            {
                "count": 2, "n": 9, "seed0": 5,
                "guest": {"weights": {"triangle": 2, "star4": 0},
                          "triangle_target": 0.5},
                "host": {"shape": "tight-ch", "repair": true}
            },
            {
                "count": 1, "n": [10, 16], "seed0": 50, "force": true,
                "host": {"shape": "tight-bipartite", "min_degree": 4,
                         "noise": 0.2, "planted": 1}
            }
        ]
    })json";
    Corpus c = corpus_from_json_text(text);
    CHECK(c.name == "parse-check");
    REQUIRE(c.instances.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(c.instances[i].id == i);

    const CorpusInstance& a = c.instances[0];
    CHECK(a.seed == 5);
    CHECK(c.instances[1].seed == 6);
    CHECK_FALSE(a.force);
    CHECK(a.host.shape == HostShape::TightCH);
    CHECK(a.host.repair_to_conforming);
    CHECK(a.host.n == 9);
    CHECK(a.guest.n == 9);
    CHECK(a.guest.w_triangle == 2.0);
    CHECK(a.guest.w_star4 == 0.0);
    CHECK(a.guest.w_edge == 1.0); // unmentioned weights keep their default
    CHECK(a.guest.triangle_target == 0.5);
    CHECK_FALSE(a.guest.pendant_on_triangle);

    const CorpusInstance& b = c.instances[2];
    CHECK(b.seed == 50);
    CHECK(b.force);
    CHECK(b.host.shape == HostShape::TightBipartite);
    CHECK(b.host.min_degree == 4);
    CHECK(b.host.noise == 0.2);
    CHECK(b.host.planted_severe == 1);
    CHECK(b.host.n % 2 == 0); // rounded to the family's divisibility
    CHECK(b.host.n >= 10);
    CHECK(b.host.n <= 16);
    CHECK(b.guest.n == b.host.n);
}

TEST_CASE("corpus parser fills defaults and rejects bad documents") {
    Corpus c = corpus_from_json_text(R"json({"groups": [{}]})json");
    CHECK(c.name == "corpus");
    REQUIRE(c.instances.size() == 1);
    const CorpusInstance& i = c.instances[0];
    CHECK(i.seed == 0);
    CHECK_FALSE(i.force);
    CHECK(i.host.n == 30);
    CHECK(i.host.shape == HostShape::RandomMinDegree);
    CHECK(i.host.min_degree == -1);
    CHECK(i.host.noise == 0.1);
    CHECK(i.host.planted_severe == 0);
    CHECK_FALSE(i.host.repair_to_conforming);
    CHECK(i.guest.n == 30);
    CHECK(i.guest.w_claw == 1.0);
    CHECK(i.guest.triangle_target == -1.0);
    CHECK(i.guest.allow_isolated);

    CHECK_THROWS_AS(corpus_from_json_text(R"json({"groups": [{"host": {"shape": "bogus"}}]})json"),
                    std::invalid_argument);
    CHECK_THROWS_AS(corpus_from_json_text(R"json({"groups": [{"n": [5, 3]}]})json"),
                    std::invalid_argument);
    CHECK_THROWS_AS(corpus_from_json_text("{not json"), std::exception);
}

TEST_CASE("corpus files load from disk") {
    CHECK_THROWS_AS(load_corpus_file("/no/such/corpus.json"), std::runtime_error);
    Corpus c = load_corpus_file(std::string(ORE5_CORPUS_DIR) + "/smoke.json");
    CHECK(c.name == "smoke");
    REQUIRE(c.instances.size() == 20);
    for (int i = 0; i < 12; ++i) {
        CHECK(c.instances[i].host.shape == HostShape::RandomMinDegree);
        CHECK(c.instances[i].host.n >= 9);
        CHECK(c.instances[i].host.n <= 15);
    }
    for (int i = 12; i < 16; ++i) {
        CHECK(c.instances[i].host.shape == HostShape::TightCH);
        CHECK(c.instances[i].host.repair_to_conforming);
        CHECK(c.instances[i].host.n % 3 == 0);
    }
    for (int i = 16; i < 20; ++i) {
        CHECK(c.instances[i].host.shape == HostShape::TightBipartite);
        CHECK(c.instances[i].host.n % 2 == 0);
    }
}

TEST_CASE("smoke corpus embeds cleanly and is worker-count independent") {
    Corpus c = load_corpus_file(std::string(ORE5_CORPUS_DIR) + "/smoke.json");
    EngineConfig cfg;
    BatchSummary s1 = batch_run(c, cfg, 1);
    CHECK(s1.total == 20);
    REQUIRE(s1.results.size() == 20);
    CHECK(s1.embedded == 20);
    CHECK(s1.verified == 20);
    CHECK(s1.violations == 0);
    CHECK(s1.soundness_failures == 0);
    CHECK(summary_exit_code(s1) == 0);
    for (int i = 0; i < 20; ++i) {
        CHECK(s1.results[i].id == i);
        CHECK_FALSE(s1.results[i].route.empty());
        CHECK(s1.results[i].shape == host_shape_name(c.instances[i].host.shape));
    }

    BatchSummary s2 = batch_run(c, cfg, 2);
    for (int i = 0; i < 20; ++i) {
        CHECK(s1.results[i].route == s2.results[i].route);
        CHECK(s1.results[i].success == s2.results[i].success);
        CHECK(s1.results[i].verified == s2.results[i].verified);
        CHECK(s1.results[i].used_fallback == s2.results[i].used_fallback);
    }
}

TEST_CASE("hypothesis violations are recorded, and force clears them") {
    // Tight three-class hosts without repair sit one degree short.
    const std::string tmpl = R"json({
        "groups": [{
            "count": 1, "n": 9, "seed0": 77, FORCE
            "guest": {"weights": {"edge": 1, "p2": 0, "path": 0, "cycle": 0,
                                  "triangle": 0, "claw": 0, "star4": 0}},
            "host": {"shape": "tight-ch"}
        }]
    })json";
    auto with_force = [&](const std::string& f) {
        std::string t = tmpl;
        return corpus_from_json_text(t.replace(t.find("FORCE"), 5, f));
    };
    EngineConfig cfg;
    BatchSummary rejected = batch_run(with_force(""), cfg, 1);
    CHECK(rejected.violations == 1);
    CHECK(rejected.embedded == 0);
    CHECK(rejected.soundness_failures == 0);
    CHECK(summary_exit_code(rejected) == 2);
    CHECK_FALSE(rejected.results[0].note.empty());

    BatchSummary forced = batch_run(with_force(R"("force": true,)"), cfg, 1);
    CHECK(forced.violations == 0);
    CHECK(forced.embedded == 1);
    CHECK(forced.verified == 1);
    CHECK(summary_exit_code(forced) == 0);
}

TEST_CASE("summaries format aggregates and per-instance lines") {
    BatchSummary s;
    s.results.resize(2);
    s.results[0] = {0, 9, "tight-ch", "case1", false, true, true, false, "", 1.5};
    s.results[1] = {1, 12, "random-min-degree", "", false, false, false, true,
                    "min degree too low\nsecond line", 0.0};
    s.total = 2;
    s.embedded = 1;
    s.verified = 1;
    s.violations = 1;
    s.total_millis = 1.5;
    s.median_millis = 1.5;

    CHECK(summary_table(s) ==
          "instances: 2  embedded: 1  verified: 1  fallbacks: 0  violations: 1"
          "  soundness failures: 0\n"
          "time: total 1 ms, median 1 ms\n"
          "routes:  -=1  case1=1\n");
    CHECK(summary_lines(s) ==
          "id=0 n=9 shape=tight-ch route=case1 fallback=0 success=1 verified=1"
          " violation=0 ms=1.5\n"
          "id=1 n=12 shape=random-min-degree route=- fallback=0 success=0"
          " verified=0 violation=1 ms=0 note=\"min degree too low second line\"\n");

    CHECK(summary_exit_code(s) == 2);
    s.soundness_failures = 1;
    CHECK(summary_exit_code(s) == 1);
    s.soundness_failures = 0;
    s.violations = 0;
    CHECK(summary_exit_code(s) == 0);
}
