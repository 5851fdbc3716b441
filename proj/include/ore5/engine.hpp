#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ore5/embedding.hpp"
#include "ore5/graph.hpp"

namespace ore5 {

struct EngineConfig {
    double eta = 0.15;   // host triangle-block extremality threshold
    double mu = 0.3;     // case-2/3 block-density thresholds
    double nu = 0.1;     // guest triangle-cover extremality threshold
    double alpha = 0.03; // matching-dichotomy degree slack
    std::uint64_t seed = 0;
    bool force = false; // skip the degree-hypothesis checks
    long long node_budget = 4'000'000;
};

// Route values: "theta<=3", "theta=4", "case1", "case2", "case3",
// "near-extreme", "guided", plus "fallback" (exhaustive search was the only
// applicable route) and "absent" (the exhaustive search proved there is no
// embedding). used_fallback marks that the exhaustive search finished the job
// after the named route gave up.
struct EngineReport {
    std::string route;
    bool used_fallback = false;
    bool verified = false;
    std::vector<std::string> notes;
    double millis = 0;
};

struct EngineResult {
    std::optional<Embedding> emb;
    EngineReport report;
};

// Exhaustive injective-homomorphism search, most-constrained-first with
// degree pruning. Complete: nullopt means no embedding exists. Intended for
// small orders (the acceptance corpus uses n <= 9) but valid at any size.
std::optional<Embedding> oracle_embed(const Graph& h, const Graph& g);

// Dispatching embedder: picks the route from the guest's Ore degree and the
// triangle-extremality of both sides, falls back to exhaustive search when a
// route fails, and verifies every embedding before returning it. nullopt
// only when even the exhaustive search proves there is no embedding.
EngineResult embed(const Graph& h, const Graph& g, const EngineConfig& cfg = {});

} // namespace ore5
