#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ore5/engine.hpp"
#include "ore5/generators.hpp"

namespace ore5 {

// One concrete guest/host pair recipe. Guest and host share the order; the
// host generation seed is derived from `seed` so the pair is reproducible
// from the instance alone.
struct CorpusInstance {
    int id = 0;
    GuestProfile guest;
    HostProfile host;
    std::uint64_t seed = 0;
    bool force = false; // run with hypothesis checks disabled
};

struct Corpus {
    std::string name;
    std::vector<CorpusInstance> instances;
};

// Corpus documents are JSON: {"name": ..., "groups": [{"count": N,
// "n": X or [lo, hi], "seed0": S, "force": bool, "guest": {"weights":
// {"edge"|"p2"|"path"|"cycle"|"triangle"|"claw"|"star4": w, ...},
// "triangle_target": f, "pendant": bool}, "host": {"shape": name,
// "min_degree": d, "noise": x, "planted": p, "repair": bool}}]}.
// Group t-th instance uses seed seed0 + t and draws its order from [lo, hi]
// (rounded down to the divisibility the shape needs).
Corpus corpus_from_json_text(const std::string& text);
Corpus load_corpus_file(const std::string& path);

struct InstanceResult {
    int id = 0;
    int n = 0;
    std::string shape;
    std::string route;
    bool used_fallback = false;
    bool success = false;              // embedding produced
    bool verified = false;             // and verified
    bool hypothesis_violation = false; // inputs rejected by the degree checks
    std::string note;
    double millis = 0;
};

struct BatchSummary {
    std::vector<InstanceResult> results; // ordered by instance id
    int total = 0, embedded = 0, verified = 0, fallbacks = 0;
    int violations = 0, soundness_failures = 0;
    double total_millis = 0, median_millis = 0;
};

// Runs every instance (generate, embed, verify) across a worker pool.
// workers: explicit count wins; 0 reads the ORE5_WORKERS environment
// variable and falls back to the hardware concurrency. Results are merged by
// instance id, so the outcome is independent of the worker count.
BatchSummary batch_run(const Corpus& corpus, const EngineConfig& cfg, int workers = 0);

std::string summary_table(const BatchSummary& s); // human-readable aggregate
std::string summary_lines(const BatchSummary& s); // one line per instance

// 0 = everything embedded and verified; 1 = at least one soundness failure
// (missing or unverified embedding on accepted inputs, or an internal
// error); 2 = only hypothesis violations beyond the clean runs.
int summary_exit_code(const BatchSummary& s);

} // namespace ore5
