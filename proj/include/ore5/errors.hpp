#pragma once

#include <stdexcept>
#include <string>

namespace ore5 {

// Guest graph breaks the degree contract (some vertex has degree > 4, or an
// operation that requires Ore-degree <= 5 sees a heavier edge).
struct OreDegreeViolation : std::runtime_error {
    explicit OreDegreeViolation(const std::string& msg) : std::runtime_error(msg) {}
};

// Input claimed to satisfy the host/guest hypotheses but a structural
// consequence of those hypotheses failed to materialise.
struct HypothesisViolation : std::runtime_error {
    explicit HypothesisViolation(const std::string& msg) : std::runtime_error(msg) {}
};

// A step of one of the extremal case algorithms could not complete on this
// instance; the caller may fall back to exact search.
struct StepFailure : std::runtime_error {
    explicit StepFailure(const std::string& msg) : std::runtime_error(msg) {}
};

// The cluster-level assignment pipeline ran out of candidates (undersized
// surplus, exhausted switching pool, short buffer supply, ...).
struct PipelineFailure : std::runtime_error {
    explicit PipelineFailure(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal invariant broke: a bug, not a property of the input.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

inline void check_internal(bool cond, const std::string& msg) {
    if (!cond) throw InternalError(msg);
}

} // namespace ore5
