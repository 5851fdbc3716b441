#pragma once

#include <string>
#include <vector>

#include "ore5/graph.hpp"

namespace ore5 {

// Injective map from guest vertices to host vertices; phi[x] = -1 while x is
// still unplaced. A finished embedding has every entry set.
struct Embedding {
    std::vector<int> phi;

    explicit Embedding(int n = 0) : phi(n, -1) {}
    bool complete() const {
        for (int v : phi)
            if (v < 0) return false;
        return true;
    }
};

struct VerifyReport {
    bool ok = false;
    std::string first_violation; // empty when ok
};

// Checks totality, injectivity, range, and that every guest edge lands on a
// host edge. Stops at the first violation.
VerifyReport verify_embedding(const Graph& h, const Graph& g, const Embedding& e);

} // namespace ore5
