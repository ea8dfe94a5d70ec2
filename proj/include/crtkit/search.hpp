#pragma once

#include "crtkit/crt_module.hpp"
#include "crtkit/pconstruct.hpp"

#include <vector>

namespace crtkit {

struct SearchOptions {
    long long max_order = 16; // rejected above 64
    Part bucket_part = Part::O;
    // cap on the endomorphism-candidate count enumerated per group; groups
    // over the cap are reported as skipped rather than silently dropped
    unsigned long long enumeration_budget = 1ull << 20;
};

struct SearchEntry {
    std::vector<Int> group_orders;
    IntMatrix involution; // lex-least representative of its conjugacy class
    Fingerprint fp;
};

struct SearchBucket {
    std::array<std::vector<Int>, 8> key; // fingerprint of the bucket part
    std::vector<SearchEntry> entries;
    std::size_t distinct_complements = 0; // distinct fingerprints of the other parts
};

struct SearchReport {
    long long max_order = 0;
    Part bucket_part = Part::O;
    std::size_t groups_enumerated = 0;
    std::size_t classes_admissible = 0;
    // buckets with >= 2 distinct complementary fingerprints, in key order
    std::vector<SearchBucket> buckets;
    std::vector<std::vector<Int>> skipped_groups;
};

// Enumerates admissible involutive groups of order <= max_order (involutions
// up to the automorphism action of each group), builds their P-modules, and
// buckets the fingerprints by the chosen part. Deterministic.
SearchReport search_counterexamples(const SearchOptions& opts);

} // namespace crtkit
