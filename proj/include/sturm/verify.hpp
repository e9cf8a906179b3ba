#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sturm/directive.hpp"

namespace sturm::verify {

/// Every directive with head entries in {1..max_entry}, head lengths
/// 1..max_terms, and periodic tail (1).
std::vector<DirectiveSequence> directive_family(int max_entry, int max_terms);

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail; // counts on success, first counterexample on failure
};

struct Options {
    std::size_t max_word_len = 12; // exhaustive word sweeps
    int max_entry = 3;             // directive family
    int max_terms = 3;
    std::size_t roundtrip_prefix_len = 120;
    std::size_t roundtrip_words = 10;
};

/// Runs every invariant suite; results come back in a fixed order.
std::vector<SuiteResult> run_all(const Options& options);

} // namespace sturm::verify
