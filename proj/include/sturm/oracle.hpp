#pragma once

#include <vector>

#include "sturm/word.hpp"

// Definition-level reference implementations used as ground truth in tests.
// Deliberately slow; no performance guarantees.
namespace sturm::oracle {

/// Closed by direct enumeration: some proper factor occurs exactly twice,
/// once as a prefix and once as a suffix.
bool naive_is_closed(const Word& w);

/// The longest repeated prefix is not right special within w.
/// Equivalent to closedness for non-empty words.
bool is_periodic_like(const Word& w);

/// All binary words of the given length passing the balance check,
/// lexicographic. Guarded at length 18.
std::vector<Word> enumerate_finite_sturmian(std::size_t length);

/// Every word of length <= max_length belonging to some standard sequence
/// (first directive term may be 0, all later ones >= 1), deduplicated and
/// sorted. Guarded at length 64.
std::vector<Word> enumerate_standard_words(std::size_t max_length);

/// Entry k (1-based) is the number of distinct length-k factors.
std::vector<std::size_t> complexity_profile(const Word& w);

} // namespace sturm::oracle
