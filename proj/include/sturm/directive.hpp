#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sturm/errors.hpp"

namespace sturm {

/// The integer sequence (d_0, d_1, ...) driving a standard sequence
/// s_{n+1} = s_n^{d_n} s_{n-1}; it encodes the continued fraction
/// [0; d_0+1, d_1, ...] of the slope. A finite head may be followed by a
/// block that repeats forever, written "2,2,(1)" for (2, 2, 1, 1, 1, ...).
///
/// Every term is >= 1. Sequences with d_0 = 0 describe words starting with
/// 'b' and are rejected; exchange the letters instead.
class DirectiveSequence {
public:
    /// Throws ParseError when a term is < 1 or both parts are empty.
    explicit DirectiveSequence(std::vector<int> head, std::vector<int> tail = {});

    /// Accepts "2,2,1", "2,2,(1)", "(1,2)". Whitespace is ignored.
    static DirectiveSequence parse(std::string_view spec);

    /// d_n. Throws InsufficientDirectiveError past the head of a finite
    /// sequence.
    int at(std::size_t n) const;

    /// Whether d_n exists (always true with a periodic tail).
    bool has(std::size_t n) const noexcept {
        return n < head_.size() || !tail_.empty();
    }

    bool is_eventually_periodic() const noexcept { return !tail_.empty(); }
    const std::vector<int>& head() const noexcept { return head_; }
    const std::vector<int>& tail() const noexcept { return tail_; }

    std::string to_string() const;

private:
    std::vector<int> head_;
    std::vector<int> tail_;
};

} // namespace sturm
