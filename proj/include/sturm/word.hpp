#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sturm/errors.hpp"

namespace sturm {

/// A finite word over the two-letter alphabet {a, b}.
///
/// Words are values: every analysis function takes them by const reference
/// and returns fresh ones, so they can be shared freely across threads.
class Word {
public:
    Word() = default;

    /// Validates that every byte is 'a' or 'b'; throws ParseError otherwise.
    explicit Word(std::string_view letters);

    /// `count` copies of a single letter.
    static Word repeated(char letter, std::size_t count);

    std::size_t size() const noexcept { return text_.size(); }
    bool empty() const noexcept { return text_.empty(); }
    char operator[](std::size_t i) const { return text_[i]; }
    const std::string& str() const noexcept { return text_; }
    std::string_view view() const noexcept { return text_; }

    Word prefix(std::size_t count) const;
    Word substr(std::size_t pos, std::size_t count) const;

    void append(char letter);
    Word& operator+=(const Word& rhs);
    friend Word operator+(Word lhs, const Word& rhs) {
        lhs += rhs;
        return lhs;
    }

    /// `count`-fold repetition of the whole word.
    Word times(std::size_t count) const;

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

private:
    struct Raw {};
    Word(std::string text, Raw) : text_(std::move(text)) {}

    std::string text_;
};

/// Bit string describing the prefixes of a word: bit n (1-based) is 1 when
/// the prefix of length n is closed and 0 when it is open.
class OcSequence {
public:
    OcSequence() = default;

    /// Validates that every byte is '0' or '1'; throws ParseError otherwise.
    explicit OcSequence(std::string_view bits);

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }

    /// 1-based: bit(n) describes the prefix of length n.
    bool bit(std::size_t n) const;

    void push_back(bool closed) { bits_.push_back(closed ? '1' : '0'); }
    OcSequence prefix(std::size_t count) const;
    const std::string& to_string() const noexcept { return bits_; }

    bool operator==(const OcSequence&) const = default;
    auto operator<=>(const OcSequence&) const = default;

private:
    std::string bits_;
};

/// One maximal block of equal bits.
struct Run {
    int bit = 0;
    std::size_t length = 0;
    bool operator==(const Run&) const = default;
};

/// Entry i (1-based) is the length of the longest border of the prefix of
/// length i. Entry i is always < i.
std::vector<std::size_t> border_array(const Word& w);

/// Longest word that is both a proper prefix and a suffix of w (possibly
/// empty). Throws EmptyWordError on the empty word.
Word longest_border(const Word& w);

/// |w| minus the longest border length; the smallest p with w[i] = w[i+p].
std::size_t min_period(const Word& w);

/// All start positions of `factor` in `w`, ascending, occurrences may
/// overlap. The empty factor occurs at every position 0..|w|.
std::vector<std::size_t> occurrences(const Word& w, const Word& factor);

/// A word is closed when it is empty or its longest border has no internal
/// occurrence; equivalently, some proper factor occurs exactly twice, as a
/// prefix and as a suffix.
bool is_closed(const Word& w);

/// Closedness of every prefix, bit n for the prefix of length n.
OcSequence oc_sequence(const Word& w);

/// Run-length encoding; concatenating the runs reproduces `bits`.
std::vector<Run> runs(const OcSequence& bits);

Word reversal(const Word& w);
bool is_palindrome(const Word& w);

/// Replaces the first letter by the other letter of the alphabet.
Word swap_first_letter(const Word& w);

std::ostream& operator<<(std::ostream& os, const Word& w);
std::ostream& operator<<(std::ostream& os, const OcSequence& bits);

} // namespace sturm
