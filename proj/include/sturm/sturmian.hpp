#pragma once

#include <vector>

#include "sturm/directive.hpp"
#include "sturm/word.hpp"

namespace sturm {

/// The words s_{-1} = b, s_0 = a, s_{k+1} = s_k^{d_k} s_{k-1} of a standard
/// sequence, together with the central words u_k obtained from s_k by
/// dropping its last two letters (k >= 1). Every s_k with k >= 1 ends in
/// "ab" for odd k and "ba" for even k, so s_k = u_k x y with x != y.
class StandardSequencePrefix {
public:
    int max_index() const noexcept { return static_cast<int>(s_words_.size()) - 2; }

    /// k ranges over [-1, max_index()].
    const Word& s(int k) const;

    /// k ranges over [1, max_index()].
    const Word& u(int k) const;

private:
    friend StandardSequencePrefix standard_sequence(const DirectiveSequence& d, int last_index);

    std::vector<Word> s_words_; // s_words_[k+1] holds s_k
    std::vector<Word> u_words_; // u_words_[k-1] holds u_k
};

/// Builds s_{-1}..s_{last_index} and u_1..u_{last_index}. Needs directive
/// terms d_0..d_{last_index - 1}.
StandardSequencePrefix standard_sequence(const DirectiveSequence& d, int last_index);

/// The length-n prefix of the standard Sturmian word of the directive;
/// prefix-monotone in n. Throws InsufficientDirectiveError when a finite
/// directive cannot produce that many letters.
Word generate_prefix(const DirectiveSequence& d, std::size_t n_letters);

/// Balance property: over every factor length, the per-factor counts of 'a'
/// differ by at most 1. Characterizes the factors of Sturmian words.
bool is_finite_sturmian(const Word& w);

bool is_left_special(const Word& w);  // aw and bw are both finite Sturmian
bool is_right_special(const Word& w); // wa and wb are both finite Sturmian
bool is_bispecial(const Word& w);

/// Palindromic bispecial finite Sturmian word; equivalently, uxy is a
/// standard word for distinct letters x, y.
bool is_central(const Word& w);

/// Word of the form u x y u with u central and x != y. Always open.
bool is_semicentral(const Word& w);

/// Single letter, or u x y with u central and x != y; exactly the members
/// of standard sequences.
bool is_standard(const Word& w);

/// All central words that are prefixes of generate_prefix(d, n_letters),
/// ascending by length, starting with the empty word. Enumeration stops
/// where a finite directive runs out of terms.
std::vector<Word> central_prefixes(const DirectiveSequence& d, std::size_t n_letters);

/// The word z with u_{n+1} = u_n z for n >= 1; for n = 0, b a^{d_0 - 1}.
/// Always the reversal of a standard word.
Word reversed_standard_factor(const DirectiveSequence& d, int n);

} // namespace sturm
