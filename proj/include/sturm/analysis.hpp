#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "sturm/directive.hpp"
#include "sturm/word.hpp"

namespace sturm {

/// Continuant K of an integer sequence: K[] = 1, K[a0] = a0,
/// K[a0..an] = an * K[a0..a(n-1)] + K[a0..a(n-2)]. Entries must be >= 0.
std::uint64_t continuant(std::span<const int> entries);
std::uint64_t continuant(std::initializer_list<int> entries);

/// k_0..k_{count-1} where k_n = K[1, d_0, ..., d_{n-1}, d_n - 1]: the
/// length of the n-th run pair in the oc sequence. k_0 = d_0.
std::vector<std::uint64_t> run_lengths_from_directive(const DirectiveSequence& d,
                                                      std::size_t count);

/// First n_bits of the infinite product of blocks 1^{k_n} 0^{k_n}; equal,
/// bit for bit, to oc_sequence(generate_prefix(d, n_bits)).
OcSequence oc_from_directive(const DirectiveSequence& d, std::size_t n_bits);

/// Run-length view of oc_from_directive(d, n_bits) together with the
/// predicted run-pair lengths. The final run may be cut short by the
/// truncation; last_run_complete says whether it ends on a block boundary.
struct RunProfile {
    std::vector<Run> runs;
    std::vector<std::uint64_t> predicted_k;
    bool last_run_complete = true;
};
RunProfile run_profile(const DirectiveSequence& d, std::size_t n_bits);

enum class BoundaryKind {
    open_to_closed, // witness is semicentral: u_n x y u_n
    closed_to_open, // witness is central: u_n x y u_{n+1} = u_{n+1} y x u_n
};

/// A position where the oc bits flip. `position` is the length of the
/// prefix just before the flip and `witness` that prefix; `index_n` is the
/// index of the u-word pair realizing it.
struct BoundaryEvent {
    std::size_t position = 0;
    BoundaryKind kind = BoundaryKind::open_to_closed;
    Word witness;
    int index_n = 0;
};

/// Every flip of the oc bits of the length-n_letters prefix, in order.
std::vector<BoundaryEvent> boundary_classify(const DirectiveSequence& d, std::size_t n_letters);

/// All semicentral prefixes of the generated word with length <= n_letters:
/// the words u_n x y u_n, n >= 1. Enumeration stops where a finite
/// directive runs out of terms.
std::vector<Word> semicentral_prefixes(const DirectiveSequence& d, std::size_t n_letters);

struct SquareFactor {
    int index = 0;
    Word factor;
    bool verified = false;
};

/// Factorization of the word with its first letter swapped into squares of
/// reversed standard words: factor 0 is b a^{d_0 - 1}, factor n >= 1 is
/// u_n^{-1} u_{n+1}. Equivalently the word itself is `leading` followed by
/// the squares of the factors from index 1 on.
struct FactorizationReport {
    Word leading; // a^{d_0} b a^{d_0 - 1}
    std::vector<SquareFactor> factors;
    std::size_t covered_length = 0; // letters reproduced by the squared factors
};
FactorizationReport square_factorization(const DirectiveSequence& d, std::size_t factor_count);

/// The unique finite Sturmian word starting with 'a' whose oc sequence is
/// `bits`. Throws InvalidOcError when bits is empty or starts with 0, and
/// NotSturmianOcError when no extension can match some bit.
Word reconstruct_from_oc(const OcSequence& bits);

/// Checks two product identities for the Fibonacci word on its length-n
/// prefix: the concatenation of the reversed finite Fibonacci words, and
/// "ab" times the concatenation of the finite Fibonacci words.
bool fibonacci_identities_check(std::size_t n_letters);

} // namespace sturm
