#include "sturm/analysis.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sturm/sturmian.hpp"

namespace sturm {

std::uint64_t continuant(std::span<const int> entries) {
    std::uint64_t prev2 = 0;
    std::uint64_t prev = 1; // K of the empty sequence
    for (int x : entries) {
        if (x < 0) throw std::invalid_argument("continuant: entries must be >= 0");
        std::uint64_t cur = static_cast<std::uint64_t>(x) * prev + prev2;
        prev2 = prev;
        prev = cur;
    }
    return prev;
}

std::uint64_t continuant(std::initializer_list<int> entries) {
    return continuant(std::span<const int>(entries.begin(), entries.size()));
}

namespace {

std::uint64_t run_pair_length(const DirectiveSequence& d, std::size_t n) {
    std::vector<int> entries;
    entries.reserve(n + 2);
    entries.push_back(1);
    for (std::size_t j = 0; j < n; ++j) entries.push_back(d.at(j));
    entries.push_back(d.at(n) - 1);
    return continuant(entries);
}

} // namespace

std::vector<std::uint64_t> run_lengths_from_directive(const DirectiveSequence& d,
                                                      std::size_t count) {
    if (count == 0)
        throw std::invalid_argument("run_lengths_from_directive: count must be >= 1");
    std::vector<std::uint64_t> ks;
    ks.reserve(count);
    for (std::size_t n = 0; n < count; ++n) ks.push_back(run_pair_length(d, n));
    return ks;
}

OcSequence oc_from_directive(const DirectiveSequence& d, std::size_t n_bits) {
    OcSequence oc;
    for (std::size_t n = 0; oc.size() < n_bits; ++n) {
        std::uint64_t k = run_pair_length(d, n);
        for (std::uint64_t i = 0; i < k && oc.size() < n_bits; ++i) oc.push_back(true);
        for (std::uint64_t i = 0; i < k && oc.size() < n_bits; ++i) oc.push_back(false);
    }
    return oc;
}

RunProfile run_profile(const DirectiveSequence& d, std::size_t n_bits) {
    RunProfile out;
    out.runs = runs(oc_from_directive(d, n_bits));
    std::size_t acc = 0;
    out.last_run_complete = true;
    for (std::size_t n = 0; acc < n_bits; ++n) {
        std::uint64_t k = run_pair_length(d, n);
        out.predicted_k.push_back(k);
        for (int half = 0; half < 2 && acc < n_bits; ++half) {
            if (acc + k <= n_bits) {
                acc += k;
            } else {
                acc = n_bits;
                out.last_run_complete = false;
            }
        }
    }
    return out;
}

std::vector<BoundaryEvent> boundary_classify(const DirectiveSequence& d, std::size_t n_letters) {
    if (n_letters < 1)
        throw std::invalid_argument("boundary_classify: need at least one letter");
    Word w = generate_prefix(d, n_letters);
    OcSequence oc = oc_sequence(w);
    std::vector<BoundaryEvent> events;
    // flips alternate starting with closed->open; the n-th closed->open flip
    // ends the n-th closed run, the n-th open->closed flip ends the n-th
    // open run and is witnessed by u_n x y u_n
    int next_closed_to_open = 0;
    int next_open_to_closed = 1;
    for (std::size_t i = 1; i < n_letters; ++i) {
        bool cur = oc.bit(i);
        if (cur == oc.bit(i + 1)) continue;
        BoundaryEvent e;
        e.position = i;
        e.witness = w.prefix(i);
        if (cur) {
            e.kind = BoundaryKind::closed_to_open;
            e.index_n = next_closed_to_open++;
        } else {
            e.kind = BoundaryKind::open_to_closed;
            e.index_n = next_open_to_closed++;
        }
        events.push_back(std::move(e));
    }
    return events;
}

std::vector<Word> semicentral_prefixes(const DirectiveSequence& d, std::size_t n_letters) {
    (void)generate_prefix(d, n_letters); // same error contract
    std::vector<Word> out;
    // u_n x y u_n = s_n u_n, of length 2|s_n| - 2, for n >= 1
    std::string prev = "b";
    std::string cur = "a";
    for (std::size_t n = 0; d.has(n); ++n) {
        int dn = d.at(n);
        std::string next;
        next.reserve(cur.size() * static_cast<std::size_t>(dn) + prev.size());
        for (int i = 0; i < dn; ++i) next += cur;
        next += prev;
        prev = std::move(cur);
        cur = std::move(next); // cur is now s_{n+1}
        if (2 * cur.size() - 2 > n_letters) break;
        out.push_back(Word(cur + cur.substr(0, cur.size() - 2)));
    }
    return out;
}

FactorizationReport square_factorization(const DirectiveSequence& d, std::size_t factor_count) {
    if (factor_count == 0)
        throw std::invalid_argument("square_factorization: need at least one factor");
    FactorizationReport rep;
    std::size_t d0 = static_cast<std::size_t>(d.at(0));
    rep.leading = Word::repeated('a', d0) + Word("b") + Word::repeated('a', d0 - 1);

    // TODO: build one standard_sequence(d, factor_count) and slice it instead
    // of letting each factor recompute the sequence.
    std::string product;
    for (std::size_t n = 0; n < factor_count; ++n) {
        Word f = reversed_standard_factor(d, static_cast<int>(n));
        product += f.str();
        product += f.str();
        rep.factors.push_back({static_cast<int>(n), std::move(f), false});
    }
    rep.covered_length = product.size();

    Word target = swap_first_letter(generate_prefix(d, rep.covered_length));
    std::size_t pos = 0;
    for (SquareFactor& sf : rep.factors) {
        pos += 2 * sf.factor.size();
        sf.verified = target.view().substr(0, pos) == std::string_view(product).substr(0, pos);
    }
    return rep;
}

namespace {

// A word grown letter by letter, keeping enough state to answer, in O(n)
// per letter, whether appending a given letter keeps the balance property
// and whether the extended word would be closed.
struct GrowingWord {
    std::string text;
    std::vector<std::size_t> pi;  // failure table of text
    std::vector<int> cum_a;       // cum_a[i] = number of 'a' in text[0..i)
    std::vector<int> min_a;       // per factor length (1-based), min 'a'-count
    std::vector<int> max_a;

    void init(char first) {
        text.assign(1, first);
        pi.assign(1, 0);
        int a = first == 'a';
        cum_a = {0, a};
        min_a = {a};
        max_a = {a};
    }

    int suffix_count(char x, std::size_t k) const {
        // 'a'-count of the length-k suffix of text + x
        return (x == 'a') + cum_a[text.size()] - cum_a[text.size() - (k - 1)];
    }

    bool balanced_with(char x) const {
        for (std::size_t k = 1; k <= text.size(); ++k) {
            int c = suffix_count(x, k);
            if (std::max(max_a[k - 1], c) - std::min(min_a[k - 1], c) > 1) return false;
        }
        return true;
    }

    std::size_t next_border(char x) const {
        std::size_t k = pi.back();
        while (k > 0 && x != text[k]) k = pi[k - 1];
        if (x == text[k]) ++k;
        return k;
    }

    bool closed_with(char x) const {
        const std::size_t len = text.size() + 1;
        std::size_t border = next_border(x);
        if (border == 0) return false;
        // scan text + x for its length-`border` prefix; the prefix and its
        // failure entries lie entirely inside text
        std::size_t matched = 0;
        for (std::size_t t = 0; t < len; ++t) {
            char c = t == len - 1 ? x : text[t];
            while (matched > 0 && c != text[matched]) matched = pi[matched - 1];
            if (c == text[matched]) ++matched;
            if (matched == border) {
                std::size_t start = t + 1 - border;
                if (start != 0 && start != len - border) return false;
                matched = pi[matched - 1];
            }
        }
        return true;
    }

    void commit(char x) {
        for (std::size_t k = 1; k <= text.size(); ++k) {
            int c = suffix_count(x, k);
            min_a[k - 1] = std::min(min_a[k - 1], c);
            max_a[k - 1] = std::max(max_a[k - 1], c);
        }
        int whole = cum_a[text.size()] + (x == 'a');
        min_a.push_back(whole);
        max_a.push_back(whole);
        pi.push_back(next_border(x));
        text.push_back(x);
        cum_a.push_back(whole);
    }
};

} // namespace

Word reconstruct_from_oc(const OcSequence& bits) {
    if (bits.empty()) throw InvalidOcError("reconstruct_from_oc: empty oc sequence");
    if (!bits.bit(1))
        throw InvalidOcError("reconstruct_from_oc: bit 1 is 0, but a single letter is closed");

    GrowingWord grown;
    grown.init('a'); // normalization: the result starts with 'a'
    for (std::size_t i = 2; i <= bits.size(); ++i) {
        bool want_closed = bits.bit(i);
        char chosen = 0;
        for (char x : {'a', 'b'}) {
            if (!grown.balanced_with(x)) continue;
            // when both letters keep the word balanced, exactly one of the
            // extensions is closed, so the bit picks the letter
            if (grown.closed_with(x) == want_closed) {
                chosen = x;
                break;
            }
        }
        if (chosen == 0) throw NotSturmianOcError(i);
        grown.commit(chosen);
    }
    return Word(grown.text);
}

bool fibonacci_identities_check(std::size_t n_letters) {
    if (n_letters < 2)
        throw std::invalid_argument("fibonacci_identities_check: need at least two letters");
    DirectiveSequence fib({1}, {1});
    std::string target = generate_prefix(fib, n_letters).str();

    // product of the reversals of the finite Fibonacci words
    std::string fprev = "b";
    std::string fcur = "a";
    std::string rev_product;
    while (rev_product.size() < n_letters) {
        rev_product.append(fcur.rbegin(), fcur.rend());
        std::string next = fcur + fprev;
        fprev = std::move(fcur);
        fcur = std::move(next);
    }

    // ab times the product of the finite Fibonacci words
    fprev = "b";
    fcur = "a";
    std::string fwd_product = "ab";
    while (fwd_product.size() < n_letters) {
        fwd_product += fcur;
        std::string next = fcur + fprev;
        fprev = std::move(fcur);
        fcur = std::move(next);
    }

    return rev_product.compare(0, n_letters, target) == 0 &&
           fwd_product.compare(0, n_letters, target) == 0;
}

} // namespace sturm
