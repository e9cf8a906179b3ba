#include "sturm/sturmian.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sturm {

const Word& StandardSequencePrefix::s(int k) const {
    if (k < -1 || k > max_index())
        throw std::out_of_range("StandardSequencePrefix::s: index " + std::to_string(k));
    return s_words_[static_cast<std::size_t>(k + 1)];
}

const Word& StandardSequencePrefix::u(int k) const {
    if (k < 1 || k > max_index())
        throw std::out_of_range("StandardSequencePrefix::u: index " + std::to_string(k));
    return u_words_[static_cast<std::size_t>(k - 1)];
}

StandardSequencePrefix standard_sequence(const DirectiveSequence& d, int last_index) {
    if (last_index < 0)
        throw std::invalid_argument("standard_sequence: index must be >= 0");
    StandardSequencePrefix out;
    out.s_words_.reserve(static_cast<std::size_t>(last_index) + 2);
    out.s_words_.push_back(Word("b"));
    out.s_words_.push_back(Word("a"));
    for (int k = 0; k < last_index; ++k) {
        Word next = out.s_words_[static_cast<std::size_t>(k + 1)].times(
            static_cast<std::size_t>(d.at(static_cast<std::size_t>(k))));
        next += out.s_words_[static_cast<std::size_t>(k)];
        out.s_words_.push_back(std::move(next));
    }
    for (int k = 1; k <= last_index; ++k) {
        const Word& sk = out.s_words_[static_cast<std::size_t>(k + 1)];
        out.u_words_.push_back(sk.prefix(sk.size() - 2));
    }
    return out;
}

namespace {

std::string repeat(const std::string& s, int count) {
    std::string out;
    out.reserve(s.size() * static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out += s;
    return out;
}

} // namespace

Word generate_prefix(const DirectiveSequence& d, std::size_t n_letters) {
    if (n_letters == 0) return Word();
    std::string prev = "b";
    std::string cur = "a";
    std::size_t k = 0;
    while (cur.size() < n_letters) {
        if (!d.has(k))
            throw InsufficientDirectiveError(
                "directive supplies only " + std::to_string(d.head().size()) +
                " terms: cannot generate " + std::to_string(n_letters) +
                " letters (longest standard word has " + std::to_string(cur.size()) + ")");
        std::string next = repeat(cur, d.at(k));
        next += prev;
        prev = std::move(cur);
        cur = std::move(next);
        ++k;
    }
    return Word(std::string_view(cur).substr(0, n_letters));
}

namespace {

bool balanced(std::string_view s) {
    const std::size_t n = s.size();
    for (std::size_t k = 1; k < n; ++k) {
        int count = 0;
        for (std::size_t i = 0; i < k; ++i) count += s[i] == 'a';
        int lo = count, hi = count;
        for (std::size_t start = 1; start + k <= n; ++start) {
            count += (s[start + k - 1] == 'a') - (s[start - 1] == 'a');
            lo = std::min(lo, count);
            hi = std::max(hi, count);
            if (hi - lo > 1) return false;
        }
    }
    return true;
}

std::string with_front(char x, std::string_view w) {
    std::string s;
    s.reserve(w.size() + 1);
    s.push_back(x);
    s.append(w);
    return s;
}

std::string with_back(std::string_view w, char x) {
    std::string s(w);
    s.push_back(x);
    return s;
}

} // namespace

bool is_finite_sturmian(const Word& w) { return balanced(w.view()); }

bool is_left_special(const Word& w) {
    return balanced(with_front('a', w.view())) && balanced(with_front('b', w.view()));
}

bool is_right_special(const Word& w) {
    return balanced(with_back(w.view(), 'a')) && balanced(with_back(w.view(), 'b'));
}

bool is_bispecial(const Word& w) { return is_left_special(w) && is_right_special(w); }

bool is_central(const Word& w) {
    return is_palindrome(w) && is_finite_sturmian(w) && is_bispecial(w);
}

bool is_semicentral(const Word& w) {
    if (w.size() < 2 || w.size() % 2 != 0) return false;
    std::string_view s = w.view();
    std::size_t half = (w.size() - 2) / 2;
    if (s[half] == s[half + 1]) return false;
    if (s.substr(0, half) != s.substr(half + 2)) return false;
    return is_central(w.prefix(half));
}

bool is_standard(const Word& w) {
    if (w.size() == 1) return true;
    if (w.size() < 2) return false;
    if (w[w.size() - 2] == w[w.size() - 1]) return false;
    return is_central(w.prefix(w.size() - 2));
}

std::vector<Word> central_prefixes(const DirectiveSequence& d, std::size_t n_letters) {
    (void)generate_prefix(d, n_letters); // same error contract
    std::vector<Word> out;
    // the central prefixes are s_n^k s_{n-1} with the last two letters
    // dropped, for n >= 0 and 1 <= k <= d_n, in increasing length
    std::string prev = "b";
    std::string cur = "a";
    for (std::size_t n = 0; d.has(n); ++n) {
        int dn = d.at(n);
        for (int k = 1; k <= dn; ++k) {
            std::string cand = repeat(cur, k);
            cand += prev;
            if (cand.size() - 2 > n_letters) return out;
            cand.resize(cand.size() - 2);
            out.push_back(Word(cand));
        }
        std::string next = repeat(cur, dn);
        next += prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return out;
}

Word reversed_standard_factor(const DirectiveSequence& d, int n) {
    if (n < 0) throw std::invalid_argument("reversed_standard_factor: index must be >= 0");
    if (n == 0)
        return Word("b") + Word::repeated('a', static_cast<std::size_t>(d.at(0) - 1));
    auto seq = standard_sequence(d, n + 1);
    const Word& lo = seq.u(n);
    const Word& hi = seq.u(n + 1);
    // u_n is a proper prefix of u_{n+1}; checked rather than assumed
    if (lo.size() >= hi.size() || hi.view().substr(0, lo.size()) != lo.view())
        throw Error("reversed_standard_factor: u_" + std::to_string(n) +
                    " is not a proper prefix of u_" + std::to_string(n + 1));
    return hi.substr(lo.size(), hi.size() - lo.size());
}

} // namespace sturm
