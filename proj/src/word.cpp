#include "sturm/word.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace sturm {

namespace {

void check_letter(char c) {
    if (c != 'a' && c != 'b')
        throw ParseError(std::string("invalid letter '") + c + "': words use only 'a' and 'b'");
}

} // namespace

Word::Word(std::string_view letters) : text_(letters) {
    for (char c : text_) check_letter(c);
}

Word Word::repeated(char letter, std::size_t count) {
    check_letter(letter);
    return Word(std::string(count, letter), Raw{});
}

Word Word::prefix(std::size_t count) const {
    return Word(text_.substr(0, count), Raw{});
}

Word Word::substr(std::size_t pos, std::size_t count) const {
    return Word(text_.substr(pos, count), Raw{});
}

void Word::append(char letter) {
    check_letter(letter);
    text_.push_back(letter);
}

Word& Word::operator+=(const Word& rhs) {
    text_ += rhs.text_;
    return *this;
}

Word Word::times(std::size_t count) const {
    std::string out;
    out.reserve(text_.size() * count);
    for (std::size_t i = 0; i < count; ++i) out += text_;
    return Word(std::move(out), Raw{});
}

OcSequence::OcSequence(std::string_view bits) : bits_(bits) {
    for (char c : bits_)
        if (c != '0' && c != '1')
            throw ParseError(std::string("invalid oc bit '") + c + "': expected '0' or '1'");
}

bool OcSequence::bit(std::size_t n) const {
    if (n == 0 || n > bits_.size())
        throw std::out_of_range("OcSequence::bit: position out of range");
    return bits_[n - 1] == '1';
}

OcSequence OcSequence::prefix(std::size_t count) const {
    OcSequence out;
    out.bits_ = bits_.substr(0, std::min(count, bits_.size()));
    return out;
}

std::vector<std::size_t> border_array(const Word& w) {
    std::vector<std::size_t> pi(w.size(), 0);
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::size_t k = pi[i - 1];
        while (k > 0 && w[i] != w[k]) k = pi[k - 1];
        if (w[i] == w[k]) ++k;
        pi[i] = k;
    }
    return pi;
}

Word longest_border(const Word& w) {
    if (w.empty()) throw EmptyWordError("longest_border");
    return w.prefix(border_array(w).back());
}

std::size_t min_period(const Word& w) {
    if (w.empty()) throw EmptyWordError("min_period");
    return w.size() - border_array(w).back();
}

std::vector<std::size_t> occurrences(const Word& w, const Word& factor) {
    std::vector<std::size_t> found;
    if (factor.empty()) {
        for (std::size_t p = 0; p <= w.size(); ++p) found.push_back(p);
        return found;
    }
    std::string_view text = w.view();
    for (std::size_t p = text.find(factor.view()); p != std::string_view::npos;
         p = text.find(factor.view(), p + 1))
        found.push_back(p);
    return found;
}

namespace {

// True iff the length-`border` prefix occurs in the length-`len` prefix of w
// only at the two ends. `pi` must cover at least that prefix.
bool border_only_at_ends(std::string_view w, const std::vector<std::size_t>& pi,
                         std::size_t len, std::size_t border) {
    std::size_t matched = 0;
    for (std::size_t t = 0; t < len; ++t) {
        while (matched > 0 && w[t] != w[matched]) matched = pi[matched - 1];
        if (w[t] == w[matched]) ++matched;
        if (matched == border) {
            std::size_t start = t + 1 - border;
            if (start != 0 && start != len - border) return false;
            matched = pi[matched - 1];
        }
    }
    return true;
}

} // namespace

bool is_closed(const Word& w) {
    if (w.size() <= 1) return true;
    auto pi = border_array(w);
    std::size_t border = pi.back();
    return border > 0 && border_only_at_ends(w.view(), pi, w.size(), border);
}

OcSequence oc_sequence(const Word& w) {
    OcSequence oc;
    auto pi = border_array(w);
    for (std::size_t len = 1; len <= w.size(); ++len) {
        std::size_t border = pi[len - 1];
        bool closed = len == 1 || (border > 0 && border_only_at_ends(w.view(), pi, len, border));
        oc.push_back(closed);
    }
    return oc;
}

std::vector<Run> runs(const OcSequence& bits) {
    std::vector<Run> out;
    for (std::size_t n = 1; n <= bits.size(); ++n) {
        int b = bits.bit(n) ? 1 : 0;
        if (out.empty() || out.back().bit != b)
            out.push_back({b, 1});
        else
            ++out.back().length;
    }
    return out;
}

Word reversal(const Word& w) {
    return Word(std::string(w.str().rbegin(), w.str().rend()));
}

bool is_palindrome(const Word& w) {
    const std::string& s = w.str();
    return std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2), s.rbegin());
}

Word swap_first_letter(const Word& w) {
    if (w.empty()) throw EmptyWordError("swap_first_letter");
    std::string s = w.str();
    s[0] = s[0] == 'a' ? 'b' : 'a';
    return Word(s);
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }
std::ostream& operator<<(std::ostream& os, const OcSequence& bits) { return os << bits.to_string(); }

} // namespace sturm
