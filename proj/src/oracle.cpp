#include "sturm/oracle.hpp"

#include <set>
#include <string>
#include <string_view>
#include <unordered_set>

#include "sturm/sturmian.hpp"

namespace sturm::oracle {

namespace {

// start positions of `piece` in `text`, overlaps allowed
std::vector<std::size_t> scan_positions(std::string_view text, std::string_view piece) {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p + piece.size() <= text.size(); ++p)
        if (text.compare(p, piece.size(), piece) == 0) out.push_back(p);
    return out;
}

} // namespace

bool naive_is_closed(const Word& w) {
    if (w.empty()) return true;
    std::string_view text = w.view();
    // a factor occurring as a prefix is a prefix, so only prefixes can qualify
    for (std::size_t len = 0; len < text.size(); ++len) {
        auto pos = scan_positions(text, text.substr(0, len));
        if (pos.size() == 2 && pos.front() == 0 && pos.back() == text.size() - len) return true;
    }
    return false;
}

bool is_periodic_like(const Word& w) {
    if (w.empty()) throw EmptyWordError("is_periodic_like");
    std::string_view text = w.view();
    std::size_t len = text.size() - 1;
    while (scan_positions(text, text.substr(0, len)).size() < 2) --len;
    auto pos = scan_positions(text, text.substr(0, len));
    bool followed_by_a = false;
    bool followed_by_b = false;
    for (std::size_t p : pos) {
        if (p + len >= text.size()) continue;
        if (text[p + len] == 'a')
            followed_by_a = true;
        else
            followed_by_b = true;
    }
    return !(followed_by_a && followed_by_b);
}

std::vector<Word> enumerate_finite_sturmian(std::size_t length) {
    if (length > 18)
        throw LengthGuardError("enumerate_finite_sturmian: length " + std::to_string(length) +
                               " exceeds the guard of 18");
    std::vector<Word> out;
    for (std::uint32_t x = 0; x < (1u << length); ++x) {
        std::string s(length, 'a');
        for (std::size_t i = 0; i < length; ++i)
            if ((x >> (length - 1 - i)) & 1u) s[i] = 'b';
        Word w(s);
        if (is_finite_sturmian(w)) out.push_back(std::move(w));
    }
    return out;
}

std::vector<Word> enumerate_standard_words(std::size_t max_length) {
    if (max_length > 64)
        throw LengthGuardError("enumerate_standard_words: length " + std::to_string(max_length) +
                               " exceeds the guard of 64");
    std::set<std::string> found;
    if (max_length >= 1) {
        found.insert("a");
        found.insert("b");
        // walk every directive prefix; only the first term may be 0
        auto walk = [&](auto&& self, const std::string& prev, const std::string& cur,
                        bool first) -> void {
            for (std::size_t t = first ? 0 : 1;; ++t) {
                std::size_t len = t * cur.size() + prev.size();
                if (len > max_length) break;
                std::string next;
                next.reserve(len);
                for (std::size_t i = 0; i < t; ++i) next += cur;
                next += prev;
                found.insert(next);
                self(self, cur, next, false);
            }
        };
        walk(walk, "b", "a", true);
    }
    std::vector<Word> out;
    out.reserve(found.size());
    for (const std::string& s : found) out.push_back(Word(s));
    return out;
}

std::vector<std::size_t> complexity_profile(const Word& w) {
    std::vector<std::size_t> counts;
    std::string_view text = w.view();
    for (std::size_t k = 1; k <= text.size(); ++k) {
        std::unordered_set<std::string_view> factors;
        for (std::size_t p = 0; p + k <= text.size(); ++p) factors.insert(text.substr(p, k));
        counts.push_back(factors.size());
    }
    return counts;
}

} // namespace sturm::oracle
