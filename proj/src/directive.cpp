#include "sturm/directive.hpp"

#include <cctype>
#include <charconv>

namespace sturm {

namespace {

std::vector<int> parse_int_list(std::string_view part, bool allow_empty) {
    std::vector<int> values;
    if (part.empty()) {
        if (!allow_empty) throw ParseError("directive: expected a list of integers");
        return values;
    }
    std::size_t pos = 0;
    while (pos <= part.size()) {
        std::size_t comma = part.find(',', pos);
        std::string_view token = part.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                                  : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty())
            throw ParseError("directive: '" + std::string(token) + "' is not an integer");
        values.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
        if (pos == part.size()) throw ParseError("directive: trailing comma");
    }
    return values;
}

} // namespace

DirectiveSequence::DirectiveSequence(std::vector<int> head, std::vector<int> tail)
    : head_(std::move(head)), tail_(std::move(tail)) {
    if (head_.empty() && tail_.empty())
        throw ParseError("directive: needs at least one term");
    int d0 = head_.empty() ? tail_.front() : head_.front();
    if (d0 < 1)
        throw ParseError("directive: d_0 must be >= 1; for a word starting with 'b', "
                         "exchange the letters a and b and use the swapped directive");
    for (int d : head_)
        if (d < 1) throw ParseError("directive: every term must be >= 1");
    for (int d : tail_)
        if (d < 1) throw ParseError("directive: every term must be >= 1");
}

DirectiveSequence DirectiveSequence::parse(std::string_view spec) {
    std::string s;
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("directive: empty spec");

    std::string head_part = s;
    std::string tail_part;
    std::size_t paren = s.find('(');
    if (paren != std::string::npos) {
        if (s.back() != ')' || s.find(')') != s.size() - 1)
            throw ParseError("directive: periodic block must be a trailing '(...)'");
        tail_part = s.substr(paren + 1, s.size() - paren - 2);
        head_part = s.substr(0, paren);
        if (!head_part.empty()) {
            if (head_part.back() != ',')
                throw ParseError("directive: expected ',' before the periodic block");
            head_part.pop_back();
        }
        if (tail_part.empty()) throw ParseError("directive: periodic block is empty");
    }
    return DirectiveSequence(parse_int_list(head_part, /*allow_empty=*/paren != std::string::npos),
                             parse_int_list(tail_part, /*allow_empty=*/true));
}

int DirectiveSequence::at(std::size_t n) const {
    if (n < head_.size()) return head_[n];
    if (!tail_.empty()) return tail_[(n - head_.size()) % tail_.size()];
    throw InsufficientDirectiveError("directive supplies only " + std::to_string(head_.size()) +
                                     " terms and no periodic tail (d_" + std::to_string(n) +
                                     " requested)");
}

std::string DirectiveSequence::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < head_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(head_[i]);
    }
    if (!tail_.empty()) {
        if (!head_.empty()) out += ',';
        out += '(';
        for (std::size_t i = 0; i < tail_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(tail_[i]);
        }
        out += ')';
    }
    return out;
}

} // namespace sturm
