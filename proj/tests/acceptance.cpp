// End-to-end acceptance suite. Each check prints one PASS/FAIL line; the
// process exits non-zero if any check fails.

#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "sturm/analysis.hpp"
#include "sturm/oracle.hpp"
#include "sturm/sturmian.hpp"
#include "sturm/verify.hpp"
#include "sturm/word.hpp"

using namespace sturm;

namespace {

int failures = 0;

void criterion(int num, bool ok, const std::string& label) {
    std::printf("%s %2d  %s\n", ok ? "PASS" : "FAIL", num, label.c_str());
    if (!ok) ++failures;
}

std::string nth_word(std::size_t len, std::uint32_t x) {
    std::string s(len, 'a');
    for (std::size_t i = 0; i < len; ++i)
        if ((x >> (len - 1 - i)) & 1u) s[i] = 'b';
    return s;
}

std::vector<std::pair<std::size_t, bool>> oc_flips(const OcSequence& oc) {
    std::vector<std::pair<std::size_t, bool>> flips;
    for (std::size_t i = 1; i < oc.size(); ++i)
        if (oc.bit(i) != oc.bit(i + 1)) flips.emplace_back(i, oc.bit(i));
    return flips;
}

void check_worked_examples() {
    criterion(1, oc_sequence(Word("abaaab")).to_string() == "101001",
              "oc(abaaab) = 101001");

    DirectiveSequence table({2, 2, 1}, {1});
    Word w = generate_prefix(table, 15);
    bool ok = w == Word("aabaabaaabaabaa") &&
              oc_sequence(w).to_string() == "110011110000111";
    for (int d3 = 1; d3 <= 4 && ok; ++d3)
        ok = generate_prefix(DirectiveSequence({2, 2, 1}, {d3}), 15) == w;
    criterion(2, ok, "directive 2,2,1,(1): word aabaabaaabaabaa with oc 110011110000111, "
                     "independent of d_3");

    OcSequence oc = oc_sequence(w);
    struct Row {
        std::size_t length;
        bool closed;
    };
    const std::vector<Row> rows{{4, false}, {5, true},  {6, true},   {7, true},
                                {8, true},  {9, false}, {10, false}, {11, false},
                                {12, false}, {13, true}};
    ok = true;
    for (const Row& row : rows) ok = ok && oc.bit(row.length) == row.closed;
    criterion(3, ok, "prefix classifications at lengths 4..13 match the worked table");
}

void check_fibonacci_factorization() {
    DirectiveSequence fib({1}, {1});
    auto rep = square_factorization(fib, 7);
    const std::vector<Word> expected{Word("b"),     Word("a"),     Word("ba"),
                                     Word("aba"),   Word("baaba"), Word("ababaaba")};
    bool ok = rep.factors.size() == 7;
    for (std::size_t i = 0; i < expected.size() && ok; ++i)
        ok = rep.factors[i].factor == expected[i] && rep.factors[i].verified;
    ok = ok && rep.factors[6].verified;

    // F itself: ab followed by the squares of the factors from index 1 on
    Word rebuilt = rep.leading;
    for (const auto& sf : rep.factors)
        if (sf.index >= 1) rebuilt += sf.factor + sf.factor;
    ok = ok && rep.leading == Word("ab") && rebuilt.size() >= 60 &&
         rebuilt.prefix(60) == generate_prefix(fib, 60);
    criterion(4, ok, "Fibonacci square factorization b,a,ba,aba,baaba,ababaaba verified; "
                     "ab-product identity holds on 60 letters");
}

void check_run_length_formula() {
    auto family = verify::directive_family(4, 5);
    bool ok = family.size() == 1364;
    for (const auto& d : family) {
        std::size_t n = standard_sequence(d, 6).s(6).size();
        if (oc_from_directive(d, n) != oc_sequence(generate_prefix(d, n))) {
            ok = false;
            break;
        }
    }
    criterion(5, ok, "oc from continuant run lengths matches direct oc over 1364 directives "
                     "at N = |s_6|");
}

void check_doubled_fibonacci_runs() {
    DirectiveSequence fib({1}, {1});
    bool ok = run_lengths_from_directive(fib, 8) ==
              std::vector<std::uint64_t>{1, 1, 2, 3, 5, 8, 13, 21};
    auto rle = runs(oc_sequence(generate_prefix(fib, 110)));
    const std::vector<Run> expected{{1, 1}, {0, 1}, {1, 1},  {0, 1},  {1, 2},  {0, 2},
                                    {1, 3}, {0, 3}, {1, 5},  {0, 5},  {1, 8},  {0, 8},
                                    {1, 13}, {0, 13}, {1, 21}, {0, 21}, {1, 2}};
    ok = ok && rle == expected;
    criterion(6, ok, "oc(F) runs form the doubled Fibonacci sequence (complete runs of a "
                     "110-letter prefix)");
}

void check_closedness_oracles() {
    bool ok = is_closed(Word()) && oracle::naive_is_closed(Word());
    for (std::size_t len = 1; len <= 16 && ok; ++len) {
        for (std::uint32_t x = 0; x < (1u << len); ++x) {
            Word w(nth_word(len, x));
            bool fast = is_closed(w);
            if (fast != oracle::naive_is_closed(w) || fast != oracle::is_periodic_like(w)) {
                ok = false;
                break;
            }
        }
    }
    criterion(7, ok, "is_closed = naive enumeration = periodic-like over all words up to "
                     "length 16");

    ok = true;
    for (std::size_t len = 1; len <= 14 && ok; ++len) {
        for (std::uint32_t x = 0; x < (1u << len); ++x) {
            Word wa(nth_word(len, x)), wb = wa;
            wa.append('a');
            wb.append('b');
            if (is_closed(wa) && is_closed(wb)) {
                ok = false;
                break;
            }
        }
    }
    criterion(8, ok, "at most one closed one-letter extension, all words up to length 14");

    ok = true;
    for (std::size_t len = 1; len <= 14 && ok; ++len) {
        for (std::uint32_t x = 0; x < (1u << len); ++x) {
            Word w(nth_word(len, x));
            if (!is_closed(w)) continue;
            for (char c : {'a', 'b'}) {
                Word wc = w;
                wc.append(c);
                if (is_closed(wc) != (min_period(wc) == min_period(w))) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
    }
    criterion(9, ok, "closed extension iff unchanged minimal period, closed words up to "
                     "length 14");
}

void check_boundary_structure() {
    auto family = verify::directive_family(4, 5);
    bool ok = true;
    for (const auto& d : family) {
        std::size_t n_letters = standard_sequence(d, 6).s(6).size();
        auto events = boundary_classify(d, n_letters);
        auto flips = oc_flips(oc_from_directive(d, n_letters));
        if (events.size() != flips.size()) {
            ok = false;
            break;
        }
        int max_u = 0;
        for (const auto& e : events)
            max_u = std::max(max_u,
                             e.kind == BoundaryKind::closed_to_open ? e.index_n + 1 : e.index_n);
        auto seq = standard_sequence(d, max_u);
        for (std::size_t i = 0; i < events.size() && ok; ++i) {
            const auto& e = events[i];
            bool closing = e.kind == BoundaryKind::closed_to_open;
            ok = e.position == flips[i].first && closing == flips[i].second;
            if (!ok) break;
            int n = e.index_n;
            if (closing)
                ok = e.witness == seq.s(n) + seq.u(n + 1) && is_central(e.witness);
            else
                ok = e.witness == seq.s(n) + seq.u(n) && is_semicentral(e.witness);
        }
        if (!ok) break;
    }
    criterion(10, ok, "boundary events equal oc flips; open->closed witnesses are semicentral "
                      "u_n xy u_n, closed->open witnesses central u_n xy u_{n+1}");
}

void check_reconstruction_roundtrip() {
    auto family = verify::directive_family(4, 5);
    bool ok = reconstruct_from_oc(OcSequence("101001")) == Word("abaaab") &&
              oc_sequence(Word("abaaab")).to_string() == "101001";
    for (std::size_t i = 0; i < 25 && ok; ++i) {
        const auto& d = family[i * family.size() / 25];
        Word w = generate_prefix(d, 200);
        OcSequence oc = oc_sequence(w);
        for (std::size_t len = 1; len <= 200; ++len) {
            if (reconstruct_from_oc(oc.prefix(len)) != w.prefix(len)) {
                ok = false;
                break;
            }
        }
    }
    criterion(11, ok, "oc round-trip on prefixes 1..200 of 25 directive-family words plus the "
                      "worked pair");
}

void check_continuant_lengths() {
    auto family = verify::directive_family(4, 5);
    bool ok = true;
    for (const auto& d : family) {
        auto seq = standard_sequence(d, 8);
        std::vector<int> entries{1};
        for (int n = 0; n <= 8; ++n) {
            if (seq.s(n).size() != continuant(entries)) {
                ok = false;
                break;
            }
            entries.push_back(d.at(static_cast<std::size_t>(n)));
        }
        if (!ok) break;
    }
    criterion(12, ok, "|s_n| = K[1, d_0..d_{n-1}] for n <= 8 across the directive family");
}

} // namespace

int main() {
    check_worked_examples();
    check_fibonacci_factorization();
    check_run_length_formula();
    check_doubled_fibonacci_runs();
    check_closedness_oracles();
    check_boundary_structure();
    check_reconstruction_roundtrip();
    check_continuant_lengths();

    std::printf("%s: %d of 12 criteria failed\n", failures == 0 ? "OK" : "FAILED", failures);
    return failures == 0 ? 0 : 1;
}
