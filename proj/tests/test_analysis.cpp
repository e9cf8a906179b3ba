#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "sturm/analysis.hpp"
#include "sturm/sturmian.hpp"
#include "sturm/verify.hpp"
#include "sturm/word.hpp"

using namespace sturm;

namespace {

const DirectiveSequence kFibonacci({1}, {1});
const DirectiveSequence kTable({2, 2, 1}, {1});

} // namespace

TEST_CASE("continuants") {
    CHECK(continuant({}) == 1);
    CHECK(continuant({3}) == 3);
    CHECK(continuant({1, 2, 1}) == 4);
    CHECK(continuant({1, 1, 1, 1}) == 5);
    CHECK(continuant({1, 2, 0}) == 1);
    CHECK_THROWS_AS(continuant({1, -2}), std::invalid_argument);
}

TEST_CASE("run lengths from a directive") {
    CHECK(run_lengths_from_directive(DirectiveSequence({2, 2, 1}), 3) ==
          std::vector<std::uint64_t>{2, 4, 3});
    CHECK(run_lengths_from_directive(kFibonacci, 5) == std::vector<std::uint64_t>{1, 1, 2, 3, 5});
    CHECK(run_lengths_from_directive(DirectiveSequence({7}), 1) == std::vector<std::uint64_t>{7});
    CHECK_THROWS_AS(run_lengths_from_directive(DirectiveSequence({2}), 3),
                    InsufficientDirectiveError);
    CHECK_THROWS_AS(run_lengths_from_directive(kFibonacci, 0), std::invalid_argument);
}

TEST_CASE("oc bits straight from the directive") {
    CHECK(oc_from_directive(kTable, 15).to_string() == "110011110000111");
    CHECK(oc_from_directive(kFibonacci, 8).to_string() == "10101100");
    CHECK(oc_from_directive(DirectiveSequence({4}, {1}), 4).to_string() == "1111");
    CHECK(oc_from_directive(kFibonacci, 0).empty());
    CHECK_THROWS_AS(oc_from_directive(DirectiveSequence({2}), 30), InsufficientDirectiveError);
}

TEST_CASE("directive route and word route agree on oc") {
    for (const auto& d : verify::directive_family(3, 3)) {
        std::size_t n = standard_sequence(d, 4).s(4).size();
        REQUIRE(oc_from_directive(d, n) == oc_sequence(generate_prefix(d, n)));
    }
}

TEST_CASE("run profiles") {
    RunProfile p = run_profile(kTable, 15);
    CHECK(p.runs == std::vector<Run>{{1, 2}, {0, 2}, {1, 4}, {0, 4}, {1, 3}});
    CHECK(p.predicted_k == std::vector<std::uint64_t>{2, 4, 3});
    CHECK(p.last_run_complete);

    RunProfile q = run_profile(kTable, 16);
    CHECK(q.runs == std::vector<Run>{{1, 2}, {0, 2}, {1, 4}, {0, 4}, {1, 3}, {0, 1}});
    CHECK_FALSE(q.last_run_complete);

    RunProfile empty = run_profile(kTable, 0);
    CHECK(empty.runs.empty());
    CHECK(empty.last_run_complete);
}

TEST_CASE("boundary events for the worked directive") {
    auto events = boundary_classify(kTable, 15);
    REQUIRE(events.size() == 4);

    CHECK(events[0].position == 2);
    CHECK(events[0].kind == BoundaryKind::closed_to_open);
    CHECK(events[0].witness == Word("aa"));
    CHECK(events[0].index_n == 0);

    CHECK(events[1].position == 4);
    CHECK(events[1].kind == BoundaryKind::open_to_closed);
    CHECK(events[1].witness == Word("aaba"));
    CHECK(events[1].index_n == 1);

    CHECK(events[2].position == 8);
    CHECK(events[2].kind == BoundaryKind::closed_to_open);
    CHECK(events[2].witness == Word("aabaabaa"));
    CHECK(events[2].index_n == 1);

    CHECK(events[3].position == 12);
    CHECK(events[3].kind == BoundaryKind::open_to_closed);
    CHECK(events[3].witness == Word("aabaabaaabaa"));
    CHECK(events[3].index_n == 2);
}

TEST_CASE("boundary events for Fibonacci") {
    auto events = boundary_classify(kFibonacci, 4);
    REQUIRE(events.size() == 3);
    CHECK(events[0].position == 1);
    CHECK(events[0].kind == BoundaryKind::closed_to_open);
    CHECK(events[1].position == 2);
    CHECK(events[1].kind == BoundaryKind::open_to_closed);
    CHECK(events[2].position == 3);
    CHECK(events[2].kind == BoundaryKind::closed_to_open);

    CHECK(boundary_classify(DirectiveSequence({4}, {1}), 4).empty());
    CHECK_THROWS_AS(boundary_classify(kFibonacci, 0), std::invalid_argument);
}

TEST_CASE("boundary witnesses carry the u-word structure") {
    for (const auto& d : verify::directive_family(3, 3)) {
        std::size_t n_letters = standard_sequence(d, 4).s(4).size();
        auto events = boundary_classify(d, n_letters);
        auto seq = standard_sequence(d, 5);
        for (const auto& e : events) {
            int n = e.index_n;
            if (e.kind == BoundaryKind::closed_to_open) {
                REQUIRE(e.witness == seq.s(n) + seq.u(n + 1));
                REQUIRE(is_central(e.witness));
            } else {
                REQUIRE(e.witness == seq.s(n) + seq.u(n));
                REQUIRE(is_semicentral(e.witness));
            }
        }
    }
}

TEST_CASE("semicentral prefixes by formula") {
    CHECK(semicentral_prefixes(kTable, 15) ==
          std::vector<Word>{Word("aaba"), Word("aabaabaaabaa")});
    CHECK(semicentral_prefixes(kFibonacci, 12) ==
          std::vector<Word>{Word("ab"), Word("abaa"), Word("abaababa")});
    CHECK(semicentral_prefixes(kFibonacci, 1).empty());
}

TEST_CASE("semicentral prefixes match the predicate filter") {
    for (const auto& d : verify::directive_family(3, 2)) {
        Word w = generate_prefix(d, 50);
        std::vector<Word> expected;
        for (std::size_t len = 2; len <= 50; ++len)
            if (is_semicentral(w.prefix(len))) expected.push_back(w.prefix(len));
        REQUIRE(semicentral_prefixes(d, 50) == expected);
    }
}

TEST_CASE("square factorization of the Fibonacci word") {
    auto rep = square_factorization(kFibonacci, 5);
    REQUIRE(rep.factors.size() == 5);
    std::vector<Word> expected{Word("b"), Word("a"), Word("ba"), Word("aba"), Word("baaba")};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(rep.factors[i].factor == expected[i]);
        CHECK(rep.factors[i].verified);
    }
    CHECK(rep.leading == Word("ab"));
    CHECK(rep.covered_length == 24);
}

TEST_CASE("square factorization of the worked directive") {
    auto rep = square_factorization(kTable, 2);
    REQUIRE(rep.factors.size() == 2);
    CHECK(rep.factors[0].factor == Word("ba"));
    CHECK(rep.factors[1].factor == Word("abaa"));
    CHECK(rep.covered_length == 12);
    CHECK(rep.leading == Word("aaba"));

    Word swapped = swap_first_letter(generate_prefix(kTable, 12));
    CHECK(swapped == Word("babaabaaabaa"));
    Word product = rep.factors[0].factor.times(2) + rep.factors[1].factor.times(2);
    CHECK(product == swapped);
}

TEST_CASE("square factorization with a single factor") {
    auto rep = square_factorization(DirectiveSequence({3}, {1}), 1);
    REQUIRE(rep.factors.size() == 1);
    CHECK(rep.factors[0].factor == Word("baa"));
    CHECK(rep.factors[0].verified);
    CHECK(rep.covered_length == 6);
    CHECK_THROWS_AS(square_factorization(kFibonacci, 0), std::invalid_argument);
}

TEST_CASE("the unswapped word equals leading plus the squares from factor 1 on") {
    for (const auto& d : verify::directive_family(3, 2)) {
        auto rep = square_factorization(d, 3);
        Word rebuilt = rep.leading;
        for (const auto& sf : rep.factors)
            if (sf.index >= 1) rebuilt += sf.factor + sf.factor;
        REQUIRE(rebuilt == generate_prefix(d, rep.covered_length));
        for (const auto& sf : rep.factors) REQUIRE(sf.verified);
    }
}

TEST_CASE("reconstruction from oc bits") {
    CHECK(reconstruct_from_oc(OcSequence("101001")) == Word("abaaab"));
    CHECK(reconstruct_from_oc(OcSequence("1")) == Word("a"));
    CHECK(reconstruct_from_oc(OcSequence("110011110000111")) == Word("aabaabaaabaabaa"));
    // abb is the unique a-initial balanced word with bits 100
    CHECK(reconstruct_from_oc(OcSequence("100")) == Word("abb"));
}

TEST_CASE("reconstruction rejects impossible oc bits") {
    CHECK_THROWS_AS(reconstruct_from_oc(OcSequence()), InvalidOcError);
    CHECK_THROWS_AS(reconstruct_from_oc(OcSequence("011")), InvalidOcError);
    try {
        reconstruct_from_oc(OcSequence("1101"));
        FAIL("expected NotSturmianOcError");
    } catch (const NotSturmianOcError& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("reconstruction round-trips generated prefixes") {
    for (const auto& d : verify::directive_family(2, 2)) {
        Word w = generate_prefix(d, 80);
        OcSequence oc = oc_sequence(w);
        for (std::size_t len = 1; len <= 80; ++len)
            REQUIRE(reconstruct_from_oc(oc.prefix(len)) == w.prefix(len));
    }
}

TEST_CASE("complete runs come in equal-length closed/open pairs") {
    for (const auto& d : verify::directive_family(3, 3)) {
        std::size_t n_bits = standard_sequence(d, 4).s(4).size();
        RunProfile p = run_profile(d, n_bits);
        for (std::size_t i = 0; i < p.runs.size(); ++i) {
            REQUIRE(p.runs[i].bit == (i % 2 == 0 ? 1 : 0));
            if (i + 1 < p.runs.size() || p.last_run_complete)
                REQUIRE(p.runs[i].length == p.predicted_k[i / 2]);
        }
    }
}

TEST_CASE("u words grow by exactly the predicted run lengths") {
    for (const auto& d : verify::directive_family(3, 3)) {
        auto seq = standard_sequence(d, 4);
        auto ks = run_lengths_from_directive(d, 4);
        for (int n = 1; n <= 3; ++n)
            REQUIRE(seq.u(n + 1).size() - seq.u(n).size() == ks[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("Fibonacci product identities") {
    CHECK(fibonacci_identities_check(2));
    CHECK(fibonacci_identities_check(11));
    CHECK(fibonacci_identities_check(50));
    CHECK_THROWS_AS(fibonacci_identities_check(1), std::invalid_argument);
}
