#include "sturm/verify.hpp"

#include <cstdint>
#include <string>

#include "sturm/analysis.hpp"
#include "sturm/oracle.hpp"
#include "sturm/sturmian.hpp"
#include "sturm/word.hpp"

namespace sturm::verify {

namespace {

std::string nth_word(std::size_t len, std::uint32_t x) {
    std::string s(len, 'a');
    for (std::size_t i = 0; i < len; ++i)
        if ((x >> (len - 1 - i)) & 1u) s[i] = 'b';
    return s;
}

template <typename Fn>
bool for_each_word(std::size_t max_len, Fn&& fn) {
    for (std::size_t len = 1; len <= max_len; ++len)
        for (std::uint32_t x = 0; x < (1u << len); ++x)
            if (!fn(Word(nth_word(len, x)))) return false;
    return true;
}

SuiteResult closed_oracle_equivalence(const Options& opt) {
    SuiteResult r{"closed-oracle-equivalence", true, ""};
    std::size_t checked = 1;
    if (!(is_closed(Word()) && oracle::naive_is_closed(Word()))) {
        r.passed = false;
        r.detail = "empty word disagrees";
        return r;
    }
    r.passed = for_each_word(opt.max_word_len, [&](const Word& w) {
        ++checked;
        bool fast = is_closed(w);
        if (fast != oracle::naive_is_closed(w) || fast != oracle::is_periodic_like(w)) {
            r.detail = "disagreement on w=" + w.str();
            return false;
        }
        return true;
    });
    if (r.passed) r.detail = std::to_string(checked) + " words";
    return r;
}

SuiteResult unique_closed_extension(const Options& opt) {
    SuiteResult r{"unique-closed-extension", true, ""};
    std::size_t checked = 0;
    r.passed = for_each_word(opt.max_word_len, [&](const Word& w) {
        ++checked;
        Word wa = w, wb = w;
        wa.append('a');
        wb.append('b');
        if (is_closed(wa) && is_closed(wb)) {
            r.detail = "both extensions of w=" + w.str() + " are closed";
            return false;
        }
        return true;
    });
    if (r.passed) r.detail = std::to_string(checked) + " words";
    return r;
}

SuiteResult closed_extension_period(const Options& opt) {
    SuiteResult r{"closed-extension-period", true, ""};
    std::size_t checked = 0;
    r.passed = for_each_word(opt.max_word_len, [&](const Word& w) {
        if (!is_closed(w)) return true;
        ++checked;
        for (char x : {'a', 'b'}) {
            Word wx = w;
            wx.append(x);
            if (is_closed(wx) != (min_period(wx) == min_period(w))) {
                r.detail = "w=" + w.str() + " x=" + x;
                return false;
            }
        }
        return true;
    });
    if (r.passed) r.detail = std::to_string(checked) + " closed words";
    return r;
}

SuiteResult powers_are_closed(const Options& opt) {
    SuiteResult r{"powers-are-closed", true, ""};
    std::size_t checked = 0;
    std::size_t limit = opt.max_word_len + 4;
    r.passed = for_each_word(limit / 2, [&](const Word& v) {
        for (std::size_t k = 2; v.size() * k <= limit; ++k) {
            ++checked;
            if (!is_closed(v.times(k))) {
                r.detail = "open power: v=" + v.str() + " k=" + std::to_string(k);
                return false;
            }
        }
        return true;
    });
    if (r.passed) r.detail = std::to_string(checked) + " powers";
    return r;
}

SuiteResult border_occurrence_count(const Options& opt) {
    SuiteResult r{"border-occurrence-count", true, ""};
    std::size_t checked = 0;
    r.passed = for_each_word(std::min<std::size_t>(opt.max_word_len, 12), [&](const Word& w) {
        ++checked;
        auto occ = occurrences(w, longest_border(w));
        if (occ.front() != 0 || occ.back() != w.size() - longest_border(w).size() ||
            is_closed(w) != (occ.size() == 2)) {
            r.detail = "w=" + w.str();
            return false;
        }
        return true;
    });
    if (r.passed) r.detail = std::to_string(checked) + " words";
    return r;
}

SuiteResult central_closed_semicentral_open(const Options& opt) {
    SuiteResult r{"central-closed-semicentral-open", true, ""};
    std::size_t centrals = 0, semicentrals = 0;
    r.passed = for_each_word(std::min<std::size_t>(opt.max_word_len, 12), [&](const Word& w) {
        if (is_central(w)) {
            ++centrals;
            if (!is_closed(w)) {
                r.detail = "open central word " + w.str();
                return false;
            }
        }
        if (is_semicentral(w)) {
            ++semicentrals;
            if (is_closed(w)) {
                r.detail = "closed semicentral word " + w.str();
                return false;
            }
        }
        return true;
    });
    if (r.passed)
        r.detail = std::to_string(centrals) + " central, " + std::to_string(semicentrals) +
                   " semicentral words";
    return r;
}

SuiteResult standard_word_characterization(const Options& opt) {
    SuiteResult r{"standard-word-characterization", true, ""};
    std::size_t len = std::min<std::size_t>(opt.max_word_len, 12);
    auto enumerated = oracle::enumerate_standard_words(len);
    std::size_t hits = 0;
    r.passed = for_each_word(len, [&](const Word& w) {
        bool listed = std::binary_search(enumerated.begin(), enumerated.end(), w);
        if (listed) ++hits;
        if (is_standard(w) != listed) {
            r.detail = "w=" + w.str() + (listed ? " enumerated but rejected" : " accepted but never generated");
            return false;
        }
        return true;
    });
    if (r.passed) r.detail = std::to_string(hits) + " standard words up to length " + std::to_string(len);
    return r;
}

SuiteResult run_length_formula(const Options& opt) {
    SuiteResult r{"run-length-formula", true, ""};
    auto family = directive_family(opt.max_entry, opt.max_terms);
    for (const auto& d : family) {
        std::size_t n_letters = standard_sequence(d, opt.max_terms + 1).s(opt.max_terms + 1).size();
        if (oc_from_directive(d, n_letters) != oc_sequence(generate_prefix(d, n_letters))) {
            r.passed = false;
            r.detail = "oc mismatch for directive " + d.to_string();
            return r;
        }
    }
    r.detail = std::to_string(family.size()) + " directives";
    return r;
}

SuiteResult boundary_structure(const Options& opt) {
    SuiteResult r{"boundary-structure", true, ""};
    auto family = directive_family(opt.max_entry, opt.max_terms);
    std::size_t total_events = 0;
    for (const auto& d : family) {
        std::size_t n_letters = standard_sequence(d, opt.max_terms + 1).s(opt.max_terms + 1).size();
        auto events = boundary_classify(d, n_letters);
        OcSequence oc = oc_from_directive(d, n_letters);
        std::size_t at = 0;
        int max_u = 0;
        for (const auto& e : events)
            max_u = std::max(max_u, e.kind == BoundaryKind::closed_to_open ? e.index_n + 1 : e.index_n);
        auto seq = standard_sequence(d, max_u);
        for (const auto& e : events) {
            ++total_events;
            while (at + 1 < n_letters && oc.bit(at + 1) == oc.bit(at + 2)) ++at;
            ++at; // position of the next flip
            bool kind_ok = e.kind == (oc.bit(e.position) ? BoundaryKind::closed_to_open
                                                         : BoundaryKind::open_to_closed);
            if (e.position != at || !kind_ok) {
                r.passed = false;
                r.detail = "event/flip mismatch at position " + std::to_string(e.position) +
                           " for " + d.to_string();
                return r;
            }
            int n = e.index_n;
            Word expected = e.kind == BoundaryKind::closed_to_open ? seq.s(n) + seq.u(n + 1)
                                                                   : seq.s(n) + seq.u(n);
            bool predicate = e.kind == BoundaryKind::closed_to_open ? is_central(e.witness)
                                                                    : is_semicentral(e.witness);
            if (e.witness != expected || !predicate) {
                r.passed = false;
                r.detail = "bad witness at position " + std::to_string(e.position) + " for " +
                           d.to_string();
                return r;
            }
        }
        // no flips after the last event
        while (at + 1 < n_letters) {
            if (oc.bit(at + 1) != oc.bit(at + 2)) {
                r.passed = false;
                r.detail = "unreported flip at " + std::to_string(at + 1) + " for " + d.to_string();
                return r;
            }
            ++at;
        }
    }
    r.detail = std::to_string(total_events) + " events over " + std::to_string(family.size()) +
               " directives";
    return r;
}

SuiteResult semicentral_prefix_formula(const Options& opt) {
    SuiteResult r{"semicentral-prefix-formula", true, ""};
    auto family = directive_family(opt.max_entry, opt.max_terms);
    for (const auto& d : family) {
        std::size_t n_letters =
            std::min<std::size_t>(150, standard_sequence(d, opt.max_terms + 1).s(opt.max_terms + 1).size());
        auto by_formula = semicentral_prefixes(d, n_letters);
        Word w = generate_prefix(d, n_letters);
        std::vector<Word> by_filter;
        for (std::size_t len = 1; len <= n_letters; ++len) {
            Word p = w.prefix(len);
            if (is_semicentral(p)) by_filter.push_back(std::move(p));
        }
        if (by_formula != by_filter) {
            r.passed = false;
            r.detail = "formula/filter mismatch for " + d.to_string();
            return r;
        }
    }
    r.detail = std::to_string(family.size()) + " directives";
    return r;
}

SuiteResult square_factorization_suite(const Options& opt) {
    SuiteResult r{"square-factorization", true, ""};
    auto family = directive_family(opt.max_entry, opt.max_terms);
    std::size_t m = static_cast<std::size_t>(opt.max_terms) + 1;
    for (const auto& d : family) {
        auto rep = square_factorization(d, m);
        auto seq = standard_sequence(d, static_cast<int>(m));
        std::string rebuilt = rep.leading.str();
        for (const auto& sf : rep.factors) {
            if (!sf.verified) {
                r.passed = false;
                r.detail = "unverified factor " + std::to_string(sf.index) + " for " + d.to_string();
                return r;
            }
            if (sf.index >= 1) {
                int n = sf.index;
                Word alt = reversal(seq.s(n).times(static_cast<std::size_t>(d.at(static_cast<std::size_t>(n)) - 1)) +
                                    seq.s(n - 1));
                if (sf.factor != alt || !is_standard(reversal(sf.factor))) {
                    r.passed = false;
                    r.detail = "factor " + std::to_string(n) + " is not a reversed standard word for " +
                               d.to_string();
                    return r;
                }
                rebuilt += sf.factor.str();
                rebuilt += sf.factor.str();
            }
        }
        if (Word(rebuilt) != generate_prefix(d, rep.covered_length)) {
            r.passed = false;
            r.detail = "leading-form product mismatch for " + d.to_string();
            return r;
        }
    }
    r.detail = std::to_string(family.size()) + " directives, " + std::to_string(m) + " factors each";
    return r;
}

SuiteResult oc_roundtrip(const Options& opt) {
    SuiteResult r{"oc-roundtrip", true, ""};
    auto family = directive_family(opt.max_entry, opt.max_terms);
    std::size_t words = std::min(opt.roundtrip_words, family.size());
    std::size_t checked = 0;
    for (std::size_t i = 0; i < words; ++i) {
        const auto& d = family[i * family.size() / words];
        Word w = generate_prefix(d, opt.roundtrip_prefix_len);
        OcSequence oc = oc_sequence(w);
        for (std::size_t len = 1; len <= w.size(); ++len) {
            ++checked;
            if (reconstruct_from_oc(oc.prefix(len)) != w.prefix(len)) {
                r.passed = false;
                r.detail = "roundtrip failed at length " + std::to_string(len) + " for " +
                           d.to_string();
                return r;
            }
        }
    }
    r.detail = std::to_string(checked) + " prefixes over " + std::to_string(words) + " words";
    return r;
}

SuiteResult continuant_lengths(const Options& opt) {
    SuiteResult r{"continuant-lengths", true, ""};
    auto family = directive_family(opt.max_entry, opt.max_terms);
    int top = opt.max_terms + 2;
    for (const auto& d : family) {
        auto seq = standard_sequence(d, top);
        std::vector<int> entries{1};
        for (int n = 0; n <= top; ++n) {
            if (seq.s(n).size() != continuant(entries)) {
                r.passed = false;
                r.detail = "|s_" + std::to_string(n) + "| mismatch for " + d.to_string();
                return r;
            }
            entries.push_back(d.at(static_cast<std::size_t>(n)));
        }
    }
    r.detail = std::to_string(family.size()) + " directives, indexes up to " + std::to_string(top);
    return r;
}

SuiteResult run_pairing(const Options& opt) {
    SuiteResult r{"run-pairing", true, ""};
    auto family = directive_family(opt.max_entry, opt.max_terms);
    for (const auto& d : family) {
        std::size_t n_bits = standard_sequence(d, opt.max_terms + 1).s(opt.max_terms + 1).size();
        RunProfile profile = run_profile(d, n_bits);
        for (std::size_t i = 0; i < profile.runs.size(); ++i) {
            const Run& run = profile.runs[i];
            bool last = i + 1 == profile.runs.size();
            if (run.bit != (i % 2 == 0 ? 1 : 0) ||
                ((!last || profile.last_run_complete) && run.length != profile.predicted_k[i / 2])) {
                r.passed = false;
                r.detail = "run " + std::to_string(i) + " breaks the pairing for " + d.to_string();
                return r;
            }
        }
    }
    r.detail = std::to_string(family.size()) + " directives";
    return r;
}

SuiteResult central_prefix_growth(const Options& opt) {
    SuiteResult r{"central-prefix-growth", true, ""};
    auto family = directive_family(opt.max_entry, opt.max_terms);
    for (const auto& d : family) {
        auto seq = standard_sequence(d, opt.max_terms + 1);
        auto ks = run_lengths_from_directive(d, static_cast<std::size_t>(opt.max_terms) + 1);
        for (int n = 1; n <= opt.max_terms; ++n) {
            if (seq.u(n + 1).size() - seq.u(n).size() != ks[static_cast<std::size_t>(n)]) {
                r.passed = false;
                r.detail = "|u_{n+1}|-|u_n| != k_n at n=" + std::to_string(n) + " for " +
                           d.to_string();
                return r;
            }
        }
    }
    r.detail = std::to_string(family.size()) + " directives";
    return r;
}

SuiteResult factor_complexity_bound(const Options& opt) {
    SuiteResult r{"factor-complexity-bound", true, ""};
    auto family = directive_family(opt.max_entry, opt.max_terms);
    for (const auto& d : family) {
        Word w = generate_prefix(d, 100);
        auto profile = oracle::complexity_profile(w);
        for (std::size_t k = 1; k <= profile.size(); ++k) {
            if (profile[k - 1] > k + 1) {
                r.passed = false;
                r.detail = std::to_string(profile[k - 1]) + " factors of length " +
                           std::to_string(k) + " for " + d.to_string();
                return r;
            }
        }
    }
    r.detail = std::to_string(family.size()) + " directives, 100-letter prefixes";
    return r;
}

SuiteResult fibonacci_products(const Options&) {
    SuiteResult r{"fibonacci-products", true, ""};
    r.passed = fibonacci_identities_check(200);
    r.detail = r.passed ? "200 letters" : "product identities fail";
    return r;
}

} // namespace

std::vector<DirectiveSequence> directive_family(int max_entry, int max_terms) {
    std::vector<DirectiveSequence> family;
    std::vector<int> head;
    auto rec = [&](auto&& self) -> void {
        if (!head.empty()) family.emplace_back(head, std::vector<int>{1});
        if (static_cast<int>(head.size()) == max_terms) return;
        for (int e = 1; e <= max_entry; ++e) {
            head.push_back(e);
            self(self);
            head.pop_back();
        }
    };
    rec(rec);
    return family;
}

std::vector<SuiteResult> run_all(const Options& options) {
    return {
        closed_oracle_equivalence(options),
        unique_closed_extension(options),
        closed_extension_period(options),
        powers_are_closed(options),
        border_occurrence_count(options),
        central_closed_semicentral_open(options),
        standard_word_characterization(options),
        run_length_formula(options),
        boundary_structure(options),
        semicentral_prefix_formula(options),
        square_factorization_suite(options),
        oc_roundtrip(options),
        continuant_lengths(options),
        run_pairing(options),
        central_prefix_growth(options),
        factor_complexity_bound(options),
        fibonacci_products(options),
    };
}

} // namespace sturm::verify
