// sturm — generate standard Sturmian words and analyze the open/closed
// structure of their prefixes.

#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "sturm/analysis.hpp"
#include "sturm/directive.hpp"
#include "sturm/sturmian.hpp"
#include "sturm/verify.hpp"
#include "sturm/word.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInconsistent = 1; // mismatch, failed suite, impossible oc
constexpr int kExitUsage = 2;        // bad flags, parse errors, insufficient directive

std::string kind_name(sturm::BoundaryKind kind) {
    return kind == sturm::BoundaryKind::open_to_closed ? "open->closed" : "closed->open";
}

std::string kind_id(sturm::BoundaryKind kind) {
    return kind == sturm::BoundaryKind::open_to_closed ? "open_to_closed" : "closed_to_open";
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// aligned n / w / oc rows, column i+1 as wide as the position number
void print_position_table(const std::string& w, const std::string& bits) {
    std::ostringstream row_n, row_w, row_oc;
    row_n << "n  ";
    row_w << "w  ";
    row_oc << "oc ";
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::string pos = std::to_string(i + 1);
        row_n << ' ' << pos;
        row_w << ' ' << std::string(pos.size() - 1, ' ') << w[i];
        row_oc << ' ' << std::string(pos.size() - 1, ' ') << bits[i];
    }
    std::cout << row_n.str() << "\n" << row_w.str() << "\n" << row_oc.str() << "\n";
}

struct OcView {
    std::string word;
    std::string bits;
    std::vector<sturm::Run> run_list;
    bool from_directive = false;
    std::string directive;
    std::vector<std::uint64_t> predicted_k;
    bool last_run_complete = true;
    bool match = true;
};

int print_oc(const OcView& view, const std::string& format) {
    if (format == "json") {
        json j;
        j["word"] = view.word;
        j["bits"] = view.bits;
        json jruns = json::array();
        for (const auto& run : view.run_list)
            jruns.push_back({{"bit", run.bit}, {"length", run.length}});
        j["runs"] = jruns;
        if (view.from_directive) {
            j["directive"] = view.directive;
            j["predicted_k"] = view.predicted_k;
            j["last_run_complete"] = view.last_run_complete;
            j["match"] = view.match;
        }
        emit(j);
    } else if (format == "csv") {
        std::cout << "run,bit,length\n";
        for (std::size_t i = 0; i < view.run_list.size(); ++i)
            std::cout << i << ',' << view.run_list[i].bit << ',' << view.run_list[i].length << "\n";
    } else {
        if (view.word.empty()) return view.match ? kExitOk : kExitInconsistent;
        if (view.word.size() <= 60) print_position_table(view.word, view.bits);
        std::cout << "w  = " << view.word << "\n";
        std::cout << "oc = " << view.bits << "\n";
        std::cout << "runs:";
        for (const auto& run : view.run_list)
            std::cout << " (" << run.bit << "," << run.length << ")";
        std::cout << "\n";
        if (view.from_directive) {
            std::cout << "k  = [";
            for (std::size_t i = 0; i < view.predicted_k.size(); ++i)
                std::cout << (i ? "," : "") << view.predicted_k[i];
            std::cout << "]" << (view.last_run_complete ? "" : " (last run truncated)") << "\n";
            std::cout << (view.match ? "MATCH" : "MISMATCH") << "\n";
        }
    }
    return view.match ? kExitOk : kExitInconsistent;
}

int cmd_generate(const std::string& directive, std::size_t length, const std::string& format) {
    auto d = sturm::DirectiveSequence::parse(directive);
    sturm::Word w = sturm::generate_prefix(d, length);
    if (format == "json") {
        emit(json{{"directive", d.to_string()}, {"length", length}, {"word", w.str()}});
    } else if (format == "csv") {
        std::cout << "word\n" << w.str() << "\n";
    } else {
        std::cout << w.str() << "\n";
    }
    return kExitOk;
}

int cmd_oc(const std::string& word_text, const std::string& directive, std::size_t length,
           const std::string& format) {
    OcView view;
    if (!directive.empty()) {
        auto d = sturm::DirectiveSequence::parse(directive);
        sturm::Word w = sturm::generate_prefix(d, length);
        sturm::OcSequence direct = sturm::oc_sequence(w);
        sturm::RunProfile profile = sturm::run_profile(d, length);
        view.word = w.str();
        view.bits = direct.to_string();
        view.run_list = sturm::runs(direct);
        view.from_directive = true;
        view.directive = d.to_string();
        view.predicted_k = profile.predicted_k;
        view.last_run_complete = profile.last_run_complete;
        view.match = sturm::oc_from_directive(d, length) == direct;
    } else {
        sturm::Word w(word_text);
        sturm::OcSequence oc = sturm::oc_sequence(w);
        view.word = w.str();
        view.bits = oc.to_string();
        view.run_list = sturm::runs(oc);
    }
    return print_oc(view, format);
}

int cmd_classify(const std::string& directive, std::size_t length, const std::string& format) {
    auto d = sturm::DirectiveSequence::parse(directive);
    sturm::Word w = sturm::generate_prefix(d, length);
    sturm::OcSequence oc = sturm::oc_sequence(w);
    auto events = sturm::boundary_classify(d, length);

    auto event_at = [&](std::size_t position) -> const sturm::BoundaryEvent* {
        for (const auto& e : events)
            if (e.position == position) return &e;
        return nullptr;
    };

    if (format == "json") {
        json rows = json::array();
        for (std::size_t i = 1; i <= length; ++i) {
            json row{{"length", i}, {"closed", oc.bit(i)}, {"prefix", w.prefix(i).str()}};
            if (const auto* e = event_at(i))
                row["event"] = json{{"kind", kind_id(e->kind)}, {"index_n", e->index_n}};
            else
                row["event"] = nullptr;
            rows.push_back(row);
        }
        emit(json{{"directive", d.to_string()}, {"length", length}, {"rows", rows}});
    } else if (format == "csv") {
        std::cout << "length,state,event,index_n,prefix\n";
        for (std::size_t i = 1; i <= length; ++i) {
            const auto* e = event_at(i);
            std::cout << i << ',' << (oc.bit(i) ? "closed" : "open") << ','
                      << (e ? kind_id(e->kind) : "") << ','
                      << (e ? std::to_string(e->index_n) : "") << ',' << w.prefix(i).str() << "\n";
        }
    } else {
        std::cout << "length  state   boundary            prefix\n";
        for (std::size_t i = 1; i <= length; ++i) {
            const auto* e = event_at(i);
            std::ostringstream line;
            line << i;
            std::string num = line.str();
            std::string state = oc.bit(i) ? "closed" : "open";
            std::string boundary = e ? kind_name(e->kind) + " (n=" + std::to_string(e->index_n) + ")" : "";
            std::cout << num << std::string(8 - num.size(), ' ') << state
                      << std::string(8 - state.size(), ' ') << boundary
                      << std::string(boundary.size() < 20 ? 20 - boundary.size() : 1, ' ')
                      << w.prefix(i).str() << "\n";
        }
    }
    return kExitOk;
}

int cmd_factorize(const std::string& directive, std::size_t count, const std::string& format) {
    auto d = sturm::DirectiveSequence::parse(directive);
    auto rep = sturm::square_factorization(d, count);
    bool all = true;
    for (const auto& sf : rep.factors) all = all && sf.verified;

    if (format == "json") {
        json jf = json::array();
        for (const auto& sf : rep.factors)
            jf.push_back({{"n", sf.index}, {"factor", sf.factor.str()}, {"verified", sf.verified}});
        emit(json{{"directive", d.to_string()},
                  {"leading", rep.leading.str()},
                  {"covered_length", rep.covered_length},
                  {"factors", jf},
                  {"all_verified", all}});
    } else if (format == "csv") {
        std::cout << "n,factor,length,verified\n";
        for (const auto& sf : rep.factors)
            std::cout << sf.index << ',' << sf.factor.str() << ',' << sf.factor.size() << ','
                      << (sf.verified ? "yes" : "NO") << "\n";
    } else {
        std::cout << "n   factor\n";
        for (const auto& sf : rep.factors) {
            std::string num = std::to_string(sf.index);
            std::cout << num << std::string(4 - std::min<std::size_t>(3, num.size()), ' ')
                      << sf.factor.str() << (sf.verified ? "" : "   [NOT VERIFIED]") << "\n";
        }
        std::cout << "leading: " << rep.leading.str() << "\n";
        std::cout << "covered: " << rep.covered_length << " letters\n";
        std::cout << (all ? "all factors verified" : "VERIFICATION FAILED") << "\n";
    }
    return all ? kExitOk : kExitInconsistent;
}

int cmd_reconstruct(const std::string& bits_text, const std::string& format) {
    sturm::OcSequence bits(bits_text);
    sturm::Word w = sturm::reconstruct_from_oc(bits);
    if (format == "json")
        emit(json{{"bits", bits.to_string()}, {"word", w.str()}});
    else if (format == "csv")
        std::cout << "word\n" << w.str() << "\n";
    else
        std::cout << w.str() << "\n";
    return kExitOk;
}

int cmd_verify(const sturm::verify::Options& options, const std::string& format) {
    auto results = sturm::verify::run_all(options);
    std::size_t failures = 0;
    for (const auto& r : results)
        if (!r.passed) ++failures;

    if (format == "json") {
        json suites = json::array();
        for (const auto& r : results)
            suites.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        emit(json{{"suites", suites}, {"passed", failures == 0}});
    } else if (format == "csv") {
        std::cout << "suite,passed\n";
        for (const auto& r : results)
            std::cout << r.name << ',' << (r.passed ? "1" : "0") << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name;
            std::cout << std::string(r.name.size() < 34 ? 34 - r.name.size() : 1, ' ');
            std::cout << r.detail << "\n";
        }
        std::cout << (failures == 0 ? "RESULT: PASS" : "RESULT: FAIL") << " ("
                  << results.size() - failures << "/" << results.size() << " suites)\n";
    }
    return failures == 0 ? kExitOk : kExitInconsistent;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"open/closed prefix structure of standard Sturmian words"};
    app.require_subcommand(1);

    std::string directive;
    std::string word_text;
    std::string bits_text;
    std::string format = "text";
    std::size_t length = 0;
    std::size_t count = 0;
    sturm::verify::Options verify_options;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->capture_default_str();
    };

    auto* generate = app.add_subcommand("generate", "print a prefix of the standard Sturmian word");
    generate->add_option("--directive", directive, "directive sequence, e.g. \"2,2,(1)\"")->required();
    generate->add_option("--length", length, "number of letters")->required();
    add_format(generate);

    auto* oc = app.add_subcommand("oc", "closedness bits of the prefixes of a word");
    oc->add_option("word", word_text, "word over {a,b}");
    oc->add_option("--directive", directive, "generate the word from a directive instead");
    oc->add_option("--length", length, "letters to generate (directive mode)");
    add_format(oc);

    auto* classify = app.add_subcommand("classify", "per-prefix open/closed table with run boundaries");
    classify->add_option("--directive", directive)->required();
    classify->add_option("--length", length)->required()->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20));
    add_format(classify);

    auto* factorize = app.add_subcommand("factorize", "square factorization into reversed standard words");
    factorize->add_option("--directive", directive)->required();
    factorize->add_option("--count", count, "number of factors")
        ->required()
        ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
    add_format(factorize);

    auto* reconstruct = app.add_subcommand("reconstruct", "rebuild the a-initial word from its oc bits");
    reconstruct->add_option("bits", bits_text, "oc sequence, e.g. 101001")->required();
    add_format(reconstruct);

    auto* verify = app.add_subcommand("verify", "run the invariant suites");
    verify->add_option("--max-word-len", verify_options.max_word_len, "exhaustive sweep bound")
        ->check(CLI::Range(std::size_t{1}, std::size_t{18}))
        ->capture_default_str();
    verify->add_option("--max-entry", verify_options.max_entry, "largest directive entry")
        ->check(CLI::Range(1, 6))
        ->capture_default_str();
    verify->add_option("--max-terms", verify_options.max_terms, "longest directive head")
        ->check(CLI::Range(1, 6))
        ->capture_default_str();
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (generate->parsed()) return cmd_generate(directive, length, format);
        if (oc->parsed()) {
            bool has_word = oc->count("word") > 0;
            bool has_directive = oc->count("--directive") > 0;
            if (has_word == has_directive) {
                std::cerr << "oc: give either a word or --directive with --length\n";
                return kExitUsage;
            }
            if (has_directive && oc->count("--length") == 0) {
                std::cerr << "oc: --directive needs --length\n";
                return kExitUsage;
            }
            return cmd_oc(word_text, has_directive ? directive : "", length, format);
        }
        if (classify->parsed()) return cmd_classify(directive, length, format);
        if (factorize->parsed()) return cmd_factorize(directive, count, format);
        if (reconstruct->parsed()) return cmd_reconstruct(bits_text, format);
        if (verify->parsed()) return cmd_verify(verify_options, format);
    } catch (const sturm::NotSturmianOcError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const sturm::InvalidOcError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const sturm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
