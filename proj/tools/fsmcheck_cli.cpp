// fsmcheck: conformance relations and counterexample construction for
// partial deterministic Mealy machines.
//
// Exit codes: 0 property holds / construction succeeded, 1 property fails
// (witness or counterexample emitted), 2 usage, format, or precondition
// error, 3 search truncated (inconclusive).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fsmcheck/constructions.hpp"
#include "fsmcheck/fsm.hpp"
#include "fsmcheck/reduction.hpp"
#include "fsmcheck/relations.hpp"
#include "fsmcheck/simulation.hpp"
#include "fsmcheck/verdicts.hpp"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitError = 2;
constexpr int kExitInconclusive = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw fsmcheck::FormatError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fsmcheck::Fsm load_fsm(const std::string& path) {
    try {
        return fsmcheck::parse_fsm(read_file(path));
    } catch (const fsmcheck::FormatError& e) {
        throw fsmcheck::FormatError(path + ": " + e.what());
    }
}

fsmcheck::TestSuite load_suite(const std::string& path,
                               std::span<const std::string> alphabet) {
    try {
        return fsmcheck::parse_suite(read_file(path), alphabet);
    } catch (const fsmcheck::FormatError& e) {
        throw fsmcheck::FormatError(path + ": " + e.what());
    }
}

// union of two alphabets, first one's order winning
std::vector<std::string> alphabet_union(const std::vector<std::string>& a,
                                        const std::vector<std::string>& b) {
    std::vector<std::string> u = a;
    for (const auto& s : b)
        if (std::find(u.begin(), u.end(), s) == u.end()) u.push_back(s);
    return u;
}

void emit_machine(const fsmcheck::Fsm& m, const std::string& out_path,
                  const std::string& provenance) {
    std::string text = fsmcheck::fsm_to_text(m, provenance);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw fsmcheck::FormatError("cannot write file: " + out_path);
        out << text;
    }
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace fsmcheck;

    std::string provenance;
    for (int i = 0; i < argc; ++i) {
        if (i) provenance += ' ';
        provenance += argv[i];
    }

    CLI::App app{"conformance relations for partial Mealy machines"};
    app.set_version_flag("--version", "fsmcheck 0.1.0");
    app.require_subcommand(1);

    std::string fsm_path, other_path, suite_path, out_path, word_text, state_name;
    std::string mode, sigma_text, alphabet_out;
    int max_states = 1;
    std::uint64_t cap = 0;
    bool prune = false;

    auto* c_run = app.add_subcommand("run", "feed a word to a machine");
    c_run->add_option("machine", fsm_path)->required();
    c_run->add_option("word", word_text)->required();
    c_run->add_option("--state", state_name, "start state (default: initial)");

    auto* c_equiv = app.add_subcommand("equiv", "output equivalence of two machines");
    auto* c_alike = app.add_subcommand("alike", "blocking-aware alikeness of two machines");
    for (auto* c : {c_equiv, c_alike}) {
        c->add_option("first", fsm_path)->required();
        c->add_option("second", other_path)->required();
        c->add_option("--suite", suite_path, "restrict to the words of this suite");
    }

    auto* c_part = app.add_subcommand("partition", "alikeness classes of a machine's states");
    c_part->add_option("machine", fsm_path)->required();

    auto* c_pred = app.add_subcommand("preduce", "alikeness quotient of the reachable part");
    c_pred->add_option("machine", fsm_path)->required();
    c_pred->add_option("--out", out_path, "write the quotient here (default: stdout)");

    auto* c_bisim = app.add_subcommand("bisim", "bi-similarity of two machines");
    auto* c_iso = app.add_subcommand("iso", "isomorphism of two reachable machines");
    for (auto* c : {c_bisim, c_iso}) {
        c->add_option("first", fsm_path)->required();
        c->add_option("second", other_path)->required();
    }

    auto* c_bound = app.add_subcommand("bound", "state bound refuted by refute-complete");
    auto* c_refc = app.add_subcommand("refute-complete",
                                      "build a suite-equivalent, non-equivalent machine");
    auto* c_refp = app.add_subcommand("refute-perfect",
                                      "build a suite-alike, non-alike tree machine");
    auto* c_verify = app.add_subcommand("verify", "exhaustive bounded completeness/perfectness");
    for (auto* c : {c_bound, c_refc, c_refp, c_verify}) {
        c->add_option("spec", fsm_path)->required();
        c->add_option("suite", suite_path)->required();
    }
    c_refc->add_flag("--prune", prune, "drop unreachable states");
    c_refc->add_option("--out", out_path, "write the counterexample here (default: stdout)");
    c_refp->add_option("--sigma", sigma_text, "word to differ on")->required();
    c_refp->add_option("--out", out_path, "write the counterexample here (default: stdout)");
    c_verify->add_option("-m,--max-states", max_states, "candidate state bound")->required();
    c_verify->add_option("--mode", mode, "complete|perfect")
        ->required()
        ->check(CLI::IsMember({"complete", "perfect"}));
    c_verify->add_option("--cap", cap, "stop after this many candidates (inconclusive)");
    c_verify->add_option("--alphabet-out", alphabet_out,
                         "comma-separated candidate output alphabet");
    c_verify->add_option("--out", out_path, "write a counterexample here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (*c_run) {
            Fsm m = load_fsm(fsm_path);
            StateId s = state_name.empty() ? m.initial : m.state_index_checked(state_name);
            Word w = parse_word(word_text, m.inputs);
            RunResult r = run(m, s, w);
            if (r.is_completed) {
                std::cout << "COMPLETED " << m.states[r.target] << " " << format_word(r.output)
                          << "\n";
                return kExitHolds;
            }
            std::cout << "BLOCKED " << r.defined_prefix << "\n";
            return kExitFails;
        }

        if (*c_equiv || *c_alike) {
            Fsm a = load_fsm(fsm_path);
            Fsm b = load_fsm(other_path);
            Verdict v;
            if (!suite_path.empty()) {
                TestSuite t = load_suite(suite_path, alphabet_union(a.inputs, b.inputs));
                v = *c_equiv ? equiv_under_suite(a, b, t) : alike_under_suite(a, b, t);
            } else {
                v = *c_equiv ? equiv_total(a, b) : alike_total(a, b);
            }
            std::cout << v.to_line() << "\n";
            return v.holds ? kExitHolds : kExitFails;
        }

        if (*c_part) {
            Fsm m = load_fsm(fsm_path);
            for (const auto& block : alikeness_partition(m)) {
                std::cout << "block";
                for (StateId s : block) std::cout << ' ' << m.states[s];
                std::cout << "\n";
            }
            return kExitHolds;
        }

        if (*c_pred) {
            Fsm m = load_fsm(fsm_path);
            emit_machine(p_reduce(m), out_path, provenance);
            return kExitHolds;
        }

        if (*c_bisim) {
            Fsm a = load_fsm(fsm_path);
            Fsm b = load_fsm(other_path);
            bool ok = bisimilar(a, b);
            std::cout << (ok ? "HOLDS" : "FAILS") << "\n";
            return ok ? kExitHolds : kExitFails;
        }

        if (*c_iso) {
            Fsm a = load_fsm(fsm_path);
            Fsm b = load_fsm(other_path);
            auto rel = isomorphic(a, b);
            if (!rel) {
                std::cout << "FAILS\n";
                return kExitFails;
            }
            std::cout << "HOLDS\n" << rel->to_lines(a, b);
            return kExitHolds;
        }

        if (*c_bound) {
            Fsm m = load_fsm(fsm_path);
            TestSuite t = load_suite(suite_path, m.inputs);
            std::cout << completeness_bound(m, t) << "\n";
            return kExitHolds;
        }

        if (*c_refc) {
            Fsm m = load_fsm(fsm_path);
            TestSuite t = load_suite(suite_path, m.inputs);
            Fsm n = completeness_counterexample(m, t, prune);
            emit_machine(n, out_path, provenance);
            std::cerr << "refuted: " << n.num_states()
                      << "-state machine agrees with the suite but not with the spec\n";
            return kExitFails;
        }

        if (*c_refp) {
            Fsm m = load_fsm(fsm_path);
            TestSuite t = load_suite(suite_path, m.inputs);
            Word sigma = parse_word(sigma_text, m.inputs);
            TreeCounterexample tc = perfectness_counterexample(m, t, sigma);
            emit_machine(tc.machine, out_path, provenance);
            std::cerr << "refuted: " << tc.machine.num_states()
                      << "-state tree is suite-alike but not alike to the spec\n";
            return kExitFails;
        }

        if (*c_verify) {
            Fsm m = load_fsm(fsm_path);
            TestSuite t = load_suite(suite_path, m.inputs);
            SearchConfig cfg;
            cfg.max_states = max_states;
            if (cap > 0) cfg.candidate_cap = cap;
            if (!alphabet_out.empty()) cfg.outputs = split_commas(alphabet_out);
            SearchVerdict v = mode == "complete" ? check_m_complete(m, t, cfg)
                                                 : check_m_perfect(m, t, cfg);
            std::cout << "checked " << v.examined << " candidates\n";
            switch (v.outcome) {
                case SearchVerdict::Outcome::Holds:
                    std::cout << "HOLDS\n";
                    return kExitHolds;
                case SearchVerdict::Outcome::Inconclusive:
                    std::cout << "INCONCLUSIVE\n";
                    return kExitInconclusive;
                case SearchVerdict::Outcome::Fails:
                    std::cout << "FAILS\n";
                    emit_machine(*v.counterexample, out_path, provenance);
                    return kExitFails;
            }
        }
    } catch (const fsmcheck::FsmError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
