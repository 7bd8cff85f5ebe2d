// Python bindings for the fsmcheck core. Words cross the boundary as lists
// of symbol strings, suites as lists of words; machines and verdicts are
// thin wrappers over the C++ types.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fsmcheck/constructions.hpp"
#include "fsmcheck/fsm.hpp"
#include "fsmcheck/reduction.hpp"
#include "fsmcheck/relations.hpp"
#include "fsmcheck/simulation.hpp"
#include "fsmcheck/verdicts.hpp"

namespace py = pybind11;
using namespace fsmcheck;

namespace {

Word to_word(const std::vector<std::string>& syms) { return Word(syms); }

TestSuite to_suite(const std::vector<std::vector<std::string>>& words) {
    std::vector<Word> ws;
    ws.reserve(words.size());
    for (const auto& w : words) ws.emplace_back(w);
    return TestSuite::of(std::move(ws));
}

py::object verdict_to_py(const Verdict& v) {
    py::dict d;
    d["holds"] = v.holds;
    d["witness"] = v.witness ? py::cast(v.witness->symbols) : py::none();
    d["kind"] = v.kind ? py::cast(witness_kind_name(*v.kind)) : py::none();
    d["line"] = v.to_line();
    return d;
}

py::object search_verdict_to_py(const SearchVerdict& v) {
    py::dict d;
    d["outcome"] = v.outcome == SearchVerdict::Outcome::Holds    ? "holds"
                   : v.outcome == SearchVerdict::Outcome::Fails ? "fails"
                                                                 : "inconclusive";
    d["examined"] = v.examined;
    d["counterexample"] = v.counterexample ? py::cast(*v.counterexample) : py::none();
    return d;
}

SearchConfig make_config(int max_states, const std::vector<std::string>& inputs,
                         const std::vector<std::string>& outputs,
                         std::optional<std::uint64_t> cap,
                         std::optional<bool> require_containment) {
    SearchConfig cfg;
    cfg.max_states = max_states;
    cfg.inputs = inputs;
    cfg.outputs = outputs;
    cfg.candidate_cap = cap;
    cfg.require_containment = require_containment;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(fsmcheck, mod) {
    mod.doc() = "conformance relations for partial deterministic Mealy machines";

    py::register_exception<ValidationError>(mod, "ValidationError");
    py::register_exception<FormatError>(mod, "FormatError");
    py::register_exception<PreconditionError>(mod, "PreconditionError");

    py::class_<Fsm>(mod, "Fsm")
        .def_readonly("name", &Fsm::name)
        .def_readonly("states", &Fsm::states)
        .def_readonly("inputs", &Fsm::inputs)
        .def_readonly("outputs", &Fsm::outputs)
        .def_readonly("initial", &Fsm::initial)
        .def("num_states", &Fsm::num_states)
        .def("state_index", &Fsm::state_index)
        .def("transitions",
             [](const Fsm& m) {
                 std::vector<std::tuple<std::string, std::string, std::string, std::string>> out;
                 for (const auto& t : m.transitions())
                     out.emplace_back(m.states[t.src], m.inputs[t.input], m.outputs[t.output],
                                      m.states[t.dst]);
                 return out;
             })
        .def("to_text", [](const Fsm& m) { return fsm_to_text(m); })
        .def("__repr__",
             [](const Fsm& m) {
                 return "<Fsm " + m.name + ": " + std::to_string(m.num_states()) + " states>";
             });

    mod.def("parse_fsm", &parse_fsm, py::arg("text"));
    mod.def("make_fsm", &make_fsm, py::arg("name"), py::arg("inputs"), py::arg("outputs"),
            py::arg("initial"), py::arg("transitions"), py::arg("extra_states") = std::vector<std::string>{});
    mod.def("parse_word", [](const std::string& text, const Fsm& m) {
        return parse_word(text, m.inputs).symbols;
    });
    mod.def("parse_suite", [](const std::string& text, const Fsm& m) {
        std::vector<std::vector<std::string>> out;
        for (const auto& w : parse_suite(text, m.inputs).words) out.push_back(w.symbols);
        return out;
    });

    mod.def("run", [](const Fsm& m, const std::string& state, const std::vector<std::string>& w) {
        RunResult r = run(m, m.state_index_checked(state), to_word(w));
        py::dict d;
        d["completed"] = r.is_completed;
        if (r.is_completed) {
            d["target"] = m.states[r.target];
            d["output"] = r.output.symbols;
        } else {
            d["defined_prefix"] = r.defined_prefix;
        }
        return d;
    });
    mod.def("accepts", [](const Fsm& m, const std::string& state,
                          const std::vector<std::string>& w) {
        return accepts(m, m.state_index_checked(state), to_word(w));
    });
    mod.def("blocking_measure", [](const Fsm& m, const std::vector<std::string>& w) {
        return blocking_measure(m, to_word(w));
    });
    mod.def("suite_measure", [](const Fsm& m, const std::vector<std::vector<std::string>>& t) {
        return suite_measure(m, to_suite(t));
    });

    auto bind_pair_relation = [](const Fsm& m, const std::string& s, const Fsm& n,
                                 const std::string& q) {
        return std::make_pair(m.state_index_checked(s), n.state_index_checked(q));
    };
    mod.def("equiv_under_suite",
            [bind_pair_relation](const Fsm& m, const std::string& s, const Fsm& n,
                                 const std::string& q,
                                 const std::vector<std::vector<std::string>>& t) {
                auto [si, qi] = bind_pair_relation(m, s, n, q);
                return verdict_to_py(equiv_under_suite(m, si, n, qi, to_suite(t)));
            });
    mod.def("alike_under_suite",
            [bind_pair_relation](const Fsm& m, const std::string& s, const Fsm& n,
                                 const std::string& q,
                                 const std::vector<std::vector<std::string>>& t) {
                auto [si, qi] = bind_pair_relation(m, s, n, q);
                return verdict_to_py(alike_under_suite(m, si, n, qi, to_suite(t)));
            });
    mod.def("equiv_total", [bind_pair_relation](const Fsm& m, const std::string& s, const Fsm& n,
                                                const std::string& q) {
        auto [si, qi] = bind_pair_relation(m, s, n, q);
        return verdict_to_py(equiv_total(m, si, n, qi));
    });
    mod.def("alike_total", [bind_pair_relation](const Fsm& m, const std::string& s, const Fsm& n,
                                                const std::string& q) {
        auto [si, qi] = bind_pair_relation(m, s, n, q);
        return verdict_to_py(alike_total(m, si, n, qi));
    });
    mod.def("machine_equiv", [](const Fsm& m, const Fsm& n) {
        return verdict_to_py(equiv_total(m, n));
    });
    mod.def("machine_alike", [](const Fsm& m, const Fsm& n) {
        return verdict_to_py(alike_total(m, n));
    });
    mod.def("machine_equiv_under_suite",
            [](const Fsm& m, const Fsm& n, const std::vector<std::vector<std::string>>& t) {
                return verdict_to_py(equiv_under_suite(m, n, to_suite(t)));
            });
    mod.def("machine_alike_under_suite",
            [](const Fsm& m, const Fsm& n, const std::vector<std::vector<std::string>>& t) {
                return verdict_to_py(alike_under_suite(m, n, to_suite(t)));
            });

    mod.def("alikeness_partition", [](const Fsm& m) {
        std::vector<std::vector<std::string>> out;
        for (const auto& block : alikeness_partition(m)) {
            std::vector<std::string> names;
            for (StateId s : block) names.push_back(m.states[s]);
            out.push_back(std::move(names));
        }
        return out;
    });

    mod.def("reachable", [](const Fsm& m) {
        std::vector<std::string> out;
        for (StateId s : reachable(m)) out.push_back(m.states[s]);
        return out;
    });
    mod.def("is_reduced", [](const Fsm& m) { return is_reduced(m).holds; });
    mod.def("is_p_reduced", [](const Fsm& m) { return is_p_reduced(m).holds; });
    mod.def("p_reduce", &p_reduce);

    mod.def("greatest_simulation", [](const Fsm& m, const Fsm& n) -> py::object {
        auto r = greatest_simulation(m, n);
        if (!r) return py::none();
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& [a, b] : r->pairs) out.emplace_back(m.states[a], n.states[b]);
        return py::cast(out);
    });
    mod.def("bisimilar", &bisimilar);
    mod.def("isomorphic", [](const Fsm& m, const Fsm& n) -> py::object {
        auto r = isomorphic(m, n);
        if (!r) return py::none();
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& [a, b] : r->pairs) out.emplace_back(m.states[a], n.states[b]);
        return py::cast(out);
    });

    mod.def("is_embedded", [](const std::vector<std::string>& needle,
                              const std::vector<std::string>& haystack) {
        return is_embedded(to_word(needle), to_word(haystack));
    });
    mod.def("is_extensible",
            [](const std::vector<std::string>& w, const std::vector<std::vector<std::string>>& t) {
                return is_extensible(to_word(w), to_suite(t));
            });
    mod.def("shortest_non_extensible",
            [](const std::vector<std::vector<std::string>>& t, const Fsm& order) {
                return shortest_non_extensible(to_suite(t), order).symbols;
            });

    mod.def("completeness_counterexample",
            [](const Fsm& m, const std::vector<std::vector<std::string>>& t, bool prune) {
                return completeness_counterexample(m, to_suite(t), prune);
            },
            py::arg("spec"), py::arg("suite"), py::arg("prune") = false);
    mod.def("perfectness_counterexample",
            [](const Fsm& m, const std::vector<std::vector<std::string>>& t,
               const std::vector<std::string>& sigma) {
                TreeCounterexample tc = perfectness_counterexample(m, to_suite(t), to_word(sigma));
                return py::make_tuple(tc.machine, tc.measure_trace);
            });
    mod.def("completeness_bound",
            [](const Fsm& m, const std::vector<std::vector<std::string>>& t) {
                return completeness_bound(m, to_suite(t));
            });

    mod.def("enumerate_candidates",
            [](int max_states, const std::vector<std::string>& inputs,
               const std::vector<std::string>& outputs, std::optional<std::uint64_t> cap) {
                return all_candidates(make_config(max_states, inputs, outputs, cap, std::nullopt));
            },
            py::arg("max_states"), py::arg("inputs"), py::arg("outputs"),
            py::arg("cap") = std::nullopt);
    mod.def("check_m_complete",
            [](const Fsm& spec, const std::vector<std::vector<std::string>>& t, int max_states,
               std::optional<std::uint64_t> cap) {
                return search_verdict_to_py(
                    check_m_complete(spec, to_suite(t), make_config(max_states, {}, {}, cap, {})));
            },
            py::arg("spec"), py::arg("suite"), py::arg("max_states"),
            py::arg("cap") = std::nullopt);
    mod.def("check_m_perfect",
            [](const Fsm& spec, const std::vector<std::vector<std::string>>& t, int max_states,
               std::optional<std::uint64_t> cap) {
                return search_verdict_to_py(
                    check_m_perfect(spec, to_suite(t), make_config(max_states, {}, {}, cap, {})));
            },
            py::arg("spec"), py::arg("suite"), py::arg("max_states"),
            py::arg("cap") = std::nullopt);
    mod.def("cross_validate_perfectness",
            [](const Fsm& spec, const std::vector<std::vector<std::string>>& t, int max_states) {
                CrossValidationReport r =
                    cross_validate_perfectness(spec, to_suite(t), make_config(max_states, {}, {}, {}, {}));
                py::dict d;
                d["candidates"] = r.candidates;
                d["suite_alike"] = r.suite_alike;
                d["disagreements"] = r.disagreements;
                d["truncated"] = r.truncated;
                return d;
            });
}
