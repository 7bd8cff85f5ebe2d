#include "fsmcheck/fsm.hpp"

#include <algorithm>
#include <sstream>

namespace fsmcheck {

TestSuite TestSuite::of(std::vector<Word> ws) {
    TestSuite t;
    for (auto& w : ws) {
        if (!t.contains(w)) t.words.push_back(std::move(w));
    }
    if (t.words.empty()) throw ValidationError("test suite must be nonempty");
    return t;
}

bool TestSuite::contains(const Word& w) const {
    return std::find(words.begin(), words.end(), w) != words.end();
}

Fsm::Fsm(std::string nm, std::vector<std::string> sts, std::vector<std::string> ins,
         std::vector<std::string> outs, StateId init)
    : name(std::move(nm)),
      states(std::move(sts)),
      inputs(std::move(ins)),
      outputs(std::move(outs)),
      initial(init) {
    reset_table();
    check_valid();
}

void Fsm::set_transition(StateId s, int x, int out, StateId dst) {
    auto& c = table_[s * num_inputs() + x];
    c.target = static_cast<std::int16_t>(dst);
    c.output = static_cast<std::int16_t>(out);
}

void Fsm::clear_transition(StateId s, int x) { table_[s * num_inputs() + x] = Cell{}; }

std::vector<Transition> Fsm::transitions() const {
    std::vector<Transition> out;
    for (StateId s = 0; s < num_states(); ++s) {
        for (int x = 0; x < num_inputs(); ++x) {
            if (defined(s, x)) out.push_back({s, x, output_of(s, x), next(s, x)});
        }
    }
    return out;
}

namespace {
std::optional<int> index_of(const std::vector<std::string>& v, const std::string& s) {
    auto it = std::find(v.begin(), v.end(), s);
    if (it == v.end()) return std::nullopt;
    return static_cast<int>(it - v.begin());
}
}  // namespace

std::optional<int> Fsm::state_index(const std::string& n) const { return index_of(states, n); }
std::optional<int> Fsm::input_index(const std::string& s) const { return index_of(inputs, s); }
std::optional<int> Fsm::output_index(const std::string& s) const { return index_of(outputs, s); }

int Fsm::state_index_checked(const std::string& n) const {
    auto i = state_index(n);
    if (!i) throw ValidationError("unknown state: " + n);
    return *i;
}

int Fsm::input_index_checked(const std::string& s) const {
    auto i = input_index(s);
    if (!i) throw ValidationError("unknown input symbol: " + s);
    return *i;
}

void Fsm::check_valid() const {
    if (states.empty()) throw ValidationError("machine needs at least one state");
    if (inputs.empty()) throw ValidationError("input alphabet must be nonempty");
    if (outputs.empty()) throw ValidationError("output alphabet must be nonempty");
    if (initial < 0 || initial >= num_states()) throw ValidationError("initial state out of range");
    if (table_.size() != states.size() * inputs.size())
        throw ValidationError("transition table has wrong shape");
    auto distinct = [](const std::vector<std::string>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j)
                if (v[i] == v[j]) return false;
        return true;
    };
    if (!distinct(states)) throw ValidationError("duplicate state name");
    if (!distinct(inputs)) throw ValidationError("duplicate input symbol");
    if (!distinct(outputs)) throw ValidationError("duplicate output symbol");
    for (StateId s = 0; s < num_states(); ++s) {
        for (int x = 0; x < num_inputs(); ++x) {
            const Cell& c = cell(s, x);
            if (c.target < 0) continue;
            if (c.target >= num_states()) throw ValidationError("transition target out of range");
            if (c.output < 0 || c.output >= num_outputs())
                throw ValidationError("transition output out of range");
        }
    }
}

Fsm make_fsm(const std::string& name, const std::vector<std::string>& inputs,
             const std::vector<std::string>& outputs, const std::string& initial,
             const std::vector<std::array<std::string, 4>>& transitions,
             const std::vector<std::string>& extra_states) {
    std::vector<std::string> states{initial};
    auto declare = [&states](const std::string& s) {
        if (std::find(states.begin(), states.end(), s) == states.end()) states.push_back(s);
    };
    for (const auto& tr : transitions) {
        declare(tr[0]);
        declare(tr[3]);
    }
    for (const auto& s : extra_states) declare(s);

    Fsm m(name, states, inputs, outputs, 0);
    for (const auto& tr : transitions) {
        int src = m.state_index_checked(tr[0]);
        int x = m.input_index_checked(tr[1]);
        auto out = m.output_index(tr[2]);
        if (!out) throw ValidationError("unknown output symbol: " + tr[2]);
        int dst = m.state_index_checked(tr[3]);
        if (m.defined(src, x))
            throw ValidationError("duplicate transition on (" + tr[0] + ", " + tr[1] + ")");
        m.set_transition(src, x, *out, dst);
    }
    return m;
}

RunResult RunResult::completed(StateId t, Word out) {
    RunResult r;
    r.is_completed = true;
    r.target = t;
    r.output = std::move(out);
    return r;
}

RunResult RunResult::blocked(std::size_t prefix_len) {
    RunResult r;
    r.is_completed = false;
    r.defined_prefix = prefix_len;
    return r;
}

RunResult run(const Fsm& m, StateId s, const Word& w) {
    if (s < 0 || s >= m.num_states()) throw ValidationError("state index out of range");
    std::vector<int> word;
    word.reserve(w.size());
    for (const auto& sym : w.symbols) word.push_back(m.input_index_checked(sym));

    StateId cur = s;
    Word out;
    out.symbols.reserve(w.size());
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (!m.defined(cur, word[i])) return RunResult::blocked(i);
        out.symbols.push_back(m.outputs[m.output_of(cur, word[i])]);
        cur = m.next(cur, word[i]);
    }
    return RunResult::completed(cur, std::move(out));
}

bool accepts(const Fsm& m, StateId s, const Word& w) { return run(m, s, w).is_completed; }

std::size_t blocking_measure(const Fsm& m, const Word& w) {
    RunResult r = run(m, m.initial, w);
    return r.is_completed ? w.size() : r.defined_prefix;
}

std::size_t suite_measure(const Fsm& m, const TestSuite& t) {
    std::size_t sum = 0;
    for (const auto& w : t.words) sum += blocking_measure(m, w);
    return sum;
}

// ---- text formats --------------------------------------------------------

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream in(line);
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

[[noreturn]] void format_fail(int line_no, const std::string& msg) {
    throw FormatError("line " + std::to_string(line_no) + ": " + msg);
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

void check_symbol_token(int line_no, const std::string& sym) {
    if (sym == "eps") format_fail(line_no, "'eps' is reserved for the empty word");
    if (sym.find('/') != std::string::npos)
        format_fail(line_no, "symbol may not contain '/': " + sym);
}

}  // namespace

Fsm parse_fsm(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;

    std::string name;
    std::vector<std::string> inputs, outputs, states;
    std::string initial_name;
    struct RawTrans {
        int line;
        std::string src, in, out, dst;
    };
    std::vector<RawTrans> trans;

    // header fields come in a fixed order: fsm, inputs, outputs, initial, trans*
    int stage = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto toks = tokenize(strip_comment(raw));
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (kw == "fsm") {
            if (stage != 0) format_fail(line_no, "unexpected 'fsm' line");
            if (toks.size() != 2) format_fail(line_no, "expected: fsm <name>");
            name = toks[1];
            stage = 1;
        } else if (kw == "inputs") {
            if (stage != 1) format_fail(line_no, "'inputs' must follow the fsm line");
            if (toks.size() < 2) format_fail(line_no, "input alphabet must be nonempty");
            for (std::size_t i = 1; i < toks.size(); ++i) {
                check_symbol_token(line_no, toks[i]);
                inputs.push_back(toks[i]);
            }
            stage = 2;
        } else if (kw == "outputs") {
            if (stage != 2) format_fail(line_no, "'outputs' must follow the inputs line");
            if (toks.size() < 2) format_fail(line_no, "output alphabet must be nonempty");
            for (std::size_t i = 1; i < toks.size(); ++i) {
                if (toks[i].find('/') != std::string::npos)
                    format_fail(line_no, "symbol may not contain '/': " + toks[i]);
                outputs.push_back(toks[i]);
            }
            stage = 3;
        } else if (kw == "initial") {
            if (stage != 3) format_fail(line_no, "'initial' must follow the outputs line");
            if (toks.size() != 2) format_fail(line_no, "expected: initial <state>");
            initial_name = toks[1];
            states.push_back(initial_name);
            stage = 4;
        } else if (kw == "trans") {
            if (stage != 4) format_fail(line_no, "'trans' must follow the initial line");
            if (toks.size() != 4) format_fail(line_no, "expected: trans <src> <in>/<out> <dst>");
            auto slash = toks[2].find('/');
            if (slash == std::string::npos || slash == 0 || slash + 1 == toks[2].size())
                format_fail(line_no, "expected <in>/<out>, got: " + toks[2]);
            RawTrans rt{line_no, toks[1], toks[2].substr(0, slash), toks[2].substr(slash + 1),
                        toks[3]};
            for (const auto& st : {rt.src, rt.dst}) {
                if (std::find(states.begin(), states.end(), st) == states.end())
                    states.push_back(st);
            }
            trans.push_back(std::move(rt));
        } else {
            format_fail(line_no, "unknown directive: " + kw);
        }
    }
    if (stage != 4) throw FormatError("incomplete machine: expected fsm/inputs/outputs/initial");

    Fsm m(name, states, inputs, outputs, 0);
    for (const auto& rt : trans) {
        int src = *m.state_index(rt.src);
        auto x = m.input_index(rt.in);
        if (!x) format_fail(rt.line, "input symbol not in alphabet: " + rt.in);
        auto o = m.output_index(rt.out);
        if (!o) format_fail(rt.line, "output symbol not in alphabet: " + rt.out);
        int dst = *m.state_index(rt.dst);
        if (m.defined(src, *x))
            format_fail(rt.line, "duplicate transition on (" + rt.src + ", " + rt.in + ")");
        m.set_transition(src, *x, *o, dst);
    }
    return m;
}

std::string fsm_to_text(const Fsm& m, const std::string& provenance) {
    std::ostringstream out;
    if (!provenance.empty()) out << "# " << provenance << "\n";
    out << "fsm " << m.name << "\n";
    out << "inputs";
    for (const auto& s : m.inputs) out << ' ' << s;
    out << "\noutputs";
    for (const auto& s : m.outputs) out << ' ' << s;
    out << "\ninitial " << m.states[m.initial] << "\n";
    for (const auto& tr : m.transitions()) {
        out << "trans " << m.states[tr.src] << ' ' << m.inputs[tr.input] << '/'
            << m.outputs[tr.output] << ' ' << m.states[tr.dst] << "\n";
    }
    return out.str();
}

namespace {
bool all_single_char(std::span<const std::string> alphabet) {
    for (const auto& s : alphabet)
        if (s.size() != 1) return false;
    return true;
}

Word parse_word_at(int line_no, const std::string& text, std::span<const std::string> alphabet) {
    auto toks = tokenize(text);
    if (toks.empty()) format_fail(line_no, "empty word (use 'eps' for the empty word)");
    auto known = [&alphabet](const std::string& sym) {
        return std::find(alphabet.begin(), alphabet.end(), sym) != alphabet.end();
    };
    Word w;
    if (toks.size() == 1) {
        if (toks[0] == "eps") return w;
        if (all_single_char(alphabet)) {
            for (char c : toks[0]) w.symbols.emplace_back(1, c);
        } else {
            w.symbols.push_back(toks[0]);
        }
    } else {
        w.symbols = std::move(toks);
    }
    for (const auto& sym : w.symbols)
        if (!known(sym)) format_fail(line_no, "symbol not in alphabet: " + sym);
    return w;
}
}  // namespace

Word parse_word(const std::string& text, std::span<const std::string> alphabet) {
    return parse_word_at(1, text, alphabet);
}

TestSuite parse_suite(const std::string& text, std::span<const std::string> alphabet) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    TestSuite t;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string body = strip_comment(raw);
        if (tokenize(body).empty()) continue;
        Word w = parse_word_at(line_no, body, alphabet);
        if (!t.contains(w)) t.words.push_back(std::move(w));
    }
    if (t.words.empty()) throw FormatError("suite file contains no words");
    return t;
}

std::string format_word(const Word& w) {
    if (w.empty()) return "eps";
    bool single = true;
    for (const auto& s : w.symbols)
        if (s.size() != 1) single = false;
    std::string out;
    for (std::size_t i = 0; i < w.symbols.size(); ++i) {
        if (!single && i > 0) out += ' ';
        out += w.symbols[i];
    }
    return out;
}

std::string suite_to_text(const TestSuite& t) {
    std::string out;
    for (const auto& w : t.words) {
        out += format_word(w);
        out += '\n';
    }
    return out;
}

}  // namespace fsmcheck
