#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "fsmcheck/fsm.hpp"
#include "fsmcheck/simulation.hpp"
#include "support/builders.hpp"

using namespace fsmcheck;
using namespace fsmcheck::testing;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

fs::path work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("fsmcheck_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path write_file(const std::string& name, const std::string& content) {
    fs::path p = work_dir() / name;
    std::ofstream out(p);
    out << content;
    return p;
}

CliResult cli(const std::vector<std::string>& args) {
    const char* bin = std::getenv("FSMCHECK_CLI");
    REQUIRE(bin != nullptr);
    static int counter = 0;
    fs::path out = work_dir() / ("out" + std::to_string(counter));
    fs::path err = work_dir() / ("err" + std::to_string(counter));
    ++counter;

    std::string cmd = std::string("'") + bin + "'";
    for (const auto& a : args) cmd += " '" + a + "'";
    cmd += " >'" + out.string() + "' 2>'" + err.string() + "'";
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, slurp(out), slurp(err)};
}

const char* kSpecText =
    "fsm M\n"
    "inputs 0 1\n"
    "outputs 0 1\n"
    "initial s0\n"
    "trans s0 0/1 s0\n"
    "trans s0 1/1 s1\n"
    "trans s1 0/0 s1\n";

}  // namespace

TEST_CASE("cli: run completes or blocks with matching exit codes") {
    auto spec = write_file("m.fsm", kSpecText);
    CliResult r = cli({"run", spec.string(), "1000"});
    CHECK(r.code == 0);
    CHECK(r.out == "COMPLETED s1 1000\n");

    r = cli({"run", spec.string(), "11"});
    CHECK(r.code == 1);
    CHECK(r.out == "BLOCKED 1\n");

    r = cli({"run", spec.string(), "1", "--state", "s1"});
    CHECK(r.code == 1);
    CHECK(r.out == "BLOCKED 0\n");

    r = cli({"run", spec.string(), "eps"});
    CHECK(r.code == 0);
    CHECK(r.out == "COMPLETED s0 eps\n");
}

TEST_CASE("cli: verify, refute-complete, equiv replay the worked example") {
    auto spec = write_file("m.fsm", kSpecText);
    auto tsuite = write_file("t.txt", "0000\n100\n");

    CliResult v = cli({"verify", spec.string(), tsuite.string(), "--mode", "complete", "-m", "2"});
    CHECK(v.code == 0);
    CHECK(v.out.find("HOLDS") != std::string::npos);

    fs::path nfile = work_dir() / "n.fsm";
    CliResult rc = cli({"refute-complete", spec.string(), tsuite.string(), "--prune", "--out",
                        nfile.string()});
    CHECK(rc.code == 1);
    std::string ntext = slurp(nfile);
    CHECK(ntext.rfind("# ", 0) == 0);  // provenance comment first
    CHECK(ntext.find("refute-complete") != std::string::npos);
    Fsm n = parse_fsm(ntext);
    CHECK(n.num_states() == 4);
    CHECK(isomorphic(n, flipped_tail_impl()).has_value());

    auto one = write_file("one.txt", "1000\n");
    CliResult eq = cli({"equiv", spec.string(), nfile.string(), "--suite", one.string()});
    CHECK(eq.code == 1);
    CHECK(eq.out == "FAILS OutputMismatch 1000\n");

    CliResult eq2 = cli({"equiv", spec.string(), tsuite.string() /* not a machine */});
    CHECK(eq2.code == 2);
}

TEST_CASE("cli: alike, bisim, iso, partition, preduce, bound") {
    auto spec = write_file("m.fsm", kSpecText);
    auto n1 = write_file("n1.fsm",
                         "fsm N1\ninputs 0 1\noutputs 0 1\ninitial q0\n"
                         "trans q0 0/1 q0\ntrans q0 1/1 q1\ntrans q1 0/0 q2\ntrans q2 0/0 q1\n");

    CliResult al = cli({"alike", spec.string(), n1.string()});
    CHECK(al.code == 0);
    CHECK(al.out == "HOLDS\n");

    CliResult bs = cli({"bisim", spec.string(), n1.string()});
    CHECK(bs.code == 0);
    CHECK(bs.out == "HOLDS\n");

    CliResult pt = cli({"partition", n1.string()});
    CHECK(pt.code == 0);
    CHECK(pt.out == "block q0\nblock q1 q2\n");

    fs::path qfile = work_dir() / "q.fsm";
    CliResult pr = cli({"preduce", n1.string(), "--out", qfile.string()});
    CHECK(pr.code == 0);
    CliResult is = cli({"iso", qfile.string(), spec.string()});
    CHECK(is.code == 0);
    CHECK(is.out == "HOLDS\npair [q0] s0\npair [q1] s1\n");

    CliResult niso = cli({"iso", n1.string(), spec.string()});
    CHECK(niso.code == 1);
    CHECK(niso.out == "FAILS\n");

    auto tsuite = write_file("t.txt", "0000\n100\n");
    CliResult bd = cli({"bound", spec.string(), tsuite.string()});
    CHECK(bd.code == 0);
    CHECK(bd.out == "8\n");
}

TEST_CASE("cli: refute-perfect builds the tree machine") {
    auto spec = write_file("m.fsm", kSpecText);
    auto tsuite = write_file("t100.txt", "100\n");
    fs::path nfile = work_dir() / "tree.fsm";
    CliResult r = cli({"refute-perfect", spec.string(), tsuite.string(), "--sigma", "0000",
                       "--out", nfile.string()});
    CHECK(r.code == 1);
    Fsm tree = parse_fsm(slurp(nfile));
    CHECK(tree.num_states() == 8);

    CliResult a = cli({"alike", spec.string(), nfile.string(), "--suite", tsuite.string()});
    CHECK(a.code == 0);
    // the spec runs 01 but the tree does not: that blocking asymmetry is a
    // shorter unlike-witness than the flipped word 0000
    CliResult a2 = cli({"alike", spec.string(), nfile.string()});
    CHECK(a2.code == 1);
    CHECK(a2.out == "FAILS BlockingAsymmetry(first) 01\n");
}

TEST_CASE("cli: verify --mode perfect finds and writes a counterexample") {
    auto chain = write_file("chain.fsm",
                            "fsm M3\ninputs 0 1\noutputs 0 1\ninitial s0\n"
                            "trans s0 0/0 s1\ntrans s1 0/0 s2\n");
    auto tsuite = write_file("t3.txt", "000\n00\n");

    CliResult vc = cli({"verify", chain.string(), tsuite.string(), "--mode", "complete", "-m", "3"});
    CHECK(vc.code == 0);

    fs::path ce = work_dir() / "ce.fsm";
    CliResult vp = cli({"verify", chain.string(), tsuite.string(), "--mode", "perfect", "-m", "3",
                        "--out", ce.string()});
    CHECK(vp.code == 1);
    CHECK(vp.out.find("FAILS") != std::string::npos);
    Fsm c = parse_fsm(slurp(ce));
    CHECK(c.num_states() <= 3);

    CliResult capped = cli({"verify", chain.string(), tsuite.string(), "--mode", "complete", "-m",
                            "3", "--cap", "4"});
    CHECK(capped.code == 3);
    CHECK(capped.out.find("INCONCLUSIVE") != std::string::npos);
}

TEST_CASE("cli: errors are reported with exit code 2") {
    auto spec = write_file("m.fsm", kSpecText);
    CliResult nofile = cli({"run", "missing.fsm", "0"});
    CHECK(nofile.code == 2);

    auto broken = write_file("broken.fsm", "fsm X\ninputs 0\noutputs 0\ninitial a\ntrans a 9/0 a\n");
    CliResult bad = cli({"run", broken.string(), "0"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("line 5") != std::string::npos);

    CliResult flag = cli({"run", spec.string(), "0", "--bogus"});
    CHECK(flag.code == 2);

    auto eps = write_file("eps.txt", "eps\n");
    CliResult nosigma = cli({"refute-complete", spec.string(), eps.string()});
    CHECK(nosigma.code == 2);

    CliResult ver = cli({"--version"});
    CHECK(ver.code == 0);
    CHECK(ver.out.find("fsmcheck") != std::string::npos);
}
