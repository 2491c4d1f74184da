#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ordfield/cli.hpp"

using namespace ordfield;

namespace {

struct Invocation {
    std::string name;  // golden file stem
    std::vector<std::string> args;
};

// Fixed invocations frozen as golden outputs, each in text and json form.
// Keep appends before a "--" separator so option parsing stays intact.
const std::vector<Invocation> kGolden{
    {"eval-geometric", {"eval", "t/(1-t)"}},
    {"eval-laurent-inverse", {"eval", "1/(t - t^2)"}},
    {"eval-neg-pow", {"eval", "--field", "q", "--", "-2^2"}},
    {"sqrt-binomial", {"sqrt", "1+t"}},
    {"eval-lc-half", {"eval", "--field", "lc", "t^(1/2)*t^(1/2)"}},
    {"classify-infinite", {"classify", "t^-1"}},
    {"classify-ratfunc",
     {"classify", "--field", "ratfunc-inf", "(3*t^2+1)/(t^2+1)"}},
    {"compare-huge", {"compare", "t^-1", "1000000"}},
    {"compare-ratfunc", {"compare", "--field", "ratfunc-inf", "x^2", "x"}},
    {"val-series", {"val", "t^2*(1+t)"}},
    {"val-ratfunc-zero",
     {"val", "--field", "ratfunc-zero", "(t^2+t^3)/(1+t)"}},
    {"dist-level", {"dist", "t", "t+t^4"}},
    {"probe-cantor",
     {"probe", "cantor", "0-t", "t", "0-t^2", "t^2", "0-t^5", "t^5"}},
    {"probe-open-fip",
     {"probe", "open-fip", "--rho", "t^2", "0", "1", "0", "t", "0", "t^2"}},
    {"probe-cauchy-geometric",
     {"probe", "cauchy", "t", "t+t^2", "t+t^2+t^3", "t+t^2+t^3+t^4",
      "t+t^2+t^3+t^4+t^5", "t+t^2+t^3+t^4+t^5+t^6", "--eps", "t^3"}},
    {"probe-cauchy-open",
     {"probe", "cauchy", "1/2", "1/4", "1/8", "1/16", "--eps", "t"}},
    {"probe-archimedean-ratfunc",
     {"probe", "archimedean", "--field", "ratfunc-zero", "(3-t)/(1+t)"}},
    {"probe-archimedean-huge", {"probe", "archimedean", "t^-1"}},
    {"probe-dyadic-sup", {"probe", "dyadic-sup", "--square", "2", "-P", "6"}},
    {"probe-sqrt-iter", {"probe", "sqrt-iter", "2", "--tol", "1/100"}},
    {"probe-ivt", {"probe", "ivt", "x^3-2*x-5", "2", "3", "--iters", "20"}},
    {"probe-bw",
     {"probe", "bw", "-a", "-1", "-b", "1", "-K", "5", "--", "-1", "1", "-1",
      "1", "-1", "1", "-1", "1", "-1", "1"}},
    {"probe-naturals-laurent", {"probe", "naturals-bounded", "5"}},
    {"probe-naturals-q", {"probe", "naturals-bounded", "--field", "q", "5"}},
    {"probe-unbounded", {"probe", "unbounded-seq", "4"}},
};

std::string golden_path(const std::string& stem, const std::string& fmt) {
    return std::string(ORDFIELD_GOLDEN_DIR) + "/" + stem + "." + fmt + ".txt";
}

std::vector<std::string> with_format(std::vector<std::string> args,
                                     const std::string& fmt) {
    // insert before the positional separator, if present
    auto it = std::find(args.begin(), args.end(), "--");
    args.insert(it, {"--format", fmt});
    return args;
}

}  // namespace

TEST_CASE("golden invocations byte-match in both formats") {
    bool write = std::getenv("WRITE_GOLDEN") != nullptr;
    for (const auto& g : kGolden) {
        for (const std::string fmt : {"text", "json"}) {
            CAPTURE(g.name);
            CAPTURE(fmt);
            CommandResult res = run_command(with_format(g.args, fmt));
            REQUIRE(res.exit_code == 0);
            CHECK(res.err.empty());
            std::string path = golden_path(g.name, fmt);
            if (write) {
                std::ofstream out(path, std::ios::binary);
                out << res.out;
                continue;
            }
            std::ifstream in(path, std::ios::binary);
            REQUIRE_MESSAGE(in.good(), "missing golden file ", path,
                            " (regenerate with WRITE_GOLDEN=1)");
            std::stringstream buf;
            buf << in.rdbuf();
            CHECK(res.out == buf.str());
        }
    }
}

TEST_CASE("exit codes") {
    CHECK(run_command({"eval", "t"}).exit_code == 0);
    CHECK(run_command({"--help"}).exit_code == 0);
    CHECK(run_command({"eval", "--help"}).exit_code == 0);

    // domain problems: exit 1
    CHECK(run_command({"eval", "1/0", "--field", "q"}).exit_code == 1);
    CHECK(run_command({"val", "3", "--field", "q"}).exit_code == 1);
    CHECK(run_command({"dist", "t", "t^2", "--field", "q"}).exit_code == 1);
    CHECK(run_command({"compare", "sqrt(1+t)", "sqrt(1+t) + t^30"}).exit_code ==
          1);

    // malformed input: exit 2
    CHECK(run_command({"eval", "t +"}).exit_code == 2);
    CHECK(run_command({"eval", "t^(1/2)"}).exit_code == 2);
    CHECK(run_command({"nonsense"}).exit_code == 2);
    CHECK(run_command({"eval"}).exit_code == 2);
    CHECK(run_command({"eval", "t", "--field", "septic"}).exit_code == 2);
    CHECK(run_command({"eval", "t", "--format", "yaml"}).exit_code == 2);
    CHECK(run_command({"probe", "dyadic-sup", "--square", "2", "--cut", "3"})
              .exit_code == 2);
    CHECK(run_command({}).exit_code == 2);
}

TEST_CASE("error text lands on stderr with locations") {
    CommandResult parse = run_command({"eval", "t +"});
    CHECK(parse.out.empty());
    CHECK(parse.err == "parse error at byte 3: unexpected end of input\n");

    CommandResult dom = run_command({"eval", "1/(t-t)"});
    CHECK(dom.err == "error: division by zero\n");

    CommandResult trunc = run_command({"compare", "sqrt(1+t)",
                                       "sqrt(1+t) + t^30"});
    CHECK(trunc.err ==
          "error: indistinguishable at truncation: unknown below known_order "
          "t^16\n");

    CommandResult help = run_command({"--help"});
    CHECK(help.out.find("Usage: ordfield") != std::string::npos);
    CHECK(help.err.empty());

    CommandResult sub = run_command({"eval", "--help"});
    CHECK(sub.out.find("expression") != std::string::npos);

    CommandResult bad = run_command({"nonsense"});
    CHECK(bad.err.find("Usage") != std::string::npos);
}

TEST_CASE("session options reach the evaluator") {
    // depth controls how far expansions run
    CommandResult d4 = run_command({"eval", "t/(1-t)", "--trunc", "4"});
    CHECK(d4.out == "t + t^2 + t^3 + t^4 + O(t^5)\n");
    // scan bound caps the archimedean scan trace
    CommandResult scan =
        run_command({"probe", "archimedean", "t^-1", "--scan-bound", "100"});
    CHECK(scan.out.find("scan n = 100:") != std::string::npos);
    CHECK(scan.out.find("scan n = 1000:") == std::string::npos);
}
