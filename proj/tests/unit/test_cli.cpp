#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "prframe/cli.hpp"
#include "prframe/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

using namespace prframe;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;

    Json json() const { return Json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "prframe");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class Scratch {
public:
    Scratch() : dir_(fs::temp_directory_path() / ("prframe_cli_" + std::to_string(::getpid()))) {
        fs::create_directories(dir_);
    }
    ~Scratch() {
        std::error_code ec;
        fs::remove_all(dir_, ec);
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(path(name)) << text;
        return path(name);
    }
    std::string write(const std::string& name, const Frame& f) const { return write(name, dump(frame_to_json(f))); }

private:
    fs::path dir_;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("gen writes a frame that verify accepts", "[cli]") {
    Scratch tmp;
    const Outcome g = run({"gen", "--n", "4", "--len", "9", "--seed", "3", "--out", tmp.path("f.json")});
    REQUIRE(g.code == 0);
    CHECK(g.json()["length"] == 9);

    const Json frame = read_json_file(tmp.path("f.json"));
    CHECK(frame["n"] == 4);
    CHECK(frame["vectors"].size() == 9);
    CHECK(frame["meta"]["kind"] == "exact");
    CHECK(frame["meta"]["certificate"]["exact_pr"] == true);

    const Outcome v = run({"verify", tmp.path("f.json"), "--checks", "pr,exact,redundancy,lifted-independence"});
    REQUIRE(v.code == 0);
    const Json r = v.json();
    CHECK(r["command"] == "verify");
    for (const char* check : {"pr", "exact", "redundancy", "lifted-independence"}) CHECK(r["results"][check]["pass"] == true);
}

TEST_CASE("gen to standard output is deterministic", "[cli]") {
    const Outcome a = run({"gen", "--n", "5", "--len", "11", "--seed", "7"});
    const Outcome b = run({"gen", "--n", "5", "--len", "11", "--seed", "7"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != run({"gen", "--n", "5", "--len", "11", "--seed", "8"}).out);

    Scratch tmp;
    const std::string file = tmp.write("f.json", a.out);
    CHECK(run({"verify", file}).code == 0);
}

TEST_CASE("gen rejects lengths outside the admissible range", "[cli]") {
    const Outcome o = run({"gen", "--n", "3", "--len", "7"});
    CHECK(o.code == 2);
    CHECK(o.err.find("OutOfRange") != std::string::npos);
    CHECK(run({"gen", "--n", "3", "--len", "4"}).code == 2);
    CHECK(run({"gen", "--n", "3"}).code == 2);
}

TEST_CASE("gen dmax and basis-subspace kinds", "[cli]") {
    Scratch tmp;
    REQUIRE(run({"gen", "--kind", "dmax", "--n", "5", "--k", "4", "--len", "9", "--out", tmp.path("d.json")}).code == 0);
    const Outcome a = run({"analyze", tmp.path("d.json"), "--what", "dmax,spark"});
    REQUIRE(a.code == 0);
    CHECK(a.json()["results"]["dmax"] == 4);

    REQUIRE(run({"gen", "--kind", "basis-subspace", "--n", "5", "--k", "3", "--out", tmp.path("b.json")}).code == 0);
    const Json b = read_json_file(tmp.path("b.json"));
    CHECK(b["vectors"].size() == 5);
    CHECK(b["meta"]["subspace"]["basis"].size() == 3);
}

TEST_CASE("verify reports failures with exit code 1", "[cli]") {
    Scratch tmp;
    const std::string fs24 = tmp.write("fs24.json", Frame(RatMatrix::from_rows({{1, 0, 1, 1}, {0, 1, 1, -1}})));
    const Outcome o = run({"verify", fs24});
    CHECK(o.code == 1);
    const Json r = o.json();
    CHECK(r["results"]["pr"]["pass"] == true);
    CHECK(r["results"]["exact"]["pass"] == false);
    CHECK(r["results"]["exact"]["removable"] == Json::parse("[1,2,3,4]"));

    const std::string e3 = tmp.write("e3.json", Frame(RatMatrix::identity(3)));
    const Outcome b = run({"verify", e3, "--checks", "pr"});
    CHECK(b.code == 1);
    CHECK(b.json()["results"]["pr"]["failing"].is_array());
}

TEST_CASE("analyze outputs and caps", "[cli]") {
    Scratch tmp;
    const std::string fs24 = tmp.write("fs24.json", Frame(RatMatrix::from_rows({{1, 0, 1, 1}, {0, 1, 1, -1}})));
    const Outcome o = run({"analyze", fs24, "--what", "dmax,spark,redundancy"});
    REQUIRE(o.code == 0);
    const Json r = o.json()["results"];
    CHECK(r["dmax"] == 2);
    CHECK(r["spark"] == 3);
    CHECK(r["redundancy"] == "4/3");

    const Outcome capped = run({"analyze", fs24, "--what", "redundancy", "--cap", "3"});
    CHECK(capped.code == 2);
    CHECK(capped.err.find("CapExceeded") != std::string::npos);
}

TEST_CASE("subspace actions", "[cli]") {
    Scratch tmp;
    const std::string e4 = tmp.write("e4.json", Frame(RatMatrix::identity(4)));
    const std::string m = tmp.write("m.json", R"({"n": 4, "basis": [["1","1","1","0"], ["1","-1","0","1"]]})");

    const Outcome check = run({"subspace", e4, "--action", "check", "--basis", m});
    REQUIRE(check.code == 0);
    CHECK(check.json()["results"]["pr"] == true);
    CHECK(check.json()["results"]["min_support"] == 3);

    const Outcome maximal = run({"subspace", e4, "--action", "maximal", "--basis", m});
    REQUIRE(maximal.code == 0);
    CHECK(maximal.json()["results"]["verdict"]["status"] == "Maximal");

    const Outcome random = run({"subspace", e4, "--action", "random", "--dim", "2", "--seed", "5", "--out", tmp.path("r.json")});
    REQUIRE(random.code == 0);
    CHECK(read_json_file(tmp.path("r.json"))["basis"].size() == 2);
    CHECK(run({"subspace", e4, "--action", "random", "--dim", "3"}).code == 2);

    const Outcome extend = run({"subspace", e4, "--action", "extend", "--vector", "1,1,0,0"});
    REQUIRE(extend.code == 0);
    CHECK(extend.json()["results"]["min_support"] == 2);
    CHECK(extend.json()["results"]["verdict"]["status"] == "Maximal");
    CHECK(run({"subspace", e4, "--action", "extend", "--vector", "1,1,1,0"}).code == 2);

    const std::string whole = tmp.write("whole.json", R"({"n": 2, "basis": [["1","0"], ["0","1"]]})");
    const std::string e2 = tmp.write("e2.json", Frame(RatMatrix::identity(2)));
    const Outcome not_pr = run({"subspace", e2, "--action", "maximal", "--basis", whole});
    CHECK(not_pr.code == 1);
    CHECK(not_pr.err.find("NotPRSubspace") != std::string::npos);
}

TEST_CASE("malformed input exits with code 2", "[cli]") {
    Scratch tmp;
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify", tmp.path("missing.json")}).code == 2);
    CHECK(run({"verify", tmp.write("junk.json", "{not json")}).code == 2);
    CHECK(run({"verify", tmp.write("bad.json", R"({"n": 2, "vectors": [["1", "x"]]})")}).code == 2);
    CHECK(run({"verify", tmp.write("short.json", R"({"n": 3, "vectors": [["1", "0"]]})")}).code == 2);
    CHECK(run({"verify", tmp.write("e2.json", Frame(RatMatrix::identity(2))), "--checks", "bogus"}).code == 2);
    CHECK(run({"gen", "--n", "x"}).code == 2);
}

TEST_CASE("frame JSON round-trips exactly", "[cli]") {
    oracle::Gen gen(51);
    for (int trial = 0; trial < 50; ++trial) {
        const auto n = static_cast<std::size_t>(gen.between(1, 5));
        RatMatrix m = gen.frame(n, static_cast<std::size_t>(gen.between(static_cast<long>(n), 9)), 1000, 20);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) {
                Rational q = m(r, c) / gen.between(1, 9);
                m.set(r, c, q);
            }
        const Frame f(m);
        const Json j = Json::parse(dump(frame_to_json(f)));
        REQUIRE(frame_from_json(j).matrix() == f.matrix());
    }
}

TEST_CASE("reference-suite flags only the misprinted witness", "[cli]") {
    const Outcome o = run({"reference-suite"});
    CHECK(o.code == 1);
    const Json r = o.json();
    CHECK(r["all_pass"] == false);
    std::vector<std::string> failed;
    for (const auto& c : r["checks"])
        if (c["pass"] == false) failed.push_back(c["name"]);
    CHECK(failed == std::vector<std::string>{"published witness for removing vector 4"});
    CHECK(r["checks"].size() == 14);
}

TEST_CASE("the installed binary uses the same exit codes", "[cli]") {
    Scratch tmp;
    const std::string bin = PRFRAME_CLI_PATH;
    const std::string file = tmp.path("f.json");
    auto status = [](const std::string& cmd) {
        const int raw = std::system(cmd.c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    CHECK(status(bin + " gen --n 3 --len 5 --seed 1 --out " + file + " > /dev/null") == 0);
    CHECK(status(bin + " --timing verify " + file + " > " + tmp.path("v.json")) == 0);
    const Json v = Json::parse(slurp(tmp.path("v.json")));
    CHECK(v.contains("timing_ms"));
    CHECK(status(bin + " gen --n 3 --len 7 2> /dev/null") == 2);
}
