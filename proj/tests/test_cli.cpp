#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

fs::path workdir() {
    static fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("toric_cli_test_" + std::to_string(::getpid()));
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write(const std::string& name, const std::string& text) {
    auto p = workdir() / name;
    std::ofstream(p) << text;
    return p.string();
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

int run(const std::string& args) {
    std::string cmd = std::string(TORIC_CLI) + " " + args + " >" + (workdir() / "stdout.txt").string() + " 2>" +
                      (workdir() / "stderr.txt").string();
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string out(const std::string& name) { return (workdir() / name).string(); }

const char* small_matrix = "2 4\n1 1 1 1\n0 0 1 2\n";

} // namespace

TEST_CASE("markov writes moves and a manifest") {
    auto B = write("B.mat", small_matrix);
    REQUIRE(run("markov --matrix " + B + " --out " + out("m1")) == 0);
    CHECK(slurp(out("m1") + "/markov.moves") == "2 4\n1 -1 0 0\n1 0 -2 1\n");
    auto j = nlohmann::json::parse(slurp(out("m1") + "/manifest.json"));
    for (auto key : {"tool", "version", "command", "parameters", "inputs", "outputs", "exit_code", "timestamp"})
        CHECK(j.contains(key));
    CHECK(j["command"] == "markov");
    CHECK(j["exit_code"] == 0);
    CHECK(j["inputs"].size() == 1);
    CHECK(j["outputs"].contains("markov.moves"));
    CHECK(j["outputs"]["markov.moves"].get<std::string>().size() == 64);
}

TEST_CASE("runs are deterministic apart from the timestamp") {
    auto B = write("B.mat", small_matrix);
    std::string manifests[2];
    for (int k = 0; k < 2; ++k) {
        REQUIRE(run("graver --matrix " + B + " --threads 2 --out " + out("det")) == 0);
        auto j = nlohmann::json::parse(slurp(out("det") + "/manifest.json"));
        j.erase("timestamp");
        manifests[k] = j.dump();
    }
    CHECK(manifests[0] == manifests[1]);
}

TEST_CASE("exit codes") {
    auto B = write("B.mat", small_matrix);
    auto bad = write("bad.mat", "2 4\n1 1 x 1\n");
    CHECK(run("markov --matrix " + bad + " --out " + out("bad")) == 2);
    CHECK(run("") == 2);
    CHECK(run("markov") == 2);
    CHECK(run("--version") == 0);
    CHECK(run("markov --matrix " + B + " --out /proc/toric_cannot_write") == 3);
    auto M = write("M.moves", "2 4\n1 -1 0 0\n1 0 -2 1\n");
    auto half = write("half.moves", "1 4\n1 -1 0 0\n");
    CHECK(run("verify --mode markov --matrix " + B + " --moves " + M + " --bound 5 --out " + out("v1")) == 0);
    CHECK(slurp(out("stdout.txt")).rfind("PASS", 0) == 0);
    CHECK(run("verify --mode markov --matrix " + B + " --moves " + half + " --bound 5 --out " + out("v2")) == 1);
    CHECK(slurp(out("stdout.txt")).rfind("FAIL", 0) == 0);
    auto verdict = nlohmann::json::parse(slurp(out("v2") + "/verdict.json"));
    CHECK(verdict["pass"] == false);
}

TEST_CASE("lift along an index map") {
    auto B = write("B.mat", small_matrix);
    auto phi = write("phi.map", "3 1 2 2 3\n");
    REQUIRE(run("lift --matrix " + B + " --phi " + phi + " --out " + out("lift")) == 0);
    CHECK(slurp(out("lift") + "/lifted.moves") == "2 4\n1 -1 0 0\n1 0 -2 1\n");
    CHECK(slurp(out("lift") + "/pf.moves") == "2 3\n1 -2 1\n1 -1 0\n");
    CHECK(slurp(out("lift") + "/kernel.moves") == "0 4\n");
    auto holey = write("holey.mat", "2 3\n1 1 1\n0 1 3\n");
    auto one = write("one.map", "1 1 1 1\n");
    CHECK(run("lift --matrix " + holey + " --phi " + one + " --out " + out("holey")) == 1);
    auto badphi = write("badphi.map", "3 1 2 2 4\n");
    CHECK(run("lift --matrix " + B + " --phi " + badphi + " --out " + out("badphi")) == 2);
}

TEST_CASE("fiber product of two gradings") {
    auto B = write("B.mat", small_matrix);
    auto phi = write("phi.map", "3 1 2 2 3\n");
    auto phi2 = write("phi2.map", "3 2 1 1 3\n");
    REQUIRE(run("tfp --matrix " + B + " --phi " + phi + " --matrix " + B + " --phi " + phi2 + " --out " + out("tfp")) ==
            0);
    CHECK(slurp(out("tfp") + "/product.mat") == "4 5\n1 1 1 1 1\n0 0 0 1 2\n1 1 1 1 1\n0 1 0 0 2\n");
    CHECK(slurp(out("tfp") + "/pfi.moves") == "3 3\n0 1 -1\n1 -1 0\n1 0 -1\n");
    auto prod = out("tfp") + "/product.mat", basis = out("tfp") + "/basis.moves";
    CHECK(run("verify --mode markov --matrix " + prod + " --moves " + basis + " --out " + out("tfpv")) == 0);
    REQUIRE(run("degree-bound --matrix " + B + " --phi " + phi + " --matrix " + B + " --phi " + phi2 + " --out " +
                out("deg")) == 0);
    CHECK(slurp(out("deg") + "/degree_bound.txt") == "4\n");
}

TEST_CASE("inequality bases and hierarchical models") {
    auto D = write("D.mat", "4 2\n1 0\n-1 -1\n1 1\n-2 -1\n");
    REQUIRE(run("ineq-markov --ineq " + D + " --out " + out("ineq")) == 0);
    CHECK(slurp(out("ineq") + "/ineq.moves") == "2 2\n1 -2\n1 -1\n");
    REQUIRE(run("hier --action design --complex [12][13][23] --levels 2,2,2 --out " + out("design")) == 0);
    CHECK(slurp(out("design") + "/design.mat").rfind("12 8\n", 0) == 0);
    REQUIRE(run("hier --action graver-c3 --p 2 --r 3 --out " + out("gc3")) == 0);
    CHECK(slurp(out("gc3") + "/graver.moves").rfind("3 12\n", 0) == 0);
    REQUIRE(run("hier --action split --complex [12][13][24][34] --levels 2,2,3,2 --v1 1,2,3 --v2 2,3,4 --out " +
                out("split")) == 0);
    CHECK(fs::exists(out("split") + "/left.phi"));
    CHECK(run("hier --action split --complex [12][13][24][34] --levels 2,2,3,2 --v1 1,2 --v2 3,4 --out " +
              out("split2")) == 2);
}

TEST_CASE("hole scan") {
    auto holey = write("holey.mat", "2 3\n1 1 1\n0 1 3\n");
    CHECK(run("verify --mode holes --matrix " + holey + " --bound 3 --out " + out("holes")) == 1);
    CHECK(slurp(out("holes") + "/holes.mat").rfind("3 2\n", 0) == 0);
    auto B = write("B.mat", small_matrix);
    CHECK(run("verify --mode holes --matrix " + B + " --bound 4 --out " + out("noholes")) == 0);
}
