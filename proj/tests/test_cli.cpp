#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

#include <unistd.h>

namespace {

namespace fs = std::filesystem;

struct Run {
    int code = -1;
    std::string out;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Run run(const std::string& args) {
    static int counter = 0;
    const fs::path out = fs::temp_directory_path() / ("r2kit_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    const std::string cmd = std::string(R2KIT_BIN) + " " + args + " > " + out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    fs::remove(out);
    return r;
}

}  // namespace

TEST_CASE("gen output is deterministic and starts with the csv header") {
    const Run a = run("gen --family gcrr --n 6");
    const Run b = run("gen --family gcrr --n 6");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("k,power,re,im,closed_form_delta\n", 0) == 0);
    CHECK(a.out.find("2,2,0.75,0,") != std::string::npos);
}

TEST_CASE("seeded commands repeat exactly") {
    CHECK(run("biortho --n 5 --seed 7").out == run("biortho --n 5 --seed 7").out);
    CHECK(run("verify --module perturbation --format csv").out == run("verify --module perturbation --format csv").out);
}

TEST_CASE("exit codes") {
    CHECK(run("zeros --n 4").code == 0);
    CHECK(run("interlace --n 6 --mode cross").code == 0);
    CHECK(run("verify --module poly_core").code == 0);
    CHECK(run("perturb --n 4 --rule kappa").code == 1);
    CHECK(run("gen --format xml").code == 2);
    CHECK(run("gen --no-such-flag").code == 2);
    CHECK(run("zeros --omega -1").code == 2);
    CHECK(run("gen --config /nonexistent/r2kit.json").code == 2);
    CHECK(run("biortho --n 4 --rule vanishing").code == 3);
}

TEST_CASE("flags override the config file") {
    const fs::path cfg = fs::temp_directory_path() / ("r2kit_cfg_" + std::to_string(::getpid()) + ".json");
    {
        std::ofstream o(cfg);
        o << R"({"family": {"kind": "constant", "d": 0.25}, "rule": "alpha-gcrr", "n": 5})";
    }
    const Run from_file = run("zeros --config " + cfg.string());
    const Run overridden = run("zeros --config " + cfg.string() + " --n 2");
    fs::remove(cfg);
    CHECK(from_file.code == 0);
    CHECK(std::count(from_file.out.begin(), from_file.out.end(), '\n') == 6);
    CHECK(overridden.out.find("-0.333333333333333") != std::string::npos);
}

TEST_CASE("plot data carries source tags") {
    const Run r = run("plot-data --figure 1 --n 4");
    CHECK(r.code == 0);
    CHECK(r.out.find(",P3\n") != std::string::npos);
    CHECK(r.out.find(",P4\n") != std::string::npos);
    CHECK(r.out.find(",L4\n") != std::string::npos);
}
