// Exercises the command-line contract of the g2char binary: exit codes,
// output formats, byte stability, and the disk-cache behavior.
//
// Usage: cli_contract <path-to-g2char>

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "subprocess.hpp"

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
    if (ok) {
        std::cout << "ok    " << what << "\n";
    } else {
        std::cout << "FAIL  " << what << "\n";
        ++failures;
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_contract <path-to-g2char>\n";
        return 2;
    }
    const std::string cli = std::string("\"") + argv[1] + "\"";
    using testutil::run_command;
    namespace fs = std::filesystem;

    auto tmp = fs::temp_directory_path() /
               ("g2char_cli_" + std::to_string(::getpid()));
    fs::remove_all(tmp);
    fs::create_directories(tmp);
    const std::string cache = " --cache-dir \"" + (tmp / "cache").string() + "\"";

    {
        auto r = run_command(cli + " dim 1 1");
        check(r.exit_code == 0 && r.out == "64\n", "dim 1 1 prints 64");
        check(run_command(cli + " dim 0 0").out == "1\n", "dim 0 0 prints 1");
        check(run_command(cli + " dim -1 2 2>/dev/null").exit_code == 2,
              "dim rejects non-dominant input with exit 2");
    }
    {
        auto a = run_command(cli + " eval \"RO8\" --basis ind --format json");
        auto b = run_command(cli + " eval \"RO8\" --basis ind --format json");
        check(a.exit_code == 0 && a.out == b.out, "eval JSON output is byte-stable");
        auto doc = nlohmann::json::parse(a.out);
        check(doc["basis"] == "ind" && doc["window"].is_null() &&
                  doc["terms"].size() == 4 && doc["terms"][0]["coeff"] == 1,
              "eval JSON matches the character schema");
    }
    {
        auto r = run_command(cli + " eval \"UJ(2,-1/2,-3/2) - (RO8 - DISC)\" --basis ind");
        check(r.exit_code == 0 && r.out == "0\n", "the main identity evaluates to 0");
        auto v = run_command(cli + " eval \"V(0,1)\" --basis irr --cutoff 5" + cache);
        check(v.exit_code == 0 && v.out.find("V(0,1)") != std::string::npos,
              "irr-basis eval with a window");
        auto csv = run_command(cli + " eval \"RO8\" --format csv");
        check(csv.exit_code == 0 && csv.out == "a,b,coeff\n0,0,1\n0,1,-1\n1,1,1\n2,0,-1\n",
              "csv emitter");
    }
    {
        check(run_command(cli + " eval \"V(0,1\" 2>/dev/null").exit_code == 2,
              "parse error exits 2");
        check(run_command(cli + " eval \"Ind(0,0)\" --basis irr 2>/dev/null").exit_code == 2,
              "missing window exits 2");
        check(run_command(cli + " eval \"UJ(1,0,-1)\" 2>/dev/null").exit_code == 2,
              "non-regular UJ character exits 2");
        check(run_command(cli + " bogus 2>/dev/null").exit_code == 2,
              "unknown subcommand exits 2");
        check(run_command(cli + " verify nonsense 2>/dev/null").exit_code == 2,
              "unknown subcheck exits 2");
        check(run_command(cli + " verify main --wrong-flag 2>/dev/null").exit_code == 2,
              "unknown flag exits 2");
        check(run_command(cli + " verify expansions --n-max 1 2>/dev/null").exit_code == 2,
              "n-max below 2 exits 2");
    }
    {
        auto r = run_command(cli + " verify lemma22 --cutoff 0" + cache);
        check(r.exit_code == 0 && r.out.find("PASS") != std::string::npos,
              "verify lemma22 --cutoff 0 passes");
        auto j = run_command(cli + " verify prop24 --format json");
        auto doc = nlohmann::json::parse(j.out);
        check(j.exit_code == 0 && doc["passed"] == true &&
                  doc["checks"][0]["status"] == "pass",
              "verify prop24 --format json");
    }
    {
        auto r = run_command(cli + " weights 1 0 --format csv" + cache);
        check(r.exit_code == 0 &&
                  std::count(r.out.begin(), r.out.end(), '\n') == 8,
              "weights 1 0: seven rows plus header");
        long long sum = 0;
        std::istringstream in(r.out);
        std::string line;
        std::getline(in, line);  // header
        while (std::getline(in, line))
            sum += std::atoll(line.substr(line.rfind(',') + 1).c_str());
        check(sum == 7, "weights 1 0: multiplicities sum to 7");
        check(run_command(cli + " weights 0 -1 2>/dev/null").exit_code == 2,
              "weights rejects non-dominant input with exit 2");
    }
    {
        // cache file appears, then survives corruption
        auto file = tmp / "cache" / "g2_1_0.mult";
        check(fs::exists(file), "cache file written");
        std::ifstream in(file);
        std::string header;
        std::getline(in, header);
        in.close();
        check(header == "v1 g2 1 0", "cache header");
        std::ofstream out(file);
        out << "garbage\n";
        out.close();
        auto r = run_command(cli + " weights 1 0 --format csv" + cache + " 2>/dev/null");
        check(r.exit_code == 0 &&
                  std::count(r.out.begin(), r.out.end(), '\n') == 8,
              "corrupt cache is recomputed");
        std::ifstream again(file);
        std::getline(again, header);
        check(header == "v1 g2 1 0", "corrupt cache file is rewritten");
    }

    fs::remove_all(tmp);
    if (failures) {
        std::cout << failures << " CLI contract check(s) failed\n";
        return 1;
    }
    std::cout << "all CLI contract checks passed\n";
    return 0;
}
