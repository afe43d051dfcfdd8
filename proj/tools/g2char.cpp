// g2char - exact character calculus for the complex Lie group G2.
//
// Subcommands:
//   verify   run the built-in identity checks
//   eval     evaluate a virtual-character expression
//   dim      Weyl dimension of V(a,b)
//   weights  full weight table of V(a,b)
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "g2char/document.hpp"
#include "g2char/dsl.hpp"
#include "g2char/verify.hpp"

namespace {

namespace fs = std::filesystem;
using namespace g2char;

std::string joined_command(int argc, char** argv) {
    std::string out = "g2char";
    for (int i = 1; i < argc; ++i)
        out += std::string(" ") + argv[i];
    return out;
}

std::optional<std::string> config_cache_dir() {
    const char* home = std::getenv("HOME");
    const char* xdg = std::getenv("XDG_CONFIG_HOME");
    fs::path cfg;
    if (xdg && *xdg)
        cfg = fs::path(xdg) / "g2char" / "config";
    else if (home && *home)
        cfg = fs::path(home) / ".config" / "g2char" / "config";
    else
        return std::nullopt;
    std::ifstream in(cfg);
    if (!in.is_open())
        return std::nullopt;
    std::string line;
    while (std::getline(in, line)) {
        auto eq = line.find('=');
        if (eq == std::string::npos)
            continue;
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t"));
            auto last = s.find_last_not_of(" \t\r");
            s.erase(last == std::string::npos ? 0 : last + 1);
            return s;
        };
        if (trim(line.substr(0, eq)) == "cache-dir") {
            std::string value = trim(line.substr(eq + 1));
            if (!value.empty())
                return value;
        }
    }
    return std::nullopt;
}

// Cache directory resolution: --cache-dir flag, else the config file, else
// the user-data default. --no-cache disables disk caching entirely.
std::optional<fs::path> resolve_cache_dir(const std::string& flag, bool no_cache) {
    if (no_cache)
        return std::nullopt;
    if (!flag.empty())
        return fs::path(flag);
    if (auto cfg = config_cache_dir())
        return fs::path(*cfg);
    const char* xdg = std::getenv("XDG_DATA_HOME");
    if (xdg && *xdg)
        return fs::path(xdg) / "g2char" / "mult-cache";
    const char* home = std::getenv("HOME");
    if (home && *home)
        return fs::path(home) / ".local" / "share" / "g2char" / "mult-cache";
    return std::nullopt;
}

void apply_threads(int threads) {
#ifdef _OPENMP
    if (threads > 0)
        omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

struct VerifyOptions {
    std::string subcheck;
    int cutoff = 24;
    int n_max = 10;
    std::string format = "text";
    std::string cache_dir;
    bool no_cache = false;
    int threads = 0;
};

int run_verify(const VerifyOptions& opt, const std::string& command) {
    if (opt.subcheck == "expansions" || opt.subcheck == "all") {
        if (opt.n_max < 2) {
            std::cerr << "g2char: --n-max must be >= 2 for the expansions check\n";
            return 2;
        }
    }
    apply_threads(opt.threads);
    RootSystem rs = build_g2();
    MultiplicityEngine engine(rs, resolve_cache_dir(opt.cache_dir, opt.no_cache));
    VerifyContext ctx{rs, engine};

    std::vector<VerificationReport> reports;
    if (opt.subcheck == "all")
        reports = verify_all(ctx, opt.cutoff, opt.n_max);
    else if (opt.subcheck == "lemma22")
        reports.push_back(verify_lemma22(ctx, opt.cutoff));
    else if (opt.subcheck == "prop24")
        reports.push_back(verify_prop24(ctx));
    else if (opt.subcheck == "main")
        reports.push_back(verify_main(ctx, opt.cutoff));
    else if (opt.subcheck == "costantini")
        reports.push_back(verify_costantini(ctx, opt.cutoff));
    else
        reports.push_back(verify_expansions(ctx, opt.n_max));

    bool all_passed = true;
    for (const VerificationReport& r : reports)
        all_passed = all_passed && r.passed;

    if (opt.format == "json") {
        nlohmann::ordered_json doc;
        doc["command"] = command;
        doc["subcheck"] = opt.subcheck;
        doc["passed"] = all_passed;
        nlohmann::ordered_json checks = nlohmann::ordered_json::array();
        for (const VerificationReport& r : reports)
            checks.push_back(report_document(r));
        doc["checks"] = std::move(checks);
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const VerificationReport& r : reports)
            std::cout << report_text(r) << "\n";
        std::cout << (all_passed ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return all_passed ? 0 : 1;
}

struct EvalOptions {
    std::string expr;
    std::string basis = "ind";
    int cutoff = -1;  // -1 means no window given
    std::string format = "text";
    std::string cache_dir;
    bool no_cache = false;
    int threads = 0;
};

int run_eval(const EvalOptions& opt, const std::string& command) {
    CharExpr expr = [&] {
        try {
            return parse_expr(opt.expr);
        } catch (const ParseError& e) {
            std::cerr << "g2char: " << e.what() << "\n";
            std::cerr << "  " << opt.expr << "\n";
            std::cerr << "  " << std::string(e.position, ' ') << "^ expected "
                      << e.expected << "\n";
            std::exit(2);
        }
    }();
    apply_threads(opt.threads);
    RootSystem rs = build_g2();
    MultiplicityEngine engine(rs, resolve_cache_dir(opt.cache_dir, opt.no_cache));
    EvalContext ctx{rs, engine};
    Basis basis = opt.basis == "irr" ? Basis::irr : Basis::ind;
    std::optional<TruncationWindow> window;
    if (opt.cutoff >= 0)
        window = TruncationWindow{opt.cutoff};
    VirtualCharacter vc = eval_expr(expr, basis, window, ctx);

    if (opt.format == "json")
        std::cout << character_document(vc, command).dump(2) << "\n";
    else if (opt.format == "csv")
        std::cout << character_csv(vc);
    else {
        std::cout << to_string(vc);
        if (vc.window())
            std::cout << "   (window " << *vc.window() << ")";
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact character calculus for the complex Lie group G2"};
    app.require_subcommand(1);
    const std::string command = joined_command(argc, argv);

    VerifyOptions vopt;
    CLI::App* verify = app.add_subcommand("verify", "Run the built-in identity checks");
    verify->add_option("subcheck", vopt.subcheck, "Which check to run")
        ->required()
        ->check(CLI::IsMember({"lemma22", "prop24", "main", "costantini", "expansions", "all"}));
    verify->add_option("--cutoff", vopt.cutoff, "Truncation window a+b <= N")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--n-max", vopt.n_max, "Largest n for the expansion check");
    verify->add_option("--format", vopt.format)->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--cache-dir", vopt.cache_dir, "Multiplicity cache directory");
    verify->add_flag("--no-cache", vopt.no_cache, "Disable the disk cache");
    verify->add_option("--threads", vopt.threads, "OpenMP thread count (0 = default)");

    EvalOptions eopt;
    CLI::App* eval = app.add_subcommand("eval", "Evaluate a virtual-character expression");
    eval->add_option("expr", eopt.expr, "Expression, e.g. \"RO8 - DISC\"")->required();
    eval->add_option("--basis", eopt.basis)->check(CLI::IsMember({"ind", "irr"}));
    eval->add_option("--cutoff", eopt.cutoff, "Truncation window for the irr basis")
        ->check(CLI::NonNegativeNumber);
    eval->add_option("--format", eopt.format)->check(CLI::IsMember({"text", "json", "csv"}));
    eval->add_option("--cache-dir", eopt.cache_dir, "Multiplicity cache directory");
    eval->add_flag("--no-cache", eopt.no_cache, "Disable the disk cache");
    eval->add_option("--threads", eopt.threads, "OpenMP thread count (0 = default)");

    long long dim_a = 0, dim_b = 0;
    CLI::App* dim = app.add_subcommand("dim", "Weyl dimension of V(a,b)");
    dim->add_option("a", dim_a)->required();
    dim->add_option("b", dim_b)->required();

    long long w_a = 0, w_b = 0;
    std::string w_format = "text", w_cache_dir;
    bool w_no_cache = false;
    CLI::App* weights = app.add_subcommand("weights", "Weight table of V(a,b)");
    weights->add_option("a", w_a)->required();
    weights->add_option("b", w_b)->required();
    weights->add_option("--format", w_format)->check(CLI::IsMember({"text", "json", "csv"}));
    weights->add_option("--cache-dir", w_cache_dir, "Multiplicity cache directory");
    weights->add_flag("--no-cache", w_no_cache, "Disable the disk cache");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(verify))
            return run_verify(vopt, command);
        if (app.got_subcommand(eval))
            return run_eval(eopt, command);
        if (app.got_subcommand(dim)) {
            FwWeight lambda{dim_a, dim_b};
            if (!lambda.dominant()) {
                std::cerr << "g2char: (a,b) must be dominant: " << lambda.to_string()
                          << "\n";
                return 2;
            }
            RootSystem rs = build_g2();
            std::cout << weyl_dim(rs, lambda) << "\n";
            return 0;
        }
        if (app.got_subcommand(weights)) {
            FwWeight lambda{w_a, w_b};
            if (!lambda.dominant()) {
                std::cerr << "g2char: (a,b) must be dominant: " << lambda.to_string()
                          << "\n";
                return 2;
            }
            RootSystem rs = build_g2();
            MultiplicityEngine engine(rs, resolve_cache_dir(w_cache_dir, w_no_cache));
            WeightSystem ws = engine.weight_system(lambda);
            if (w_format == "json")
                std::cout << weight_system_document(rs, ws, command).dump(2) << "\n";
            else if (w_format == "csv")
                std::cout << weight_system_csv(ws);
            else
                for (const auto& [mu, mult] : ws.table())
                    std::cout << mu.a << " " << mu.b << " " << mult << "\n";
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "g2char: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "g2char: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "g2char: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
