#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "hdr/cli/cli.hpp"

namespace {

std::string read_input(const std::string& arg) {
    if (arg.empty()) return {};
    if (arg.front() == '{') return arg;
    if (arg == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream f(arg);
    if (!f) throw std::runtime_error("cannot open input file '" + arg + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    using namespace hdr::cli;
    CLI::App app{"hdrtool: exact checks for Higgs-de Rham flows on the projective line"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    RunConfig cfg;
    std::string input;
    std::uint32_t p = 0;
    bool text = false;
    app.add_option("--input", input, "JSON input: inline text, a file path, or - for stdin");
    app.add_option("--p", p, "odd prime, used when the input has no p field");
    app.add_option("--guard-enum", cfg.guard_enum, "enumeration budget")->check(CLI::PositiveNumber);
    app.add_option("--guard-iter", cfg.guard_iter, "iteration budget")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "seed for selftest (HDR_SEED overrides)");
    app.add_option("--max-iter", cfg.max_iter, "flow steps");
    auto* json_flag = app.add_flag("--json", "JSON output (default)");
    app.add_flag("--text", text, "key: value output")->excludes(json_flag);

    for (const char* name : {"discriminants", "monodromy", "split", "residues", "semistable", "cartier", "flow",
                             "nearby-check", "selftest"})
        app.add_subcommand(name);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return input_error;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    if (p) cfg.p = p;
    if (const char* env = std::getenv("HDR_SEED")) {
        try {
            std::size_t used = 0;
            cfg.seed = std::stoull(env, &used);
            if (used != std::string(env).size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            std::cerr << "HDR_SEED must be a nonnegative integer\n";
            return input_error;
        }
    }

    RunResult r;
    try {
        cfg.input = read_input(input);
        r = run(cfg);
    } catch (const std::exception& e) {
        r.report = Json{{"command", cfg.command}, {"error", Json{{"kind", "input"}, {"message", e.what()}}}};
        r.exit_code = input_error;
    }
    std::cout << (text ? render_text(r.report) : render_json(r.report));
    return r.exit_code;
}
