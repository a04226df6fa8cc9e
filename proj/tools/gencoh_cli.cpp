#include "gencoh/runner.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <cstdlib>
#include <iostream>

#ifdef _WIN32
#include <io.h>
#define GENCOH_ISATTY _isatty(_fileno(stdout))
#else
#include <unistd.h>
#define GENCOH_ISATTY isatty(fileno(stdout))
#endif

namespace {

bool color_enabled() {
    const char* env = std::getenv("GENCOH_COLOR");
    if (env && std::string(env) == "0") return false;
    return GENCOH_ISATTY;
}

int run(const std::string& command, const std::string& file, const gencoh::RunOptions& opts,
        const std::string& format) {
    gencoh::ProblemFile problem;
    try {
        problem = gencoh::load_problem(file);
    } catch (const gencoh::ParseError& e) {
        std::cerr << "gencoh: parse error: " << e.what() << "\n";
        return 2;
    }
    nlohmann::json result;
    try {
        result = gencoh::run_command(command, problem, opts);
    } catch (const std::invalid_argument& e) {
        std::cerr << "gencoh: " << e.what() << "\n";
        return 2;
    }
    if (format == "json")
        std::cout << result.dump(2) << "\n";
    else
        std::cout << gencoh::render_text(result, color_enabled());
    return gencoh::result_has_error(result) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact generalized-complex cohomology engine for nilpotent Lie algebras"};
    app.require_subcommand(1);

    std::string file;
    std::string format = "table";
    std::string theories = "delbar,del,bc,aeppli";
    std::size_t pages = 2;
    std::size_t order = 2;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "problem file (JSON, see schema/problem.schema.json)")
            ->required();
        cmd->add_option("--format", format, "output format: table or json")
            ->check(CLI::IsMember({"table", "json"}));
    };

    CLI::App* check = app.add_subcommand("check", "validate the structure and print invariants");
    add_common(check);

    CLI::App* coh = app.add_subcommand("cohomology", "compute cohomology tables");
    add_common(coh);
    coh->add_option("--theory", theories,
                    "comma-separated: delbar,del,bc,aeppli,derham,algebroid,dolbeault");

    CLI::App* spec = app.add_subcommand("spectral", "Hochschild-Serre spectral sequence");
    add_common(spec);
    spec->add_option("--pages", pages, "compute pages up to E_r");

    CLI::App* def = app.add_subcommand("deform", "Maurer-Cartan / Kuranishi deformation");
    add_common(def);
    def->add_option("--order", order, "Kuranishi truncation order");

    CLI11_PARSE(app, argc, argv);

    gencoh::RunOptions opts;
    opts.pages = pages;
    opts.order = order;
    opts.theories.clear();
    std::string token;
    for (char c : theories + ",") {
        if (c == ',') {
            if (!token.empty()) opts.theories.push_back(token);
            token.clear();
        } else {
            token.push_back(c);
        }
    }

    std::string command;
    if (check->parsed()) command = "check";
    if (coh->parsed()) command = "cohomology";
    if (spec->parsed()) command = "spectral";
    if (def->parsed()) command = "deform";
    return run(command, file, opts, format);
}
