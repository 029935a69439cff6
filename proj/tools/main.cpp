#include <unistd.h>

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "distalg/session.hpp"

int main(int argc, char** argv) {
    CLI::App app{"distalg - exact calculator for the distribution algebra (A, +, *_M)"};

    std::string script;
    std::string format = "plain";
    distalg::SessionOptions opts;

    app.add_option("script", script, "script file to execute (default: interactive REPL)");
    app.add_option("--format", format, "output format: plain, latex or json")
        ->check(CLI::IsMember({"plain", "latex", "json"}));
    app.add_option("--tolerance", opts.tolerance, "oracle convergence tolerance");
    app.add_option("--eps-depth", opts.eps_depth, "oracle epsilon sequence depth (last eps = 2^-depth)")
        ->check(CLI::Range(5, 40));
    app.add_flag("--strict", opts.strict, "abort on the first syntax error with exit code 2");

    CLI11_PARSE(app, argc, argv);
    opts.format = distalg::lang::parse_format(format);

    if (!script.empty()) return distalg::run_batch_file(script, opts, std::cout);

    bool interactive = isatty(fileno(stdin)) != 0;
    if (interactive)
        std::cout << "distalg - type an expression, 'quit' to exit\n";
    return distalg::run_stream(std::cin, std::cout, opts, interactive);
}
