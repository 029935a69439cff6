#pragma once

#include <iosfwd>
#include <string>

#include "distalg/lang/eval.hpp"
#include "distalg/lang/printer.hpp"
#include "distalg/pairing.hpp"

namespace distalg {

struct SessionOptions {
    lang::Format format = lang::Format::Plain;
    double tolerance = 1e-6; // oracle convergence tolerance
    int eps_depth = 12;      // last epsilon is 2^-depth
    bool strict = false;     // abort batch on first syntax failure
};

/// One interpreter shared by the REPL and batch mode. Commands:
///   let <name> = <expr>        bind a name
///   <expr>                     evaluate, print canonical form
///   setM <mset-expr>           set the session's product parameter
///   supp <expr>                support descriptor
///   singsupp <expr>            singular support
///   pair <expr> bump(c,r)      numeric pairing against a bump
///   oracle <exprF> ; <exprG> bump(c,r)
///                              epsilon-limit value vs. <star(F,G), t>
///   format plain|latex|json    switch output format
///   quit
/// '#' starts a comment; blank lines are ignored.
class Session {
public:
    explicit Session(SessionOptions opts = {}) : opts_(std::move(opts)) {}

    struct Outcome {
        bool ok = true;
        bool quit = false;
        bool syntax_error = false; // lex/parse-level failure
        std::string output;        // possibly empty; no trailing newline
    };

    Outcome execute(const std::string& line);

    lang::Env& env() { return env_; }
    const SessionOptions& options() const { return opts_; }

private:
    Outcome eval_command(const std::string& cmd, const std::string& rest);

    lang::Env env_;
    SessionOptions opts_;
};

/// Runs the shared loop; returns the process exit code (0 = no command
/// errored, 1 = some command errored, 2 = aborted by strict mode).
/// When interactive, prints a "> " prompt before each line.
int run_stream(std::istream& in, std::ostream& out, SessionOptions opts, bool interactive);

/// Batch execution; exit 2 when the file is unreadable.
int run_batch_file(const std::string& path, SessionOptions opts, std::ostream& out);

/// Parses the setM sub-language, e.g. "[0,1) + {2} - {1/2}", "R", "empty".
MSet parse_mset_expr(const std::string& src);

} // namespace distalg
