#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "distalg/session.hpp"

using namespace distalg;

namespace {

std::string run_script(const std::string& script, SessionOptions opts = {}, int* code = nullptr) {
    std::istringstream in(script);
    std::ostringstream out;
    int rc = run_stream(in, out, opts, false);
    if (code) *code = rc;
    return out.str();
}

} // namespace

TEST_CASE("session evaluates expressions against the current M") {
    int rc = -1;
    std::string out = run_script("setM [0,1)\ndelta(0)*H(x)\n", {}, &rc);
    CHECK(out == "delta(0)\n");
    CHECK(rc == 0);

    out = run_script("setM empty\ndelta(0)*H(x)\n", {}, &rc);
    CHECK(out == "0\n");
    CHECK(rc == 0);

    // D(H*H) = delta by Leibniz and the idempotent Heaviside
    out = run_script("D(H(x)*H(x))\n");
    CHECK(out == "delta(0)\n");
}

TEST_CASE("session let bindings persist and reserved names are rejected") {
    std::string out = run_script("let f = delta(0) + H(x)\nf - H(x)\n");
    CHECK(out == "delta(0)\n");

    int rc = -1;
    out = run_script("let delta = 1\n", {}, &rc);
    CHECK(out.find("error:") == 0);
    CHECK(out.find("reserved") != std::string::npos);
    CHECK(rc == 1);
}

TEST_CASE("session supp and singsupp commands") {
    CHECK(run_script("supp H(x-1)\n") == "[1, +inf)\n");
    CHECK(run_script("supp delta(3)\n") == "{3}\n");
    CHECK(run_script("singsupp abs(x) + delta(1/2)\n") == "{0, 1/2}\n");
    CHECK(run_script("supp 0\n") == "{}\n");
    CHECK(run_script("singsupp 1\n") == "{}\n");
}

TEST_CASE("session setM variants parse") {
    CHECK(run_script("setM R\ndelta(1/3)*H(x-1/3)\n") == "delta(1/3)\n");
    CHECK(run_script("setM (-inf,0] + {1/3}\ndelta(1/3)*H(x-1/3)\n") == "delta(1/3)\n");
    CHECK(run_script("setM [0,1) - {1/3}\ndelta(1/3)*H(x-1/3)\n") == "0\n");
    CHECK(run_script("setM {0, 1} + {2}\ndelta(2)*H(x-2)\n") == "delta(2)\n");

    int rc = -1;
    std::string out = run_script("setM [0,1) - (2,3)\n", {}, &rc);
    CHECK(out.find("error:") == 0);
    CHECK(rc == 1);
}

TEST_CASE("session pair and oracle commands") {
    std::string out = run_script("pair delta(0) bump(0,1)\n");
    CHECK(out.find("0.367879441171") == 0);

    out = run_script("oracle abs(x) ; abs(x) bump(0,1)\n");
    CHECK(out.find("exact = ") == 0);
    CHECK(out.find("discrepancy = ") != std::string::npos);
    // the discrepancy is the trailing number; it must be tiny
    double disc = std::stod(out.substr(out.rfind('=') + 1));
    CHECK(disc <= 1e-6);
}

TEST_CASE("session json mode emits one object per command") {
    SessionOptions opts;
    opts.format = lang::Format::Json;
    std::string out = run_script("let f = delta(0)\nf\nsupp f\nbroken(\nquit\n", opts);
    std::istringstream lines(out);
    std::string line;
    int n = 0;
    while (std::getline(lines, line)) {
        ++n;
        auto j = nlohmann::json::parse(line); // throws on malformed output
        CHECK(j.contains("cmd"));
        CHECK(j.contains("ok"));
    }
    CHECK(n == 5);
}

TEST_CASE("session errors keep the loop alive and set the exit code") {
    int rc = -1;
    std::string out = run_script("H(x^2)\ndelta(0)\n", {}, &rc);
    CHECK(out.find("error:") == 0);
    CHECK(out.find("unsupported H argument") != std::string::npos);
    CHECK(out.find("delta(0)\n") != std::string::npos);
    CHECK(rc == 1);
}

TEST_CASE("strict mode aborts on the first syntax error with code 2") {
    SessionOptions opts;
    opts.strict = true;
    int rc = -1;
    std::string out = run_script("H(x^2)\ndelta(0)\n", opts, &rc);
    CHECK(rc == 2);
    CHECK(out.find("delta(0)\n") == std::string::npos);
}

TEST_CASE("comments and blank lines produce no output") {
    int rc = -1;
    std::string out = run_script("# a comment\n\n   \nH(x) # trailing comment\n", {}, &rc);
    CHECK(out == "H(x)\n");
    CHECK(rc == 0);
}

TEST_CASE("quit stops processing") {
    int rc = -1;
    std::string out = run_script("delta(0)\nquit\nH(x)\n", {}, &rc);
    CHECK(out == "delta(0)\n");
    CHECK(rc == 0);
}

TEST_CASE("format switches output style mid-session") {
    std::string out = run_script("format latex\ndelta(1/2)\nformat plain\ndelta(1/2)\n");
    CHECK(out == "\\delta_{\\tfrac{1}{2}}\ndelta(1/2)\n");
}

TEST_CASE("batch of an unreadable file exits 2") {
    std::ostringstream sink;
    CHECK(run_batch_file("/nonexistent/path.da", {}, sink) == 2);
}
