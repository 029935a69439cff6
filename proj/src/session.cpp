#include "distalg/session.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "distalg/errors.hpp"
#include "distalg/json_io.hpp"
#include "distalg/lang/parser.hpp"
#include "distalg/products.hpp"

namespace distalg {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// --- setM sub-language ----------------------------------------------

struct MScan {
    const std::string& s;
    std::size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw parse_error(1, static_cast<int>(i) + 1, msg);
    }
    bool word(const char* w) {
        skip();
        std::size_t n = std::strlen(w);
        if (s.compare(i, n, w) != 0) return false;
        std::size_t after = i + n;
        if (after < s.size() && (std::isalnum(static_cast<unsigned char>(s[after])) || s[after] == '_'))
            return false;
        i = after;
        return true;
    }
    Rational rational() {
        skip();
        std::size_t b = i;
        if (i < s.size() && s[i] == '-') ++i;
        while (i < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/'))
            ++i;
        if (i == b) fail("expected a rational number");
        return parse_rational(s.substr(b, i - b));
    }
    std::optional<Rational> endpoint() {
        skip();
        if (word("-inf")) return std::nullopt;
        if (word("+inf") || word("inf")) return std::nullopt;
        return rational();
    }
    std::vector<Rational> point_set() {
        std::vector<Rational> pts;
        if (!eat('{')) fail("expected '{'");
        if (eat('}')) return pts;
        pts.push_back(rational());
        while (eat(',')) pts.push_back(rational());
        if (!eat('}')) fail("expected '}' or ','");
        return pts;
    }
};

} // namespace

MSet parse_mset_expr(const std::string& src) {
    MScan sc{src};
    MSet m = MSet::empty_set();

    auto item_union = [&sc](MSet acc) -> MSet {
        char c = sc.peek();
        if (c == 'R' && sc.word("R")) return acc.with_interval({std::nullopt, std::nullopt, false, false});
        if (c == 'e' && sc.word("empty")) return acc;
        if (c == '{') {
            for (const auto& p : sc.point_set()) acc = acc.with_point(p);
            return acc;
        }
        if (c == '(' || c == '[') {
            MSet::Interval iv;
            iv.lo_closed = (c == '[');
            ++sc.i;
            iv.lo = sc.endpoint();
            if (!sc.eat(',')) sc.fail("expected ',' in interval");
            iv.hi = sc.endpoint();
            char close = sc.peek();
            if (close != ')' && close != ']') sc.fail("expected ')' or ']'");
            ++sc.i;
            iv.hi_closed = (close == ']');
            if (!iv.lo && iv.lo_closed) sc.fail("'[' cannot pair with -inf");
            if (!iv.hi && iv.hi_closed) sc.fail("']' cannot pair with inf");
            return acc.with_interval(std::move(iv));
        }
        sc.fail("expected an interval, point set, 'R' or 'empty'");
    };

    m = item_union(std::move(m));
    while (true) {
        if (sc.eat('+')) {
            m = item_union(std::move(m));
        } else if (sc.eat('-')) {
            if (sc.peek() != '{') sc.fail("'-' only removes point sets, expected '{'");
            for (const auto& p : sc.point_set()) m = m.without_point(p);
        } else {
            break;
        }
    }
    sc.skip();
    if (sc.i != src.size()) sc.fail("trailing input after M-set expression");
    return m;
}

namespace {

// splits "<expr> bump(c,r)" from the right
struct BumpSplit {
    std::string expr;
    Rational center;
    Rational radius;
};

BumpSplit split_bump(const std::string& rest) {
    std::size_t pos = rest.rfind("bump");
    if (pos == std::string::npos)
        throw parse_error(1, static_cast<int>(rest.size()) + 1, "expected trailing bump(c,r)");
    std::string tail = rest.substr(pos + 4);
    MScan sc{tail};
    if (!sc.eat('(')) sc.fail("expected '(' after bump");
    Rational c = sc.rational();
    if (!sc.eat(',')) sc.fail("expected ',' in bump(c,r)");
    Rational r = sc.rational();
    if (!sc.eat(')')) sc.fail("expected ')' after bump radius");
    sc.skip();
    if (sc.i != tail.size()) sc.fail("trailing input after bump(c,r)");
    BumpSplit out;
    out.expr = trim(rest.substr(0, pos));
    if (out.expr.empty())
        throw parse_error(1, 1, "expected an expression before bump(c,r)");
    out.center = std::move(c);
    out.radius = std::move(r);
    return out;
}

std::string singsupp_text(const std::vector<Rational>& pts) {
    std::string out = "{";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out += ", ";
        out += to_string(pts[i]);
    }
    return out + "}";
}

bool valid_name(const std::string& name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

} // namespace

Session::Outcome Session::execute(const std::string& raw_line) {
    std::string line = raw_line;
    if (std::size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) return Outcome{};

    std::size_t sp = 0;
    while (sp < line.size() && !std::isspace(static_cast<unsigned char>(line[sp]))) ++sp;
    std::string head = line.substr(0, sp);
    std::string rest = trim(sp < line.size() ? line.substr(sp) : "");

    static const char* kCommands[] = {"let", "setM", "supp", "singsupp",
                                      "pair", "oracle", "format", "quit"};
    bool is_command = false;
    for (const char* c : kCommands) is_command |= (head == c);
    if (!is_command) {
        head = "eval";
        rest = line;
    }

    nlohmann::json jout;
    jout["cmd"] = head;
    bool json_mode = opts_.format == lang::Format::Json;

    Outcome out;
    try {
        if (head == "quit") {
            out.quit = true;
            if (json_mode) {
                jout["ok"] = true;
                out.output = dump_canonical(jout);
            }
            return out;
        }
        if (head == "format") {
            opts_.format = lang::parse_format(rest);
            if (opts_.format == lang::Format::Json) {
                jout["ok"] = true;
                jout["format"] = lang::format_name(opts_.format);
                out.output = dump_canonical(jout);
            }
            return out;
        }
        if (head == "setM") {
            env_.current_m = parse_mset_expr(rest);
            if (json_mode) {
                jout["ok"] = true;
                jout["m"] = to_json(env_.current_m);
                out.output = dump_canonical(jout);
            }
            return out;
        }
        if (head == "let") {
            std::size_t eq = rest.find('=');
            if (eq == std::string::npos)
                throw parse_error(1, static_cast<int>(rest.size()) + 1, "expected '=' in let");
            std::string name = trim(rest.substr(0, eq));
            if (!valid_name(name))
                throw parse_error(1, 1, "invalid binding name '" + name + "'");
            if (lang::is_reserved_name(name))
                throw parse_error(1, 1, "'" + name + "' is reserved");
            ADist value = lang::eval_ast(lang::parse(rest.substr(eq + 1)), env_);
            env_.bindings[name] = value;
            if (json_mode) {
                jout["ok"] = true;
                jout["name"] = name;
                jout["value"] = to_json(value);
                out.output = dump_canonical(jout);
            }
            return out;
        }
        if (head == "supp") {
            ADist f = lang::eval_ast(lang::parse(rest), env_);
            std::string desc = support(f).to_string();
            if (json_mode) {
                jout["ok"] = true;
                jout["support"] = desc;
                out.output = dump_canonical(jout);
            } else {
                out.output = desc;
            }
            return out;
        }
        if (head == "singsupp") {
            ADist f = lang::eval_ast(lang::parse(rest), env_);
            std::string desc = singsupp_text(singsupp(f));
            if (json_mode) {
                jout["ok"] = true;
                jout["singsupp"] = desc;
                out.output = dump_canonical(jout);
            } else {
                out.output = desc;
            }
            return out;
        }
        if (head == "pair") {
            BumpSplit bs = split_bump(rest);
            ADist f = lang::eval_ast(lang::parse(bs.expr), env_);
            TestFunction t(bs.center, bs.radius);
            PairingResult p = pair(f, t);
            if (json_mode) {
                jout["ok"] = true;
                jout["value"] = p.value;
                jout["error_estimate"] = p.error_estimate;
                out.output = dump_canonical(jout);
            } else {
                out.output = fmt_double(p.value) + " (est " + fmt_double(p.error_estimate) + ")";
            }
            return out;
        }
        if (head == "oracle") {
            std::size_t semi = rest.find(';');
            if (semi == std::string::npos)
                throw parse_error(1, static_cast<int>(rest.size()) + 1,
                                  "expected ';' between the two factors");
            std::string expr_f = trim(rest.substr(0, semi));
            BumpSplit bs = split_bump(trim(rest.substr(semi + 1)));
            ADist f = lang::eval_ast(lang::parse(expr_f), env_);
            ADist g = lang::eval_ast(lang::parse(bs.expr), env_);
            TestFunction t(bs.center, bs.radius);
            OracleOptions oo;
            oo.tolerance = opts_.tolerance;
            oo.eps_k_max = opts_.eps_depth;
            PairingResult exact = pair(star(f, g), t);
            PairingResult approx = epsilon_limit_pair(f, g, t, oo);
            double disc = std::abs(exact.value - approx.value);
            if (json_mode) {
                jout["ok"] = true;
                jout["exact"] = exact.value;
                jout["oracle"] = approx.value;
                jout["discrepancy"] = disc;
                out.output = dump_canonical(jout);
            } else {
                out.output = "exact = " + fmt_double(exact.value) +
                             ", oracle = " + fmt_double(approx.value) +
                             ", discrepancy = " + fmt_double(disc);
            }
            return out;
        }
        // plain expression
        ADist f = lang::eval_ast(lang::parse(rest), env_);
        if (json_mode) {
            jout["ok"] = true;
            jout["value"] = to_json(f);
            out.output = dump_canonical(jout);
        } else {
            out.output = lang::print_canonical(f, opts_.format);
        }
        return out;
    } catch (const parse_error& e) {
        out.ok = false;
        out.syntax_error = true;
        if (json_mode) {
            jout["ok"] = false;
            jout["error"] = e.what();
            out.output = dump_canonical(jout);
        } else {
            out.output = std::string("error: ") + e.what();
        }
        return out;
    } catch (const error& e) {
        out.ok = false;
        if (json_mode) {
            jout["ok"] = false;
            jout["error"] = e.what();
            out.output = dump_canonical(jout);
        } else {
            out.output = std::string("error: ") + e.what();
        }
        return out;
    }
}

int run_stream(std::istream& in, std::ostream& out, SessionOptions opts, bool interactive) {
    Session session(std::move(opts));
    bool any_error = false;
    std::string line;
    if (interactive) out << "> " << std::flush;
    while (std::getline(in, line)) {
        Session::Outcome o = session.execute(line);
        if (!o.output.empty()) out << o.output << "\n";
        if (!o.ok) {
            any_error = true;
            if (o.syntax_error && session.options().strict) return 2;
        }
        if (o.quit) break;
        if (interactive) out << "> " << std::flush;
    }
    return any_error ? 1 : 0;
}

int run_batch_file(const std::string& path, SessionOptions opts, std::ostream& out) {
    std::ifstream file(path);
    if (!file) {
        out << "error: cannot open '" << path << "'\n";
        return 2;
    }
    return run_stream(file, out, std::move(opts), false);
}

} // namespace distalg
