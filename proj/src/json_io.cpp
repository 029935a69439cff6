#include "distalg/json_io.hpp"

#include "distalg/errors.hpp"

namespace distalg {

namespace {

nlohmann::json poly_to_json(const Poly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
    return arr;
}

Poly poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw representation_error("piece must be a coefficient array");
    std::vector<Scalar> coeffs;
    for (const auto& e : j) coeffs.push_back(parse_scalar(e.get<std::string>()));
    return Poly(std::move(coeffs));
}

} // namespace

nlohmann::json to_json(const ADist& f) {
    nlohmann::json j;
    j["breakpoints"] = nlohmann::json::array();
    for (const auto& b : f.breakpoints()) j["breakpoints"].push_back(to_string(b));
    j["pieces"] = nlohmann::json::array();
    for (const auto& p : f.pieces()) j["pieces"].push_back(poly_to_json(p));
    j["deltas"] = nlohmann::json::object();
    for (const auto& d : f.deltas()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : d.coeffs) arr.push_back(to_string(c));
        j["deltas"][to_string(d.point)] = arr;
    }
    return j;
}

ADist adist_from_json(const nlohmann::json& j) {
    try {
        RawADist raw;
        for (const auto& b : j.at("breakpoints"))
            raw.breakpoints.push_back(parse_rational(b.get<std::string>()));
        for (const auto& p : j.at("pieces")) raw.pieces.push_back(poly_from_json(p));
        if (j.contains("deltas")) {
            for (const auto& [key, val] : j.at("deltas").items()) {
                DeltaComb d{parse_rational(key), {}};
                for (const auto& c : val) d.coeffs.push_back(parse_scalar(c.get<std::string>()));
                raw.deltas.push_back(std::move(d));
            }
        }
        return normalize(std::move(raw));
    } catch (const nlohmann::json::exception& e) {
        throw representation_error(std::string("bad distribution JSON: ") + e.what());
    }
}

nlohmann::json to_json(const MSet& m) {
    nlohmann::json j;
    j["intervals"] = nlohmann::json::array();
    for (const auto& iv : m.intervals()) {
        nlohmann::json o;
        o["lo"] = iv.lo ? to_string(*iv.lo) : "-inf";
        o["hi"] = iv.hi ? to_string(*iv.hi) : "inf";
        o["lo_closed"] = iv.lo_closed;
        o["hi_closed"] = iv.hi_closed;
        j["intervals"].push_back(o);
    }
    j["add"] = nlohmann::json::array();
    for (const auto& p : m.added_points()) j["add"].push_back(to_string(p));
    j["remove"] = nlohmann::json::array();
    for (const auto& p : m.removed_points()) j["remove"].push_back(to_string(p));
    return j;
}

MSet mset_from_json(const nlohmann::json& j) {
    try {
        std::vector<MSet::Interval> ivs;
        if (j.contains("intervals")) {
            for (const auto& o : j.at("intervals")) {
                MSet::Interval iv;
                std::string lo = o.at("lo").get<std::string>();
                std::string hi = o.at("hi").get<std::string>();
                if (lo != "-inf") iv.lo = parse_rational(lo);
                if (hi != "inf" && hi != "+inf") iv.hi = parse_rational(hi);
                iv.lo_closed = o.value("lo_closed", false);
                iv.hi_closed = o.value("hi_closed", false);
                ivs.push_back(std::move(iv));
            }
        }
        std::vector<Rational> add, remove;
        if (j.contains("add"))
            for (const auto& p : j.at("add")) add.push_back(parse_rational(p.get<std::string>()));
        if (j.contains("remove"))
            for (const auto& p : j.at("remove"))
                remove.push_back(parse_rational(p.get<std::string>()));
        return MSet::of(std::move(ivs), std::move(add), std::move(remove));
    } catch (const nlohmann::json::exception& e) {
        throw representation_error(std::string("bad M-set JSON: ") + e.what());
    }
}

std::string dump_canonical(const nlohmann::json& j) {
    return j.dump();
}

} // namespace distalg
