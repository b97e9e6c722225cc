#pragma once

// Automaton files (JSON) and the element expression grammar of the
// command line. File layout: an object with "alphabet" (k), "states"
// (names), "prefix" and "cycle" (arrays of {"delta": n x k state
// indices, "rho": n x k letters}), everything 0-based. Reading is purely
// structural; semantic checks stay in validate().

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "element.hpp"

namespace tvaut {

inline nlohmann::json to_json(const StepTable& t) {
    return nlohmann::json{{"delta", t.delta}, {"rho", t.rho}};
}

inline nlohmann::json to_json(const Automaton& a) {
    nlohmann::json prefix = nlohmann::json::array();
    for (const StepTable& t : a.schedule.prefix) prefix.push_back(to_json(t));
    nlohmann::json cycle = nlohmann::json::array();
    for (const StepTable& t : a.schedule.cycle) cycle.push_back(to_json(t));
    return nlohmann::json{{"alphabet", a.alphabet},
                          {"states", a.states},
                          {"prefix", std::move(prefix)},
                          {"cycle", std::move(cycle)}};
}

inline Automaton automaton_from_json(const nlohmann::json& j) {
    try {
        Automaton a;
        a.alphabet = j.at("alphabet").get<int>();
        a.states = j.at("states").get<std::vector<std::string>>();
        auto read_tables = [](const nlohmann::json& arr) {
            std::vector<StepTable> out;
            for (const nlohmann::json& tj : arr) {
                StepTable t;
                t.delta = tj.at("delta").get<std::vector<std::vector<int>>>();
                t.rho = tj.at("rho").get<std::vector<std::vector<Letter>>>();
                out.push_back(std::move(t));
            }
            return out;
        };
        a.schedule.prefix = read_tables(j.at("prefix"));
        a.schedule.cycle = read_tables(j.at("cycle"));
        return a;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("automaton: ") + e.what());
    }
}

inline Automaton load_automaton(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    return automaton_from_json(j);
}

inline void save_automaton(const std::string& path, const Automaton& a) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << to_json(a).dump(2) << '\n';
}

namespace detail {

inline long long parse_exponent(std::string_view s, const std::string& token) {
    auto bad = [&](const char* why) {
        return std::invalid_argument("element: " + std::string(why) + " in \"" + token + "\"");
    };
    long long e = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), e);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw bad("malformed exponent");
    if (e == 0) throw bad("exponent must be nonzero");
    if (e > 1000000 || e < -1000000) throw bad("exponent out of range");
    return e;
}

}  // namespace detail

// Parses `name`, `name^k`, `name^-k` (k >= 1) tokens separated by
// whitespace or '*' into an element at the given phase.
inline Element parse_element(const Automaton& aut, std::string_view expr, int phase = 1) {
    std::vector<Factor> word;
    bool saw_token = false;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        saw_token = true;
        const std::size_t caret = token.find('^');
        const std::string name = token.substr(0, caret);
        long long e = 1;
        if (caret != std::string::npos)
            e = detail::parse_exponent(std::string_view(token).substr(caret + 1), token);
        const int q = aut.state_index(name);
        if (q < 0) throw std::invalid_argument("element: unknown state \"" + name + "\"");
        const int sign = e < 0 ? -1 : +1;
        for (long long i = 0; i < (e < 0 ? -e : e); ++i) word.push_back(Factor{q, sign});
        token.clear();
    };
    for (char c : expr) {
        if (c == '*' || c == ' ' || c == '\t' || c == '\n' || c == '\r')
            flush();
        else
            token.push_back(c);
    }
    flush();
    if (!saw_token) throw std::invalid_argument("element: empty expression");
    return Element(aut, phase, std::move(word));
}

}  // namespace tvaut
