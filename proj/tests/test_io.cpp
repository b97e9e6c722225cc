#include <catch2/catch_amalgamated.hpp>

#include <tvaut/constructions.hpp>
#include <tvaut/io.hpp>

#include <cstdio>
#include <filesystem>

using namespace tvaut;

namespace {

std::filesystem::path temp_json_path() {
    return std::filesystem::temp_directory_path() / "tvaut_roundtrip.json";
}

}  // namespace

TEST_CASE("json round trip") {
    std::vector<Automaton> samples = {
        cyclic_tva(3),          cyclic_tva(std::nullopt),     mixed_abelian_tva({3, 1, 2}, 1),
        free_abelian_tva(2),    sausage_mealy(3),             cyclic_shift_mealy(2),
        pad_states(sausage_mealy(2), 4),
    };
    SECTION("through a json value") {
        for (const Automaton& a : samples) CHECK(automaton_from_json(to_json(a)) == a);
    }
    SECTION("through a file") {
        const std::string path = temp_json_path().string();
        for (const Automaton& a : samples) {
            save_automaton(path, a);
            CHECK(load_automaton(path) == a);
        }
        std::remove(path.c_str());
    }
}

TEST_CASE("loading the fixtures") {
    SECTION("valid file") {
        Automaton a = load_automaton("data/identity2.json");
        CHECK(validate(a).ok);
        CHECK(a.is_mealy());
        CHECK(a.size() == 2);
    }
    SECTION("structurally fine but semantically broken") {
        Automaton a = load_automaton("data/nonbijective.json");
        ValidationReport r = validate(a);
        CHECK_FALSE(r.ok);
        CHECK_FALSE(is_invertible(a));
    }
    SECTION("errors") {
        CHECK_THROWS_AS(load_automaton("data/no_such_file.json"), std::runtime_error);
        CHECK_THROWS_AS(load_automaton("data/bad.json"), std::invalid_argument);
        CHECK_THROWS_AS(automaton_from_json(nlohmann::json{{"alphabet", 2}}),
                        std::invalid_argument);
        CHECK_THROWS_AS(automaton_from_json(nlohmann::json{{"alphabet", "two"},
                                                           {"states", {"a1"}},
                                                           {"prefix", nlohmann::json::array()},
                                                           {"cycle", nlohmann::json::array()}}),
                        std::invalid_argument);
    }
}

TEST_CASE("parse_element") {
    Automaton a = sausage_mealy(2);
    SECTION("grammar") {
        CHECK(parse_element(a, "a1").factors() == std::vector<Factor>{{0, +1}});
        CHECK(parse_element(a, "a2^3").factors() ==
              std::vector<Factor>{{1, +1}, {1, +1}, {1, +1}});
        CHECK(parse_element(a, "a1^-2").factors() == std::vector<Factor>{{0, -1}, {0, -1}});
        CHECK(parse_element(a, "a1 * a2").factors() == std::vector<Factor>{{0, +1}, {1, +1}});
        CHECK(parse_element(a, "  a1\ta2^-1 ").factors() ==
              std::vector<Factor>{{0, +1}, {1, -1}});
        Element raw = parse_element(a, "a2*a2^-1");
        CHECK(raw.length() == 2);  // expressions parse verbatim, canonical() cancels
        CHECK(canonical(raw).factors().empty());
        CHECK(parse_element(a, "a2", 2).phase() == 1);  // mealy phases collapse
    }
    SECTION("phase carried through on time-varying input") {
        Automaton c = cyclic_tva(2);
        CHECK(parse_element(c, "a2", 2).phase() == 2);
    }
    SECTION("errors") {
        CHECK_THROWS_AS(parse_element(a, ""), std::invalid_argument);
        CHECK_THROWS_AS(parse_element(a, "  \t "), std::invalid_argument);
        CHECK_THROWS_AS(parse_element(a, "a3"), std::invalid_argument);
        CHECK_THROWS_AS(parse_element(a, "a1^0"), std::invalid_argument);
        CHECK_THROWS_AS(parse_element(a, "a1^"), std::invalid_argument);
        CHECK_THROWS_AS(parse_element(a, "a1^x"), std::invalid_argument);
        CHECK_THROWS_AS(parse_element(a, "a1^2x"), std::invalid_argument);
        CHECK_THROWS_AS(parse_element(a, "a1^9999999"), std::invalid_argument);
        CHECK_THROWS_AS(parse_element(a, "^2"), std::invalid_argument);
    }
}
