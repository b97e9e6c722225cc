#pragma once

// Mealy and time-varying automata over a finite alphabet.
//
// A time-varying automaton carries one transition/output table per step
// index i = 1, 2, ...; here the infinite table sequence is represented
// finitely as an eventually periodic schedule (finite prefix + nonempty
// repeating cycle). A Mealy automaton is the special case of an empty
// prefix and a one-table cycle.

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "permutation.hpp"

namespace tvaut {

using Word = std::vector<Letter>;

// One step of the schedule. delta[q][x] is the successor state of q on
// input letter x; rho[q] lists the output letters of state q (the
// labeling of q at this step). Rows are raw letter tables so that
// non-invertible data can be represented and then rejected by validate().
struct StepTable {
    std::vector<std::vector<int>> delta;
    std::vector<std::vector<Letter>> rho;

    bool operator==(const StepTable&) const = default;
};

// step(i) = prefix[i-1] for i <= |prefix|, then the cycle repeats forever.
struct Schedule {
    std::vector<StepTable> prefix;
    std::vector<StepTable> cycle;

    bool operator==(const Schedule&) const = default;
};

struct Automaton {
    int alphabet = 2;
    std::vector<std::string> states;
    Schedule schedule;

    int size() const { return static_cast<int>(states.size()); }

    bool is_mealy() const {
        return schedule.prefix.empty() && schedule.cycle.size() == 1;
    }

    // Table governing the i-th transition (1-based).
    const StepTable& table_at(int i) const {
        const int prefix_len = static_cast<int>(schedule.prefix.size());
        if (i <= prefix_len) return schedule.prefix[static_cast<std::size_t>(i - 1)];
        const int cycle_len = static_cast<int>(schedule.cycle.size());
        return schedule.cycle[static_cast<std::size_t>((i - prefix_len - 1) % cycle_len)];
    }

    // Collapses a step index through the schedule: indices beyond the
    // prefix are reduced modulo the cycle length. Tables from step i and
    // from step effective_phase(i) agree for every future offset.
    int effective_phase(int i) const {
        const int prefix_len = static_cast<int>(schedule.prefix.size());
        if (i <= prefix_len) return i;
        const int cycle_len = static_cast<int>(schedule.cycle.size());
        return prefix_len + 1 + (i - prefix_len - 1) % cycle_len;
    }

    // Index of a named state, or -1.
    int state_index(std::string_view name) const {
        for (int q = 0; q < size(); ++q)
            if (states[static_cast<std::size_t>(q)] == name) return q;
        return -1;
    }

    bool operator==(const Automaton&) const = default;
};

struct ValidationReport {
    bool ok = true;
    std::string error;  // first violated invariant, with its location
};

namespace detail {

inline bool check_table(const StepTable& t, int n, int k, const std::string& where,
                        ValidationReport& rep) {
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.error = where + ": " + msg;
        return false;
    };
    if (static_cast<int>(t.delta.size()) != n || static_cast<int>(t.rho.size()) != n)
        return fail("table must have one delta row and one rho row per state");
    for (int q = 0; q < n; ++q) {
        const auto& drow = t.delta[static_cast<std::size_t>(q)];
        if (static_cast<int>(drow.size()) != k)
            return fail("delta[" + std::to_string(q) + "] must have one entry per letter");
        for (int x = 0; x < k; ++x) {
            int to = drow[static_cast<std::size_t>(x)];
            if (to < 0 || to >= n)
                return fail("delta[" + std::to_string(q) + "][" + std::to_string(x) +
                            "] = " + std::to_string(to) + " is not a state index");
        }
        const auto& rrow = t.rho[static_cast<std::size_t>(q)];
        if (static_cast<int>(rrow.size()) != k)
            return fail("rho[" + std::to_string(q) + "] must have one entry per letter");
        for (int x = 0; x < k; ++x) {
            Letter y = rrow[static_cast<std::size_t>(x)];
            if (y < 0 || y >= k)
                return fail("rho[" + std::to_string(q) + "][" + std::to_string(x) +
                            "] = " + std::to_string(y) + " is not a letter");
        }
        if (!is_letter_bijection(rrow, k))
            return fail("rho[" + std::to_string(q) + "] is not a bijection");
    }
    return true;
}

}  // namespace detail

// Checks every type invariant and reports the first violation.
inline ValidationReport validate(const Automaton& a) {
    ValidationReport rep;
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.error = msg;
        return rep;
    };
    if (a.alphabet < 2) return fail("alphabet: size must be at least 2");
    if (a.states.empty()) return fail("states: at least one state required");
    for (std::size_t i = 0; i < a.states.size(); ++i)
        for (std::size_t j = i + 1; j < a.states.size(); ++j)
            if (a.states[i] == a.states[j])
                return fail("states: duplicate name \"" + a.states[i] + "\"");
    if (a.schedule.cycle.empty()) return fail("cycle: must be nonempty");
    for (std::size_t s = 0; s < a.schedule.prefix.size(); ++s)
        if (!detail::check_table(a.schedule.prefix[s], a.size(), a.alphabet,
                                 "prefix[" + std::to_string(s) + "]", rep))
            return rep;
    for (std::size_t s = 0; s < a.schedule.cycle.size(); ++s)
        if (!detail::check_table(a.schedule.cycle[s], a.size(), a.alphabet,
                                 "cycle[" + std::to_string(s) + "]", rep))
            return rep;
    return rep;
}

// True iff every labeling of every step is a bijection on the alphabet,
// i.e. each state acts as a tree automorphism at each step. Assumes
// well-sized tables.
inline bool is_invertible(const Automaton& a) {
    auto rows_ok = [&](const StepTable& t) {
        for (const auto& row : t.rho)
            if (!is_letter_bijection(row, a.alphabet)) return false;
        return true;
    };
    for (const auto& t : a.schedule.prefix)
        if (!rows_ok(t)) return false;
    for (const auto& t : a.schedule.cycle)
        if (!rows_ok(t)) return false;
    return true;
}

inline const StepTable& step_table(const Automaton& a, int i) {
    if (i < 1) throw std::invalid_argument("step_table: step index must be >= 1");
    return a.table_at(i);
}

// The automaton transformation of `state` in its `step`-th transition,
// applied to w: walk the diagram, emitting one output letter per input
// letter. Does not require invertibility.
inline Word apply(const Automaton& a, int state, int step, const Word& w) {
    if (state < 0 || state >= a.size())
        throw std::invalid_argument("apply: state index out of range");
    if (step < 1) throw std::invalid_argument("apply: step index must be >= 1");
    Word out;
    out.reserve(w.size());
    int q = state;
    int i = a.effective_phase(step);
    for (Letter x : w) {
        if (x < 0 || x >= a.alphabet) throw std::out_of_range("apply: letter out of range");
        const StepTable& t = a.table_at(i);
        out.push_back(t.rho[static_cast<std::size_t>(q)][static_cast<std::size_t>(x)]);
        q = t.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(x)];
        i = a.effective_phase(i + 1);
    }
    return out;
}

inline std::string format_word(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (Letter x : w) {
        if (x < 0 || x > 9) {
            std::ostringstream os;
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (i) os << ',';
                os << w[i];
            }
            return os.str();
        }
        s.push_back(static_cast<char>('0' + x));
    }
    return s;
}

// Parses a digit string into a word over an alphabet of size k (k <= 10).
inline Word parse_word(std::string_view s, int k) {
    if (k > 10)
        throw std::invalid_argument("parse_word: digit words support alphabets up to 10 letters");
    Word w;
    w.reserve(s.size());
    for (char c : s) {
        if (c < '0' || c > '9')
            throw std::invalid_argument(std::string("parse_word: invalid character '") + c + "'");
        int x = c - '0';
        if (x >= k)
            throw std::invalid_argument("parse_word: letter " + std::to_string(x) +
                                        " out of range for alphabet of size " + std::to_string(k));
        w.push_back(x);
    }
    return w;
}

}  // namespace tvaut
