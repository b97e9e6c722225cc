#pragma once

// Builders for the automaton families used throughout: the 2-state cyclic
// time-varying automata, the mixed torsion/free abelian family, the free
// abelian time-varying family, the sausage and cyclic-shift Mealy
// automata, and state padding. All are over the binary alphabet with
// states named a1..an; every output passes validate() and is invertible.

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "element.hpp"

namespace tvaut {
namespace detail {

// n self-loops with identity labels.
inline StepTable inert_table(int n, int k = 2) {
    StepTable t;
    t.delta.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(k)));
    t.rho.assign(static_cast<std::size_t>(n), std::vector<Letter>(static_cast<std::size_t>(k)));
    for (int q = 0; q < n; ++q) {
        for (int x = 0; x < k; ++x) {
            t.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(x)] = q;
            t.rho[static_cast<std::size_t>(q)][static_cast<std::size_t>(x)] = x;
        }
    }
    return t;
}

inline std::vector<std::string> numbered_states(int n) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) names.push_back("a" + std::to_string(j));
    return names;
}

inline void flip_label(StepTable& t, int q) {
    t.rho[static_cast<std::size_t>(q)] = {1, 0};
}

}  // namespace detail

// 2-state binary time-varying automaton whose state a2 generates the
// cyclic group of order 2^exponent (exponent >= 1), or the infinite
// cyclic group when no exponent is given. The finite variant flips for
// the first `exponent` steps and then idles; the infinite variant flips
// at every step.
inline Automaton cyclic_tva(std::optional<int> exponent) {
    if (exponent && *exponent < 1)
        throw std::invalid_argument("cyclic_tva: exponent must be >= 1");
    StepTable active;
    active.delta = {{0, 0}, {1, 0}};
    active.rho = {{0, 1}, {1, 0}};
    Automaton a;
    a.alphabet = 2;
    a.states = detail::numbered_states(2);
    if (exponent) {
        a.schedule.prefix.assign(static_cast<std::size_t>(*exponent), active);
        a.schedule.cycle = {detail::inert_table(2)};
    } else {
        a.schedule.cycle = {active};
    }
    return a;
}

// n-state binary time-varying automaton generating the direct sum of the
// cyclic 2-groups of orders 2^{r_1}, ..., 2^{r_d} and a free abelian
// group of rank free_rank, where n = d + free_rank >= 2. The step
// partition is fixed: N_1 = {1..r_1}, then consecutive finite blocks of
// sizes r_2, ..., r_d (prefix length R = sum of the r_j), and the steps
// beyond R are assigned to the free generators cyclically (cycle length
// free_rank, or one inert step when free_rank = 0).
//
// At every step exactly one state is active: it is the only state whose
// label flips, and its letter-1 transition leaves the self-loop (to a1
// for the non-first generators). The first generator instead descends
// along the chain a1 -> a2, with both letters rerouted to a2 at the last
// step of N_1.
inline Automaton mixed_abelian_tva(const std::vector<int>& r_list, int free_rank) {
    const int d = static_cast<int>(r_list.size());
    if (d < 1) throw std::invalid_argument("mixed_abelian_tva: at least one torsion order required");
    for (int r : r_list)
        if (r < 1) throw std::invalid_argument("mixed_abelian_tva: torsion exponents must be >= 1");
    if (free_rank < 0) throw std::invalid_argument("mixed_abelian_tva: free rank must be >= 0");
    const int n = d + free_rank;
    if (n < 2) throw std::invalid_argument("mixed_abelian_tva: needs at least two states");

    Automaton a;
    a.alphabet = 2;
    a.states = detail::numbered_states(n);

    const int r1 = r_list[0];
    int block_end = 0;  // last step of the preceding finite blocks
    for (int j = 0; j < d; ++j) {
        for (int s = 0; s < r_list[static_cast<std::size_t>(j)]; ++s) {
            const int i = block_end + s + 1;
            StepTable t = detail::inert_table(n);
            detail::flip_label(t, j);
            if (j == 0) {
                if (i == r1)
                    t.delta[0] = {1, 1};
                else
                    t.delta[0][1] = 1;
            } else {
                t.delta[static_cast<std::size_t>(j)][1] = 0;
            }
            a.schedule.prefix.push_back(std::move(t));
        }
        block_end += r_list[static_cast<std::size_t>(j)];
    }

    if (free_rank == 0) {
        a.schedule.cycle = {detail::inert_table(n)};
    } else {
        for (int c = 0; c < free_rank; ++c) {
            StepTable t = detail::inert_table(n);
            const int q = d + c;
            detail::flip_label(t, q);
            t.delta[static_cast<std::size_t>(q)][1] = 0;
            a.schedule.cycle.push_back(std::move(t));
        }
    }
    return a;
}

// The derived torsion generator a1 * a2^-1 of the mixed family; its
// order is exactly 2^{r_1}.
inline Element mixed_b1(const Automaton& aut, int phase = 1) {
    return Element(aut, phase, {Factor{0, +1}, Factor{1, -1}});
}

// n-state binary time-varying automaton generating the free abelian
// group of rank n (n >= 2). Step 1 routes a1's letter-1 transition to
// a2 with identity labels everywhere; from step 2 on, the states
// a2, ..., an take turns (cycle length n - 1) being active in the same
// sense as in mixed_abelian_tva.
inline Automaton free_abelian_tva(int n) {
    if (n < 2) throw std::invalid_argument("free_abelian_tva: needs at least two states");
    Automaton a;
    a.alphabet = 2;
    a.states = detail::numbered_states(n);

    StepTable first = detail::inert_table(n);
    first.delta[0][1] = 1;
    a.schedule.prefix = {std::move(first)};

    for (int c = 0; c < n - 1; ++c) {
        StepTable t = detail::inert_table(n);
        const int q = 1 + c;
        detail::flip_label(t, q);
        t.delta[static_cast<std::size_t>(q)][1] = 0;
        a.schedule.cycle.push_back(std::move(t));
    }
    return a;
}

// n-state binary Mealy automaton (n >= 2) generating the free abelian
// group of rank n - 1: a chain an -> ... -> a3 -> a2 with a2 labeled by
// the transposition, a2 branching back to an on 0 and to the sink a1 on
// 1, and a1 a plain sink.
inline Automaton sausage_mealy(int n) {
    if (n < 2) throw std::invalid_argument("sausage_mealy: needs at least two states");
    StepTable t = detail::inert_table(n);
    t.delta[0] = {0, 0};
    t.delta[1] = {n - 1, 0};
    for (int j = 2; j < n; ++j) t.delta[static_cast<std::size_t>(j)] = {j - 1, j - 1};
    detail::flip_label(t, 1);
    Automaton a;
    a.alphabet = 2;
    a.states = detail::numbered_states(n);
    a.schedule.cycle = {std::move(t)};
    return a;
}

// n-state binary Mealy automaton (n >= 1) generating the elementary
// abelian 2-group of rank n: a cyclic shift a1 -> an -> ... -> a2 -> a1
// on both letters, with only a1 labeled by the transposition.
inline Automaton cyclic_shift_mealy(int n) {
    if (n < 1) throw std::invalid_argument("cyclic_shift_mealy: needs at least one state");
    StepTable t = detail::inert_table(n);
    t.delta[0] = {n - 1, n - 1};
    for (int j = 1; j < n; ++j) t.delta[static_cast<std::size_t>(j)] = {j - 1, j - 1};
    detail::flip_label(t, 0);
    Automaton a;
    a.alphabet = 2;
    a.states = detail::numbered_states(n);
    a.schedule.cycle = {std::move(t)};
    return a;
}

// Pads an automaton to total_states states by appending fresh states
// with self-loops and identity labels at every step; the original tables
// are unchanged, so the generated group is unchanged. New states are
// named q1, q2, ..., prefixed with underscores on name collisions.
inline Automaton pad_states(const Automaton& aut, int total_states) {
    const int n = aut.size();
    if (total_states < n)
        throw std::invalid_argument("pad_states: cannot shrink the state set");
    Automaton a = aut;
    for (int t = 0; t < total_states - n; ++t) {
        std::string name = "q" + std::to_string(t + 1);
        while (a.state_index(name) != -1) name = "_" + name;
        a.states.push_back(std::move(name));
    }
    auto extend = [&](StepTable& table) {
        for (int q = n; q < total_states; ++q) {
            table.delta.push_back(std::vector<int>(static_cast<std::size_t>(a.alphabet), q));
            std::vector<Letter> id_row(static_cast<std::size_t>(a.alphabet));
            std::iota(id_row.begin(), id_row.end(), 0);
            table.rho.push_back(std::move(id_row));
        }
    };
    for (auto& table : a.schedule.prefix) extend(table);
    for (auto& table : a.schedule.cycle) extend(table);
    return a;
}

}  // namespace tvaut
