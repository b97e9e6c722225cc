#pragma once

// Test-side oracle: evaluates elements by walking the automaton diagram
// directly, one factor at a time. Deliberately ignorant of sections,
// root permutations and the closure decision, so it can referee them.

#include <cstdint>
#include <optional>
#include <vector>

#include <tvaut/element.hpp>

namespace oracle {

using tvaut::Automaton;
using tvaut::Element;
using tvaut::Factor;
using tvaut::Letter;
using tvaut::StepTable;
using tvaut::Word;

// Image of w under one signed factor taken at step `phase`. The inverse
// walk reads, at each position, the unique input letter that the state
// maps to the current letter.
inline Word act_factor(const Automaton& a, const Factor& f, int phase, const Word& w) {
    Word out;
    out.reserve(w.size());
    int q = f.state;
    int i = phase;
    for (Letter x : w) {
        const StepTable& t = a.table_at(i);
        const auto& rrow = t.rho[static_cast<std::size_t>(q)];
        Letter in = x;
        if (f.sign > 0) {
            out.push_back(rrow[static_cast<std::size_t>(x)]);
        } else {
            in = 0;
            while (rrow[static_cast<std::size_t>(in)] != x) ++in;
            out.push_back(in);
        }
        q = t.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(in)];
        i = a.effective_phase(i + 1);
    }
    return out;
}

// Leftmost factor first.
inline Word act(const Element& g, const Word& w) {
    Word cur = w;
    for (const Factor& f : g.factors()) cur = act_factor(g.automaton(), f, g.phase(), cur);
    return cur;
}

// First word of length <= depth moved by g, scanning lengths in
// increasing order and words of a length lexicographically.
inline std::optional<Word> find_moved_word(const Element& g, int depth) {
    const int k = g.automaton().alphabet;
    for (int len = 1; len <= depth; ++len) {
        Word w(static_cast<std::size_t>(len), 0);
        while (true) {
            if (act(g, w) != w) return w;
            int pos = len - 1;
            while (pos >= 0 && w[static_cast<std::size_t>(pos)] == k - 1) {
                w[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++w[static_cast<std::size_t>(pos)];
        }
    }
    return std::nullopt;
}

inline bool fixes_all(const Element& g, int depth) { return !find_moved_word(g, depth); }

// The permutation g induces on the words of exactly the given length,
// as an image table over base-k codes (first letter most significant).
inline std::vector<std::uint64_t> leaf_permutation(const Element& g, int depth) {
    const int k = g.automaton().alphabet;
    std::uint64_t count = 1;
    for (int i = 0; i < depth; ++i) count *= static_cast<std::uint64_t>(k);
    std::vector<std::uint64_t> perm(count);
    for (std::uint64_t code = 0; code < count; ++code) {
        Word w(static_cast<std::size_t>(depth));
        std::uint64_t v = code;
        for (int pos = depth - 1; pos >= 0; --pos) {
            w[static_cast<std::size_t>(pos)] = static_cast<Letter>(v % static_cast<std::uint64_t>(k));
            v /= static_cast<std::uint64_t>(k);
        }
        Word im = act(g, w);
        std::uint64_t enc = 0;
        for (Letter x : im) enc = enc * static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(x);
        perm[code] = enc;
    }
    return perm;
}

// Smallest m in 1..max_order with g^m fixing all words of length depth
// (equivalently of length <= depth, by prefix compatibility), found by
// iterating the leaf permutation.
inline std::optional<int> brute_order(const Element& g, int depth, int max_order) {
    const std::vector<std::uint64_t> p = leaf_permutation(g, depth);
    std::vector<std::uint64_t> cur = p;
    auto is_id = [](const std::vector<std::uint64_t>& q) {
        for (std::uint64_t i = 0; i < q.size(); ++i)
            if (q[i] != i) return false;
        return true;
    };
    for (int m = 1; m <= max_order; ++m) {
        if (is_id(cur)) return m;
        for (auto& e : cur) e = p[e];
    }
    return std::nullopt;
}

}  // namespace oracle
