#pragma once

// Group elements of G(A_i): signed words over the states of an invertible
// automaton, taken at a phase (step index). The leftmost factor acts first
// on words; the empty factor word is the identity.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "automaton.hpp"

namespace tvaut {

struct Factor {
    int state = 0;
    int sign = 1;  // +1 or -1

    bool operator==(const Factor&) const = default;
};

namespace detail {

// Free cancellation: drop adjacent q * q^-1 pairs of the same state.
inline void push_cancel(std::vector<Factor>& word, const Factor& f) {
    if (!word.empty() && word.back().state == f.state && word.back().sign == -f.sign)
        word.pop_back();
    else
        word.push_back(f);
}

inline std::vector<Factor> cancel(const std::vector<Factor>& factors) {
    std::vector<Factor> out;
    out.reserve(factors.size());
    for (const Factor& f : factors) push_cancel(out, f);
    return out;
}

}  // namespace detail

class Element {
public:
    // The identity element at the given phase.
    explicit Element(const Automaton& aut, int phase = 1) : aut_(&aut) { set_phase(phase); }

    Element(const Automaton& aut, int phase, std::vector<Factor> factors)
        : aut_(&aut), factors_(std::move(factors)) {
        set_phase(phase);
        for (const Factor& f : factors_) {
            if (f.state < 0 || f.state >= aut.size())
                throw std::invalid_argument("Element: state index out of range");
            if (f.sign != 1 && f.sign != -1)
                throw std::invalid_argument("Element: factor sign must be +1 or -1");
        }
    }

    static Element generator(const Automaton& aut, int state, int phase = 1) {
        return Element(aut, phase, {Factor{state, +1}});
    }

    const Automaton& automaton() const { return *aut_; }
    const Automaton* automaton_ptr() const { return aut_; }

    // Stored collapsed through the schedule; see Automaton::effective_phase.
    int phase() const { return phase_; }

    const std::vector<Factor>& factors() const { return factors_; }
    bool trivial_word() const { return factors_.empty(); }
    int length() const { return static_cast<int>(factors_.size()); }

private:
    void set_phase(int phase) {
        if (phase < 1) throw std::invalid_argument("Element: phase must be >= 1");
        phase_ = aut_->effective_phase(phase);
    }

    const Automaton* aut_;
    int phase_ = 1;
    std::vector<Factor> factors_;
};

namespace detail {

inline void require_compatible(const Element& a, const Element& b, const char* op) {
    if (a.automaton_ptr() != b.automaton_ptr())
        throw std::invalid_argument(std::string(op) + ": elements of different automata");
    if (a.phase() != b.phase())
        throw std::invalid_argument(std::string(op) + ": phase mismatch");
}

}  // namespace detail

// Concatenation of factor words with free cancellation.
inline Element compose(const Element& a, const Element& b) {
    detail::require_compatible(a, b, "compose");
    std::vector<Factor> word;
    word.reserve(a.factors().size() + b.factors().size());
    for (const Factor& f : a.factors()) detail::push_cancel(word, f);
    for (const Factor& f : b.factors()) detail::push_cancel(word, f);
    return Element(a.automaton(), a.phase(), std::move(word));
}

// Reversed factor word with flipped signs.
inline Element invert(const Element& g) {
    std::vector<Factor> word;
    word.reserve(g.factors().size());
    for (auto it = g.factors().rbegin(); it != g.factors().rend(); ++it)
        word.push_back(Factor{it->state, -it->sign});
    return Element(g.automaton(), g.phase(), std::move(word));
}

// g^e for any integer exponent (repeated squaring).
inline Element power(const Element& g, long long e) {
    if (e < 0) return power(invert(g), -e);
    Element acc(g.automaton(), g.phase());
    Element base = g;
    while (e > 0) {
        if (e & 1) acc = compose(acc, base);
        e >>= 1;
        if (e > 0) base = compose(base, base);
    }
    return acc;
}

// Freely cancelled copy; the canonical form used for memoization.
inline Element canonical(const Element& g) {
    return Element(g.automaton(), g.phase(), detail::cancel(g.factors()));
}

}  // namespace tvaut
