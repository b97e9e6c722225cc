#pragma once

// The wreath-recursion calculus on elements: root permutations, sections,
// images of words, and the exact identity decision via a breadth-first
// closure over sections.
//
// Conventions (fixed throughout): the leftmost factor acts first on words;
// wreath coordinates are listed in letter order (letter 0 first). For a
// product this gives sigma_{g g'} = sigma_g sigma_{g'} (action order) and
// (g g')|_x = g|_x * g'|_{sigma_g(x)}.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "element.hpp"

namespace tvaut {

// Product over the factors, in action order, of the labeling of each
// state at the element's phase (inverted for sign -1).
inline Permutation root_permutation(const Element& g) {
    const Automaton& a = g.automaton();
    const StepTable& t = a.table_at(g.phase());
    std::vector<Letter> im(static_cast<std::size_t>(a.alphabet));
    for (int x = 0; x < a.alphabet; ++x) im[static_cast<std::size_t>(x)] = x;
    std::vector<Letter> inv(static_cast<std::size_t>(a.alphabet));
    for (const Factor& f : g.factors()) {
        const auto& row = t.rho[static_cast<std::size_t>(f.state)];
        if (f.sign > 0) {
            for (auto& y : im) y = row[static_cast<std::size_t>(y)];
        } else {
            for (int x = 0; x < a.alphabet; ++x)
                inv[static_cast<std::size_t>(row[static_cast<std::size_t>(x)])] = x;
            for (auto& y : im) y = inv[static_cast<std::size_t>(y)];
        }
    }
    return Permutation(std::move(im));
}

// Section of g at the letter x: an element at the next phase with exactly
// one factor per factor of g, obtained by threading x through the factor
// word. A positive factor q reads the current letter y, emits
// delta_i(q, y) and advances y to rho_i(q)(y); an inverse factor reads y
// through the inverse labeling.
inline Element section(const Element& g, Letter x) {
    const Automaton& a = g.automaton();
    if (x < 0 || x >= a.alphabet) throw std::out_of_range("section: letter out of range");
    const StepTable& t = a.table_at(g.phase());
    std::vector<Factor> word;
    word.reserve(g.factors().size());
    Letter y = x;
    for (const Factor& f : g.factors()) {
        const auto& drow = t.delta[static_cast<std::size_t>(f.state)];
        const auto& rrow = t.rho[static_cast<std::size_t>(f.state)];
        if (f.sign > 0) {
            word.push_back(Factor{drow[static_cast<std::size_t>(y)], +1});
            y = rrow[static_cast<std::size_t>(y)];
        } else {
            Letter pre = 0;
            while (rrow[static_cast<std::size_t>(pre)] != y) ++pre;
            word.push_back(Factor{drow[static_cast<std::size_t>(pre)], -1});
            y = pre;
        }
    }
    return Element(a, a.effective_phase(g.phase() + 1), std::move(word));
}

struct WreathRecursion {
    Permutation root;
    std::vector<Element> sections;  // one per letter, in letter order
};

inline WreathRecursion wreath(const Element& g) {
    WreathRecursion w{root_permutation(g), {}};
    w.sections.reserve(static_cast<std::size_t>(g.automaton().alphabet));
    for (int x = 0; x < g.automaton().alphabet; ++x) w.sections.push_back(section(g, x));
    return w;
}

inline bool in_first_level_stabilizer(const Element& g) {
    return root_permutation(g).is_identity();
}

// Image of w under g: iterate root-then-section along the input letters.
inline Word image(const Element& g, const Word& w) {
    const Automaton& a = g.automaton();
    Word out;
    out.reserve(w.size());
    Element cur = canonical(g);
    for (Letter x : w) {
        if (x < 0 || x >= a.alphabet) throw std::out_of_range("image: letter out of range");
        out.push_back(root_permutation(cur)(x));
        cur = canonical(section(cur, x));
    }
    return out;
}

struct IdentityVerdict {
    bool is_identity = false;
    std::optional<Word> witness;  // a word moved by g, present iff not identity
};

namespace detail {

// Memo key: effective phase + canonically cancelled factor word, packed
// into a byte string (two bytes per factor).
inline std::string closure_key(int phase, const std::vector<Factor>& word) {
    std::string key;
    key.reserve(4 + 2 * word.size());
    for (int b = 0; b < 4; ++b) key.push_back(static_cast<char>((phase >> (8 * b)) & 0xff));
    for (const Factor& f : word) {
        unsigned code = (static_cast<unsigned>(f.state) << 1) | (f.sign < 0 ? 1u : 0u);
        key.push_back(static_cast<char>(code & 0xff));
        key.push_back(static_cast<char>((code >> 8) & 0xff));
    }
    return key;
}

}  // namespace detail

// Exact decision of g = id.
//
// Breadth-first closure over sections starting from g, memoized on
// (canonical factor word, effective phase). The element is the identity
// iff every member of the closure has a trivial root permutation. The
// closure is finite: section never lengthens a factor word, states and
// effective phases are finite, so the key space is finite.
//
// On a negative verdict the witness is the letter path from g to the
// first closure member with a nontrivial root, extended by one letter
// that root moves; image(g, witness) != witness by construction (all
// members along the path are shallower, hence have trivial roots).
inline IdentityVerdict is_identity(const Element& g) {
    const Automaton& a = g.automaton();

    struct Node {
        const std::string* key;  // owned by `seen`
        Word path;
    };

    std::unordered_set<std::string> seen;
    std::deque<Node> queue;

    Element start = canonical(g);
    auto [it0, fresh0] = seen.insert(detail::closure_key(start.phase(), start.factors()));
    (void)fresh0;
    queue.push_back(Node{&*it0, {}});

    auto decode = [&a](const std::string& key) {
        int phase = 0;
        for (int b = 0; b < 4; ++b)
            phase |= static_cast<int>(static_cast<unsigned char>(key[static_cast<std::size_t>(b)]))
                     << (8 * b);
        std::vector<Factor> word;
        word.reserve((key.size() - 4) / 2);
        for (std::size_t i = 4; i + 1 < key.size(); i += 2) {
            unsigned code = static_cast<unsigned char>(key[i]) |
                            (static_cast<unsigned>(static_cast<unsigned char>(key[i + 1])) << 8);
            word.push_back(Factor{static_cast<int>(code >> 1), (code & 1u) ? -1 : +1});
        }
        return Element(a, phase, std::move(word));
    };

    while (!queue.empty()) {
        Node node = std::move(queue.front());
        queue.pop_front();
        Element h = decode(*node.key);

        Permutation root = root_permutation(h);
        if (!root.is_identity()) {
            Letter moved = 0;
            while (root(moved) == moved) ++moved;
            Word witness = node.path;
            witness.push_back(moved);
            return IdentityVerdict{false, std::move(witness)};
        }

        for (int x = 0; x < a.alphabet; ++x) {
            Element s = canonical(section(h, x));
            auto [it, fresh] = seen.insert(detail::closure_key(s.phase(), s.factors()));
            if (!fresh) continue;
            Word path = node.path;
            path.push_back(x);
            queue.push_back(Node{&*it, std::move(path)});
        }
    }
    return IdentityVerdict{true, std::nullopt};
}

inline bool equal(const Element& a, const Element& b) {
    detail::require_compatible(a, b, "equal");
    return is_identity(compose(a, invert(b))).is_identity;
}

inline bool commute(const Element& a, const Element& b) {
    detail::require_compatible(a, b, "commute");
    return is_identity(compose(compose(a, b), compose(invert(a), invert(b)))).is_identity;
}

// Order of g when it is a power of two not exceeding 2^max_exp.
struct OrderResult {
    std::optional<int> exponent;  // order = 2^exponent when present

    bool finite() const { return exponent.has_value(); }
    std::uint64_t order() const { return std::uint64_t{1} << *exponent; }

    bool operator==(const OrderResult&) const = default;
};

namespace detail {

// Order search by the orbit recursion. With a trivial root the order is
// the lcm of the section orders; with an active root the square fixes the
// first level and its section at 0 determines the rest, so the order is
// 2 * o(g|_0 g|_1) (the section at 1 is a conjugate, hence redundant).
// Orders over the binary alphabet are powers of two, so the lcm is a max
// of exponents. Revisiting a word already on the recursion path closes a
// cycle: with an active step inside, the order doubles around the cycle
// forever (infinite order); without one the cycle contributes nothing
// beyond its branches. Active steps are budgeted by max_exp, which both
// bounds every explored word by |g| * 2^max_exp factors and makes the
// budget overrun itself the certificate that the order exceeds 2^max_exp.
//
// Squaring via is_identity(g^(2^e)) is not equivalent in practice: a word
// whose first activity sits at depth d forces that closure through order
// 2^d nodes, while this search walks one doubling corridor per budget
// step and leaves the inactive bulk untouched.
class OrderSearch {
public:
    explicit OrderSearch(int max_exp) : max_exp_(max_exp) {}

    std::optional<int> exponent(const Element& g) {
        int low = 0;
        return run(g, 0, low);
    }

private:
    static constexpr int kClosed = std::numeric_limits<int>::max();

    struct Frame {
        int depth;
        int used;
    };

    // `used` counts active steps on the path; `low_out` reports the
    // shallowest stack frame the subtree value depends on (kClosed when
    // self-contained, which is what licenses memoization).
    std::optional<int> run(const Element& w, int used, int& low_out) {
        low_out = kClosed;
        Element e = canonical(w);
        if (e.factors().empty()) return 0;
        std::string key = closure_key(e.phase(), e.factors());
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        if (auto it = stack_.find(key); it != stack_.end()) {
            if (used > it->second.used) return std::nullopt;
            low_out = it->second.depth;
            return 0;
        }
        const int depth = static_cast<int>(stack_.size());
        stack_.emplace(key, Frame{depth, used});

        std::optional<int> result;
        int low = kClosed;
        if (root_permutation(e).is_identity()) {
            int low0 = kClosed;
            int low1 = kClosed;
            auto s0 = run(section(e, 0), used, low0);
            if (s0) {
                auto s1 = run(section(e, 1), used, low1);
                if (s1) {
                    result = std::max(*s0, *s1);
                    low = std::min(low0, low1);
                }
            }
        } else if (used < max_exp_) {
            auto sub = run(compose(section(e, 0), section(e, 1)), used + 1, low);
            if (sub) result = 1 + *sub;
        }

        stack_.erase(key);
        if (!result) return std::nullopt;
        if (low >= depth)
            memo_.emplace(std::move(key), *result);
        else
            low_out = low;
        return result;
    }

    int max_exp_;
    std::unordered_map<std::string, int> memo_;
    std::unordered_map<std::string, Frame> stack_;
};

}  // namespace detail

// Smallest e <= max_exp with g^(2^e) = id, or ExceedsBound (empty
// exponent). Over the binary alphabet every finite order is a power of
// two, so this decides the order exactly whenever it is at most
// 2^max_exp. Refused for larger alphabets, where that shortcut has no
// justification.
inline OrderResult order_pow2(const Element& g, int max_exp) {
    if (g.automaton().alphabet != 2)
        throw std::invalid_argument("order_pow2: requires a binary alphabet");
    if (max_exp < 0) throw std::invalid_argument("order_pow2: max_exp must be >= 0");
    detail::OrderSearch search(max_exp);
    return OrderResult{search.exponent(g)};
}

}  // namespace tvaut
