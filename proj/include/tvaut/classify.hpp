#pragma once

// Exact classification of the abelian groups generated by small
// invertible binary Mealy automata: enumeration of all such automata,
// the abelianness decision, and the dichotomy-driven classifier (an
// abelian automaton group is torsion free or an elementary abelian
// 2-group, so it is pinned down by generator orders plus either a
// subset-product count or an integer relation lattice).

#include <atomic>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "constructions.hpp"
#include "engine.hpp"
#include "lattice.hpp"

namespace tvaut {

enum class GroupTag { Trivial, ElementaryAbelian, FreeAbelian, NonAbelian, Unknown };

struct GroupType {
    GroupTag tag = GroupTag::Unknown;
    int rank = 0;       // ElementaryAbelian and FreeAbelian
    int bound = 0;      // relation search bound (FreeAbelian)
    std::string note;   // diagnostics (Unknown)

    static GroupType trivial() { return {GroupTag::Trivial, 0, 0, {}}; }
    static GroupType elementary_abelian(int rank) {
        return {GroupTag::ElementaryAbelian, rank, 0, {}};
    }
    static GroupType free_abelian(int rank, int bound) {
        return {GroupTag::FreeAbelian, rank, bound, {}};
    }
    static GroupType non_abelian() { return {GroupTag::NonAbelian, 0, 0, {}}; }
    static GroupType unknown(std::string note) {
        return {GroupTag::Unknown, 0, 0, std::move(note)};
    }

    bool operator==(const GroupType&) const = default;
};

inline std::string to_string(const GroupType& t) {
    switch (t.tag) {
        case GroupTag::Trivial: return "Trivial";
        case GroupTag::ElementaryAbelian:
            return "ElementaryAbelian(rank=" + std::to_string(t.rank) + ")";
        case GroupTag::FreeAbelian:
            return "FreeAbelian(rank=" + std::to_string(t.rank) +
                   ", bound=" + std::to_string(t.bound) + ")";
        case GroupTag::NonAbelian: return "NonAbelian";
        case GroupTag::Unknown: return "Unknown(" + t.note + ")";
    }
    return {};
}

namespace detail {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (b != 0 && a > UINT64_MAX / b)
        throw std::overflow_error("enumeration too large to index");
    return a * b;
}

inline std::uint64_t factorial(int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f = checked_mul(f, static_cast<std::uint64_t>(i));
    return f;
}

// Lexicographic unranking of the permutations of {0,...,k-1}; rank 0 is
// the identity.
inline std::vector<Letter> unrank_permutation(int k, std::uint64_t rank) {
    std::vector<Letter> pool(static_cast<std::size_t>(k));
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<Letter> out;
    out.reserve(pool.size());
    std::uint64_t f = factorial(k);
    for (int pos = k; pos >= 1; --pos) {
        f /= static_cast<std::uint64_t>(pos);
        std::size_t idx = static_cast<std::size_t>(rank / f);
        rank %= f;
        out.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return out;
}

}  // namespace detail

// All invertible Mealy automata with n states over k letters, one index
// per automaton. Blocks of n^k * k! indices per state, state 0 most
// significant; within a block the delta row (read as a base-n number,
// letter 0 most significant) is more significant than the lexicographic
// rank of the labeling permutation. Index 0 is the automaton with every
// transition to state 0 and identity labels.
class MealyEnumeration {
public:
    explicit MealyEnumeration(int n, int k = 2) : n_(n), k_(k) {
        if (n < 1) throw std::invalid_argument("MealyEnumeration: need at least one state");
        if (k < 2) throw std::invalid_argument("MealyEnumeration: need at least two letters");
        block_ = detail::factorial(k);
        for (int x = 0; x < k; ++x)
            block_ = detail::checked_mul(block_, static_cast<std::uint64_t>(n));
        size_ = 1;
        for (int q = 0; q < n; ++q) size_ = detail::checked_mul(size_, block_);
    }

    int states() const { return n_; }
    int alphabet() const { return k_; }
    std::uint64_t size() const { return size_; }

    Automaton at(std::uint64_t index) const {
        if (index >= size_) throw std::out_of_range("MealyEnumeration: index out of range");
        const std::uint64_t kfact = detail::factorial(k_);
        StepTable t;
        t.delta.assign(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(k_)));
        t.rho.assign(static_cast<std::size_t>(n_), {});
        for (int q = n_ - 1; q >= 0; --q) {
            std::uint64_t block = index % block_;
            index /= block_;
            std::uint64_t perm_rank = block % kfact;
            std::uint64_t dcode = block / kfact;
            for (int x = k_ - 1; x >= 0; --x) {
                t.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(x)] =
                    static_cast<int>(dcode % static_cast<std::uint64_t>(n_));
                dcode /= static_cast<std::uint64_t>(n_);
            }
            t.rho[static_cast<std::size_t>(q)] = detail::unrank_permutation(k_, perm_rank);
        }
        Automaton a;
        a.alphabet = k_;
        a.states = detail::numbered_states(n_);
        a.schedule.cycle = {std::move(t)};
        return a;
    }

private:
    int n_;
    int k_;
    std::uint64_t block_ = 0;
    std::uint64_t size_ = 0;
};

// Pairwise commutation of the generators; exact, and sufficient since
// the generators generate.
inline bool is_abelian(const Automaton& aut) {
    for (int i = 0; i < aut.size(); ++i)
        for (int j = i + 1; j < aut.size(); ++j)
            if (!commute(Element::generator(aut, i), Element::generator(aut, j))) return false;
    return true;
}

struct RelationLattice {
    std::vector<Element> generators;
    int bound = 0;
    std::vector<IntVector> relations;  // every holding vector with max-norm <= bound
    IntLattice lattice;

    int rank() const { return lattice.rank(); }
};

// Tests every nonzero vector v with max|v_j| <= K for the relation
// prod_j g_j^{v_j} = id (decided exactly) and accumulates the findings
// into a Hermite-form lattice basis. Generators must commute pairwise
// for the vector reading to be meaningful.
inline RelationLattice relation_lattice(const std::vector<Element>& gens, int K) {
    if (K < 0) throw std::invalid_argument("relation_lattice: bound must be >= 0");
    const int n = static_cast<int>(gens.size());
    RelationLattice out{gens, K, {}, IntLattice(n)};
    if (n == 0 || K == 0) return out;
    for (int j = 1; j < n; ++j) detail::require_compatible(gens[0], gens[static_cast<std::size_t>(j)], "relation_lattice");

    IntVector v(static_cast<std::size_t>(n), -K);
    while (true) {
        bool zero = true;
        for (long long e : v)
            if (e != 0) { zero = false; break; }
        if (!zero) {
            Element p(gens[0].automaton(), gens[0].phase());
            for (int j = 0; j < n; ++j)
                p = compose(p, power(gens[static_cast<std::size_t>(j)], v[static_cast<std::size_t>(j)]));
            if (is_identity(p).is_identity) {
                out.relations.push_back(v);
                out.lattice.insert(v);
            }
        }
        int pos = n - 1;
        while (pos >= 0 && v[static_cast<std::size_t>(pos)] == K) {
            v[static_cast<std::size_t>(pos)] = -K;
            --pos;
        }
        if (pos < 0) break;
        ++v[static_cast<std::size_t>(pos)];
    }
    return out;
}

// Identifies the abelian group generated by an invertible Mealy
// automaton. Torsion found among the generators forces an elementary
// abelian 2-group (checked, then measured exactly by counting distinct
// subset products); otherwise the group is taken torsion free up to
// 2^max_exp and its free rank is n minus the relation lattice rank, with
// the search bound K recorded in the verdict.
inline GroupType classify_abelian_mealy(const Automaton& aut, int max_exp, int K) {
    if (!aut.is_mealy())
        throw std::invalid_argument("classify_abelian_mealy: requires a Mealy automaton");
    if (!is_invertible(aut))
        throw std::invalid_argument("classify_abelian_mealy: requires an invertible automaton");
    if (!is_abelian(aut))
        throw std::invalid_argument("classify_abelian_mealy: generators do not commute");

    const int n = aut.size();
    std::vector<Element> gens;
    gens.reserve(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) gens.push_back(Element::generator(aut, q));

    bool any_torsion = false;
    bool any_unbounded = false;
    std::vector<OrderResult> orders;
    orders.reserve(gens.size());
    for (const Element& g : gens) {
        OrderResult r = order_pow2(g, max_exp);
        if (!r.finite())
            any_unbounded = true;
        else if (*r.exponent >= 1)
            any_torsion = true;
        orders.push_back(r);
    }

    if (!any_torsion && !any_unbounded) return GroupType::trivial();

    if (any_torsion) {
        if (any_unbounded)
            return GroupType::unknown("generators mix finite order and order beyond 2^" +
                                      std::to_string(max_exp));
        for (const OrderResult& r : orders)
            if (*r.exponent > 1)
                return GroupType::unknown("generator of order " + std::to_string(r.order()) +
                                          " in an abelian group");
        // Every generator squares to the identity, so the group is the
        // set of subset products; its size is 2^rank.
        std::vector<Element> reps;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            Element p(aut, 1);
            for (int q = 0; q < n; ++q)
                if (mask >> q & 1) p = compose(p, gens[static_cast<std::size_t>(q)]);
            bool dup = false;
            for (const Element& r : reps)
                if (equal(p, r)) { dup = true; break; }
            if (!dup) reps.push_back(std::move(p));
        }
        int rank = 0;
        while ((std::size_t{1} << rank) < reps.size()) ++rank;
        if ((std::size_t{1} << rank) != reps.size())
            return GroupType::unknown("subset product count " + std::to_string(reps.size()) +
                                      " is not a power of two");
        return GroupType::elementary_abelian(rank);
    }

    RelationLattice lat = relation_lattice(gens, K);
    return GroupType::free_abelian(n - lat.rank(), K);
}

// Searches factor words of length 1..L (states and their inverses, in a
// fixed lexicographic order) for an involution with nontrivial root
// permutation.
inline std::optional<Element> find_involution_outside_stabilizer(const Automaton& aut, int L) {
    const int n = aut.size();
    for (int len = 1; len <= L; ++len) {
        std::vector<int> sym(static_cast<std::size_t>(len), 0);
        while (true) {
            std::vector<Factor> word;
            word.reserve(sym.size());
            for (int s : sym) word.push_back(Factor{s / 2, s % 2 == 0 ? +1 : -1});
            Element g(aut, 1, std::move(word));
            if (!root_permutation(g).is_identity() &&
                is_identity(compose(g, g)).is_identity)
                return g;
            int pos = len - 1;
            while (pos >= 0 && sym[static_cast<std::size_t>(pos)] == 2 * n - 1) {
                sym[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++sym[static_cast<std::size_t>(pos)];
        }
    }
    return std::nullopt;
}

// One classification report line. delta and rho are the row-major table
// digits (state 0 first, letter 0 first within a row).
struct ClassifyRow {
    std::uint64_t index = 0;
    std::string delta;
    std::string rho;
    bool abelian = false;
    GroupType type;
};

namespace detail {

inline std::string table_digits(const std::vector<std::vector<int>>& rows) {
    std::string s;
    for (const auto& row : rows)
        for (int e : row) s.push_back(static_cast<char>('0' + e));
    return s;
}

}  // namespace detail

inline ClassifyRow classify_one(const MealyEnumeration& en, std::uint64_t index, int max_exp,
                                int K) {
    Automaton a = en.at(index);
    const StepTable& t = a.schedule.cycle.front();
    ClassifyRow row;
    row.index = index;
    row.delta = detail::table_digits(t.delta);
    row.rho = detail::table_digits(t.rho);
    row.abelian = is_abelian(a);
    row.type = row.abelian ? classify_abelian_mealy(a, max_exp, K) : GroupType::non_abelian();
    return row;
}

// Classifies every enumerated automaton; rows come back in index order
// regardless of the number of worker threads.
inline std::vector<ClassifyRow> classify_all(int n, int k, int max_exp, int K, int threads = 1) {
    MealyEnumeration en(n, k);
    std::vector<ClassifyRow> rows(en.size());
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t i = next.fetch_add(1); i < en.size(); i = next.fetch_add(1))
            rows[i] = classify_one(en, i, max_exp, K);
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return rows;
}

// CSV: header, then one row per automaton. rank is filled for the
// elementary and free abelian verdicts, bound only for free abelian;
// the other cells stay empty.
inline void write_report_csv(std::ostream& os, const std::vector<ClassifyRow>& rows) {
    os << "index,delta,rho,abelian,verdict,rank,bound\n";
    for (const ClassifyRow& r : rows) {
        os << r.index << ',' << r.delta << ',' << r.rho << ',' << (r.abelian ? "true" : "false")
           << ',';
        switch (r.type.tag) {
            case GroupTag::Trivial: os << "Trivial,,"; break;
            case GroupTag::ElementaryAbelian:
                os << "ElementaryAbelian," << r.type.rank << ','; break;
            case GroupTag::FreeAbelian:
                os << "FreeAbelian," << r.type.rank << ',' << r.type.bound; break;
            case GroupTag::NonAbelian: os << "NonAbelian,,"; break;
            case GroupTag::Unknown: os << "Unknown,,"; break;
        }
        os << '\n';
    }
}

}  // namespace tvaut
