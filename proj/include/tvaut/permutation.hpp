#pragma once

// Permutations of a finite alphabet {0,...,k-1}, stored as image tables.
// Composition is written in action order: p.then(q) applies p first.

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tvaut {

using Letter = int;

// True iff row is a bijection of {0,...,k-1}.
inline bool is_letter_bijection(const std::vector<Letter>& row, int k) {
    if (static_cast<int>(row.size()) != k) return false;
    std::vector<char> hit(static_cast<std::size_t>(k), 0);
    for (Letter y : row) {
        if (y < 0 || y >= k || hit[static_cast<std::size_t>(y)]) return false;
        hit[static_cast<std::size_t>(y)] = 1;
    }
    return true;
}

class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<Letter> images) : images_(std::move(images)) {
        if (!is_letter_bijection(images_, degree()))
            throw std::invalid_argument("Permutation: image table is not a bijection");
    }

    static Permutation identity(int k) {
        std::vector<Letter> im(static_cast<std::size_t>(k));
        std::iota(im.begin(), im.end(), 0);
        Permutation p;
        p.images_ = std::move(im);
        return p;
    }

    // The transposition (0 1); identity elsewhere.
    static Permutation transposition01(int k) {
        Permutation p = identity(k);
        std::swap(p.images_[0], p.images_[1]);
        return p;
    }

    int degree() const { return static_cast<int>(images_.size()); }

    Letter operator()(Letter x) const { return images_[static_cast<std::size_t>(x)]; }

    bool is_identity() const {
        for (int x = 0; x < degree(); ++x)
            if (images_[static_cast<std::size_t>(x)] != x) return false;
        return true;
    }

    // Action-order composition: (this.then(p))(x) = p(this(x)).
    Permutation then(const Permutation& p) const {
        Permutation r;
        r.images_.resize(images_.size());
        for (std::size_t x = 0; x < images_.size(); ++x)
            r.images_[x] = p.images_[static_cast<std::size_t>(images_[x])];
        return r;
    }

    Permutation inverse() const {
        Permutation r;
        r.images_.resize(images_.size());
        for (std::size_t x = 0; x < images_.size(); ++x)
            r.images_[static_cast<std::size_t>(images_[x])] = static_cast<Letter>(x);
        return r;
    }

    const std::vector<Letter>& images() const { return images_; }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<Letter> images_;
};

}  // namespace tvaut
