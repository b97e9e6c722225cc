#pragma once

// Integer lattices of exponent vectors, kept in Hermite normal form:
// pivots positive and strictly right-down, entries above each pivot
// reduced into [0, pivot). The form is unique per lattice, so bases can
// be compared directly and rank/membership are exact.

#include <stdexcept>
#include <string>
#include <vector>

namespace tvaut {

using IntVector = std::vector<long long>;

namespace detail {

inline int leading_index(const IntVector& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return static_cast<int>(i);
    return -1;
}

// g = gcd(a, b) >= 0 with s*a + t*b = g.
inline long long ext_gcd(long long a, long long b, long long& s, long long& t) {
    if (b == 0) {
        s = a < 0 ? -1 : 1;
        t = 0;
        return a < 0 ? -a : a;
    }
    long long s1, t1;
    long long g = ext_gcd(b, a % b, s1, t1);
    s = t1;
    t = s1 - (a / b) * t1;
    return g;
}

inline long long floor_div(long long a, long long b) {  // b > 0
    long long q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

}  // namespace detail

class IntLattice {
public:
    explicit IntLattice(int dimension) : dim_(dimension) {
        if (dimension < 0) throw std::invalid_argument("IntLattice: negative dimension");
    }

    int dimension() const { return dim_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<IntVector>& basis() const { return rows_; }

    // Extends the lattice by v.
    void insert(IntVector v) {
        check_size(v);
        std::size_t row = 0;
        while (true) {
            int lead = detail::leading_index(v);
            if (lead < 0) return;
            while (row < rows_.size() && pivot(rows_[row]) < lead) ++row;
            if (row == rows_.size() || pivot(rows_[row]) > lead) {
                if (v[static_cast<std::size_t>(lead)] < 0)
                    for (auto& e : v) e = -e;
                rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(row), std::move(v));
                reduce_above();
                return;
            }
            IntVector& b = rows_[row];
            long long s, t;
            long long g = detail::ext_gcd(b[static_cast<std::size_t>(lead)],
                                          v[static_cast<std::size_t>(lead)], s, t);
            long long bf = b[static_cast<std::size_t>(lead)] / g;
            long long vf = v[static_cast<std::size_t>(lead)] / g;
            IntVector nb(static_cast<std::size_t>(dim_)), nv(static_cast<std::size_t>(dim_));
            for (std::size_t i = 0; i < nb.size(); ++i) {
                nb[i] = s * b[i] + t * v[i];
                nv[i] = bf * v[i] - vf * b[i];
            }
            b = std::move(nb);
            v = std::move(nv);  // leading entry now zero; continue right
            reduce_above();
        }
    }

    bool contains(IntVector v) const {
        check_size(v);
        for (const IntVector& b : rows_) {
            int lead = detail::leading_index(v);
            if (lead < 0) return true;
            int p = pivot(b);
            if (p > lead) return false;
            if (p < lead) continue;
            long long q = v[static_cast<std::size_t>(lead)];
            long long piv = b[static_cast<std::size_t>(p)];
            if (q % piv != 0) return false;
            long long f = q / piv;
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= f * b[i];
        }
        return detail::leading_index(v) < 0;
    }

private:
    static int pivot(const IntVector& row) { return detail::leading_index(row); }

    void check_size(const IntVector& v) const {
        if (static_cast<int>(v.size()) != dim_)
            throw std::invalid_argument("IntLattice: vector of dimension " +
                                        std::to_string(v.size()) + ", expected " +
                                        std::to_string(dim_));
    }

    // Restores 0 <= rows_[r][p] < pivot for every pivot column p below r.
    void reduce_above() {
        for (std::size_t r2 = 0; r2 < rows_.size(); ++r2) {
            int p = pivot(rows_[r2]);
            long long piv = rows_[r2][static_cast<std::size_t>(p)];
            for (std::size_t r = 0; r < r2; ++r) {
                long long f = detail::floor_div(rows_[r][static_cast<std::size_t>(p)], piv);
                if (f == 0) continue;
                for (std::size_t i = 0; i < rows_[r].size(); ++i)
                    rows_[r][i] -= f * rows_[r2][i];
            }
        }
    }

    int dim_;
    std::vector<IntVector> rows_;
};

}  // namespace tvaut
