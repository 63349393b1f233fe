#pragma once

// Boolean-lattice operators on the zeon algebra. Basis vectors e_I are indexed
// by bitmask (bit i-1 set iff i in I), ordered by mask value. Operators act on
// column vectors: entry (row, col) is the coefficient of e_row in op(e_col).

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "krawtchouk/exact.hpp"
#include "krawtchouk/matrix.hpp"

namespace krawtchouk {

inline constexpr int kMaxZeonGenerators = 20;

class SubsetIndex {
public:
    constexpr SubsetIndex() = default;
    constexpr explicit SubsetIndex(std::uint32_t mask) : mask_(mask) {}

    static SubsetIndex of(std::initializer_list<int> elements) {
        std::uint32_t mask = 0;
        for (int e : elements) {
            if (e < 1 || e > kMaxZeonGenerators) throw std::out_of_range("subset element out of range");
            mask |= std::uint32_t{1} << (e - 1);
        }
        return SubsetIndex(mask);
    }

    constexpr std::uint32_t mask() const { return mask_; }
    constexpr int layer() const { return std::popcount(mask_); }
    constexpr bool contains(int i) const { return (mask_ >> (i - 1)) & 1U; }
    constexpr bool disjoint(SubsetIndex o) const { return (mask_ & o.mask_) == 0; }

    friend constexpr bool operator==(SubsetIndex, SubsetIndex) = default;
    friend constexpr auto operator<=>(SubsetIndex, SubsetIndex) = default;

private:
    std::uint32_t mask_ = 0;
};

/// e_I e_J = e_{I u J} for disjoint I, J; nullopt when some e_i^2 = 0 appears.
inline std::optional<SubsetIndex> zeon_mul(SubsetIndex a, SubsetIndex b) {
    if (!a.disjoint(b)) return std::nullopt;
    return SubsetIndex(a.mask() | b.mask());
}

/// Sparse exact-integer operator on the 2^n-dimensional zeon space.
class ZeonMatrix {
public:
    using Key = std::pair<std::uint32_t, std::uint32_t>;  // (row, col)

    explicit ZeonMatrix(int n) : n_(n) {
        if (n < 0 || n > kMaxZeonGenerators) throw std::out_of_range("zeon size n out of range");
    }

    int n() const { return n_; }
    std::size_t size() const { return std::size_t{1} << n_; }
    std::size_t nonzeros() const { return entries_.size(); }
    const std::map<Key, ExactInt>& entries() const { return entries_; }

    ExactInt at(std::uint32_t row, std::uint32_t col) const {
        auto it = entries_.find({row, col});
        return it == entries_.end() ? ExactInt(0) : it->second;
    }

    void add(std::uint32_t row, std::uint32_t col, const ExactInt& value) {
        if (row >= size() || col >= size()) throw std::out_of_range("zeon matrix index out of range");
        if (value == 0) return;
        auto [it, inserted] = entries_.try_emplace({row, col}, value);
        if (!inserted) {
            it->second += value;
            if (it->second == 0) entries_.erase(it);
        }
    }

    ZeonMatrix transpose() const {
        ZeonMatrix t(n_);
        for (const auto& [key, v] : entries_) t.entries_.emplace(Key{key.second, key.first}, v);
        return t;
    }

    ZeonMatrix& operator+=(const ZeonMatrix& o) {
        require_same(o);
        for (const auto& [key, v] : o.entries_) add(key.first, key.second, v);
        return *this;
    }
    ZeonMatrix& operator-=(const ZeonMatrix& o) {
        require_same(o);
        for (const auto& [key, v] : o.entries_) add(key.first, key.second, -v);
        return *this;
    }
    friend ZeonMatrix operator+(ZeonMatrix a, const ZeonMatrix& b) { return a += b; }
    friend ZeonMatrix operator-(ZeonMatrix a, const ZeonMatrix& b) { return a -= b; }

    friend ZeonMatrix operator*(const ZeonMatrix& a, const ZeonMatrix& b) {
        a.require_same(b);
        // index b by row so that (a_ik, b_kj) pairs meet on k
        std::map<std::uint32_t, std::vector<std::pair<std::uint32_t, const ExactInt*>>> b_rows;
        for (const auto& [key, v] : b.entries_) b_rows[key.first].emplace_back(key.second, &v);
        ZeonMatrix c(a.n_);
        for (const auto& [key, av] : a.entries_) {
            auto it = b_rows.find(key.second);
            if (it == b_rows.end()) continue;
            for (const auto& [col, bv] : it->second) c.add(key.first, col, av * *bv);
        }
        return c;
    }

    friend bool operator==(const ZeonMatrix& a, const ZeonMatrix& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

    bool is_zero() const { return entries_.empty(); }

    bool is_diagonal() const {
        for (const auto& [key, v] : entries_)
            if (key.first != key.second) return false;
        return true;
    }

    std::vector<ExactInt> diagonal() const {
        std::vector<ExactInt> d(size(), ExactInt(0));
        for (const auto& [key, v] : entries_)
            if (key.first == key.second) d[key.first] = v;
        return d;
    }

    /// Dense copy for the algebra computations; capped at n <= 10.
    IntegerMatrix to_dense() const {
        if (n_ > 10) throw std::out_of_range("dense zeon matrices are limited to n <= 10");
        IntegerMatrix m(size(), size());
        for (const auto& [key, v] : entries_) m(key.first, key.second) = v;
        return m;
    }

private:
    void require_same(const ZeonMatrix& o) const {
        if (n_ != o.n_) throw std::invalid_argument("zeon matrices of different size");
    }

    int n_;
    std::map<Key, ExactInt> entries_;
};

namespace detail {

inline void require_generator(int n, int i) {
    if (n < 1 || n > kMaxZeonGenerators) throw std::out_of_range("zeon size n out of range");
    if (i < 1 || i > n)
        throw std::out_of_range("generator index " + std::to_string(i) + " outside [1, " + std::to_string(n) + "]");
}

}  // namespace detail

/// Multiplication by e_i.
inline ZeonMatrix raise(int n, int i) {
    detail::require_generator(n, i);
    ZeonMatrix out(n);
    const std::uint32_t bit = std::uint32_t{1} << (i - 1);
    for (std::uint32_t mask = 0; mask < out.size(); ++mask)
        if ((mask & bit) == 0) out.add(mask | bit, mask, 1);
    return out;
}

/// Adjoint of raise: removes i from I when present.
inline ZeonMatrix lower(int n, int i) {
    detail::require_generator(n, i);
    ZeonMatrix out(n);
    const std::uint32_t bit = std::uint32_t{1} << (i - 1);
    for (std::uint32_t mask = 0; mask < out.size(); ++mask)
        if (mask & bit) out.add(mask & ~bit, mask, 1);
    return out;
}

inline ZeonMatrix op_T(int n) {
    if (n < 1) throw std::out_of_range("T needs n >= 1");
    ZeonMatrix out(n);
    for (int i = 1; i <= n; ++i) out += raise(n, i);
    return out;
}

inline ZeonMatrix op_Tstar(int n) {
    if (n < 1) throw std::out_of_range("T* needs n >= 1");
    ZeonMatrix out(n);
    for (int i = 1; i <= n; ++i) out += lower(n, i);
    return out;
}

/// U = [T*, T] = T* T - T T*
inline ZeonMatrix op_U(int n) {
    const ZeonMatrix t = op_T(n);
    const ZeonMatrix ts = op_Tstar(n);
    return ts * t - t * ts;
}

}  // namespace krawtchouk
