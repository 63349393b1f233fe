#pragma once

// Fraction-free row echelon form over the integers for sparse vectors.
// Each stored row is primitive (content 1) with a positive leading entry and a
// leading index no other row shares, so rank over Q is the row count.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "krawtchouk/exact.hpp"

namespace krawtchouk {

/// (index, value) pairs, strictly increasing index, no stored zeros.
using SparseVector = std::vector<std::pair<std::size_t, ExactInt>>;

namespace detail {

/// a*x - b*y
inline SparseVector combine(const ExactInt& a, const SparseVector& x, const ExactInt& b, const SparseVector& y) {
    SparseVector out;
    out.reserve(x.size() + y.size());
    auto ix = x.begin();
    auto iy = y.begin();
    while (ix != x.end() || iy != y.end()) {
        if (iy == y.end() || (ix != x.end() && ix->first < iy->first)) {
            out.emplace_back(ix->first, a * ix->second);
            ++ix;
        } else if (ix == x.end() || iy->first < ix->first) {
            out.emplace_back(iy->first, -b * iy->second);
            ++iy;
        } else {
            ExactInt v = a * ix->second - b * iy->second;
            if (v != 0) out.emplace_back(ix->first, std::move(v));
            ++ix;
            ++iy;
        }
    }
    return out;
}

inline void make_primitive(SparseVector& v) {
    if (v.empty()) return;
    ExactInt g = 0;
    for (const auto& [i, x] : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    if (v.front().second < 0) g = -g;
    if (g != 1)
        for (auto& [i, x] : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

}  // namespace detail

class SparseEchelon {
public:
    explicit SparseEchelon(std::size_t dimension) : dimension_(dimension) {}

    std::size_t dimension() const { return dimension_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<SparseVector>& rows() const { return rows_; }

    /// Reduce v against the stored rows; empty result means v is in the span.
    SparseVector reduce(SparseVector v) const {
        detail::make_primitive(v);
        while (!v.empty()) {
            auto it = pivot_row_.find(v.front().first);
            if (it == pivot_row_.end()) break;
            const SparseVector& row = rows_[it->second];
            ExactInt g;
            mpz_gcd(g.get_mpz_t(), row.front().second.get_mpz_t(), v.front().second.get_mpz_t());
            const ExactInt a = row.front().second / g;
            const ExactInt b = v.front().second / g;
            v = detail::combine(a, v, b, row);
            detail::make_primitive(v);
        }
        return v;
    }

    bool in_span(SparseVector v) const { return reduce(std::move(v)).empty(); }

    /// Adds v if it is independent of the stored rows. Returns whether the rank grew.
    bool insert(SparseVector v) {
        for (const auto& [i, x] : v)
            if (i >= dimension_) throw std::out_of_range("sparse vector index exceeds dimension");
        SparseVector reduced = reduce(std::move(v));
        if (reduced.empty()) return false;
        pivot_row_.emplace(reduced.front().first, rows_.size());
        rows_.push_back(std::move(reduced));
        return true;
    }

private:
    std::size_t dimension_;
    std::vector<SparseVector> rows_;
    std::unordered_map<std::size_t, std::size_t> pivot_row_;
};

/// Drops zeros and sorts; accepts unsorted (index, value) input with repeats.
inline SparseVector make_sparse(std::vector<std::pair<std::size_t, ExactInt>> entries) {
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector out;
    for (auto& [i, x] : entries) {
        if (!out.empty() && out.back().first == i)
            out.back().second += x;
        else
            out.emplace_back(i, std::move(x));
        if (out.back().second == 0) out.pop_back();
    }
    return out;
}

}  // namespace krawtchouk
