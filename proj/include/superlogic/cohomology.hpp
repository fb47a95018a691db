#pragma once

// Cochain complexes of GF(2) vector spaces and their Betti numbers, plus a
// bar-type construction over the character algebra: C^k is the space of
// F2-valued functions on 𝒜^k (C^0 = F2, one basis delta function per tuple)
// and
//
//   (dφ)(a0,…,ak) = φ(a1,…,ak) + Σ_i φ(a0,…,a_i·a_{i+1},…,ak) + φ(a0,…,a_{k−1})
//
// with · the pointwise product. d∘d = 0 follows from associativity and is
// re-validated on every constructed complex anyway.
//
// The degree cap keeps exhaustion honest; the top reported cohomology is
// relative to the truncation window (no differential out of the top space).
// Complexes can also be supplied directly, so alternative constructions are
// testable without code changes.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "characters.hpp"
#include "f2.hpp"

namespace superlogic {

class invalid_complex_error : public std::runtime_error {
public:
    explicit invalid_complex_error(const std::string& what)
        : std::runtime_error("invalid complex: " + what) {}
};

class degree_too_large_error : public std::runtime_error {
public:
    explicit degree_too_large_error(std::size_t degree)
        : std::runtime_error("max_degree " + std::to_string(degree) +
                             " exceeds the cap of " + std::to_string(max_degree_cap)) {}
    static constexpr std::size_t max_degree_cap = 3;
};

// dims[k] spaces C^0..C^{N-1} with differentials d_k : C^k -> C^{k+1} for
// k < N-1; the maps off both ends are implicitly zero. Validates shapes and
// d^2 = 0 at construction.
class cochain_complex {
public:
    cochain_complex(std::vector<std::size_t> dims, std::vector<f2_matrix> differentials)
        : dims_(std::move(dims)), diffs_(std::move(differentials)) {
        if (dims_.empty())
            throw invalid_complex_error("no cochain spaces");
        if (diffs_.size() + 1 != dims_.size())
            throw invalid_complex_error("expected one differential per adjacent pair");
        for (std::size_t k = 0; k < diffs_.size(); ++k) {
            if (diffs_[k].cols() != dims_[k] || diffs_[k].rows() != dims_[k + 1])
                throw invalid_complex_error(
                    "differential " + std::to_string(k) + " has shape " +
                    std::to_string(diffs_[k].rows()) + "x" + std::to_string(diffs_[k].cols()) +
                    ", expected " + std::to_string(dims_[k + 1]) + "x" + std::to_string(dims_[k]));
        }
        for (std::size_t k = 0; k + 1 < diffs_.size(); ++k)
            if (!diffs_[k + 1].multiply(diffs_[k]).is_zero())
                throw invalid_complex_error("d" + std::to_string(k + 1) + " ∘ d" +
                                            std::to_string(k) + " != 0");
    }

    const std::vector<std::size_t>& dims() const { return dims_; }
    const std::vector<f2_matrix>& differentials() const { return diffs_; }

private:
    std::vector<std::size_t> dims_;
    std::vector<f2_matrix> diffs_;
};

// dim H^k = dims[k] − rank d_k − rank d_{k−1}.
inline std::vector<std::size_t> betti_numbers(const cochain_complex& complex) {
    const auto& dims = complex.dims();
    const auto& diffs = complex.differentials();
    std::vector<std::size_t> betti(dims.size());
    std::vector<std::size_t> ranks(diffs.size());
    for (std::size_t k = 0; k < diffs.size(); ++k) ranks[k] = diffs[k].rank();
    for (std::size_t k = 0; k < dims.size(); ++k) {
        std::size_t out = k < ranks.size() ? ranks[k] : 0;
        std::size_t in = k > 0 ? ranks[k - 1] : 0;
        betti[k] = dims[k] - out - in;
    }
    return betti;
}

namespace detail {

// Mixed-radix index of a tuple over an algebra of m elements, first entry
// most significant.
inline std::size_t tuple_index(const std::vector<std::size_t>& tuple, std::size_t m) {
    std::size_t idx = 0;
    for (auto t : tuple) idx = idx * m + t;
    return idx;
}

inline bool next_tuple(std::vector<std::size_t>& tuple, std::size_t m) {
    for (std::size_t i = tuple.size(); i-- > 0;) {
        if (++tuple[i] < m) return true;
        tuple[i] = 0;
    }
    return false;
}

} // namespace detail

inline cochain_complex bar_complex(const std::vector<f2_function>& generators,
                                   std::size_t max_degree) {
    if (max_degree > degree_too_large_error::max_degree_cap)
        throw degree_too_large_error(max_degree);
    std::vector<f2_function> algebra = algebra_closure(generators);
    const std::size_t m = algebra.size();

    // product table over algebra indices
    std::vector<std::vector<std::size_t>> product(m, std::vector<std::size_t>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            f2_function prod = mu(algebra[i], algebra[j]);
            product[i][j] = static_cast<std::size_t>(
                std::lower_bound(algebra.begin(), algebra.end(), prod) - algebra.begin());
        }

    std::vector<std::size_t> dims(max_degree + 1);
    dims[0] = 1;
    for (std::size_t k = 1; k <= max_degree; ++k) dims[k] = dims[k - 1] * m;

    std::vector<f2_matrix> diffs;
    for (std::size_t k = 0; k < max_degree; ++k) {
        f2_matrix d(dims[k + 1], dims[k]);
        std::vector<std::size_t> w(k + 1, 0);   // row tuple in C^{k+1}
        do {
            const std::size_t row = detail::tuple_index(w, m);
            std::vector<std::size_t> t;
            t.reserve(k);
            auto flip = [&](const std::vector<std::size_t>& u) {
                const std::size_t col = detail::tuple_index(u, m);
                d.set(row, col, !d.at(row, col));
            };
            t.assign(w.begin() + 1, w.end());
            flip(t);                              // drop first
            for (std::size_t i = 0; i + 1 < w.size(); ++i) {
                t.assign(w.begin(), w.end());
                t[i] = product[w[i]][w[i + 1]];
                t.erase(t.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                flip(t);                          // merge i, i+1
            }
            t.assign(w.begin(), w.end() - 1);
            flip(t);                              // drop last
        } while (detail::next_tuple(w, m));
        diffs.push_back(std::move(d));
    }

    return cochain_complex(std::move(dims), std::move(diffs));
}

} // namespace superlogic
