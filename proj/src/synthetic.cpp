// Copyright (c) 2026 The cssc-spmv Authors
// SPDX-License-Identifier: Apache-2.0

#include "spmv/synthetic.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace spmv {

namespace {

std::int64_t draw_value(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    if (lo > hi) {
        throw std::invalid_argument("draw_value: empty range");
    }
    if (lo == 0 && hi == 0) {
        throw std::invalid_argument("draw_value: range holds only zero");
    }
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    for (;;) {
        const std::int64_t v = lo + static_cast<std::int64_t>(bounded_draw(rng, span));
        if (v != 0) {
            return v;  // entries are non-zeros by definition
        }
    }
}

}  // namespace

CsrMatrix random_sparse_csr(std::size_t rows, std::size_t cols, std::size_t nnz,
                            std::uint64_t seed, std::int64_t value_min, std::int64_t value_max) {
    const std::size_t cells = rows * cols;
    if (nnz > cells) {
        throw std::invalid_argument("random_sparse_csr: nnz exceeds rows * cols");
    }
    std::mt19937_64 rng(seed);

    std::vector<std::uint64_t> picks;
    picks.reserve(nnz);
    if (nnz * 2 >= cells) {
        // Dense enough that rejection would stall: partial Fisher-Yates.
        std::vector<std::uint64_t> all(cells);
        std::iota(all.begin(), all.end(), std::uint64_t{0});
        for (std::size_t i = 0; i < nnz; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(bounded_draw(rng, cells - i));
            std::swap(all[i], all[j]);
            picks.push_back(all[i]);
        }
    } else {
        std::unordered_set<std::uint64_t> taken;
        taken.reserve(nnz * 2);
        while (picks.size() < nnz) {
            const std::uint64_t cell = bounded_draw(rng, cells);
            if (taken.insert(cell).second) {
                picks.push_back(cell);
            }
        }
    }

    CooMatrix coo;
    coo.rows = rows;
    coo.cols = cols;
    coo.entries.reserve(nnz);
    for (const std::uint64_t cell : picks) {
        coo.entries.push_back({static_cast<std::size_t>(cell / cols),
                               static_cast<std::size_t>(cell % cols),
                               draw_value(rng, value_min, value_max)});
    }
    return coo_to_csr(coo);
}

std::vector<std::int64_t> random_vector(std::size_t length, std::uint64_t seed,
                                        std::int64_t value_min, std::int64_t value_max) {
    if (value_min > value_max) {
        throw std::invalid_argument("random_vector: empty range");
    }
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const auto span = static_cast<std::uint64_t>(value_max - value_min) + 1;
    std::vector<std::int64_t> v(length);
    for (auto& x : v) {
        x = value_min + static_cast<std::int64_t>(bounded_draw(rng, span));
    }
    return v;
}

}  // namespace spmv
