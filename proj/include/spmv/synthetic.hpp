// Copyright (c) 2026 The cssc-spmv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

#include "spmv/sparse.hpp"

namespace spmv {

// Bounded draw that is reproducible across standard libraries (the standard
// distributions are not). Bias is immaterial at these ranges.
inline std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

// Uniform positions without replacement, non-zero values uniform in
// [value_min, value_max]. Deterministic per seed.
CsrMatrix random_sparse_csr(std::size_t rows, std::size_t cols, std::size_t nnz,
                            std::uint64_t seed, std::int64_t value_min = -100,
                            std::int64_t value_max = 100);

std::vector<std::int64_t> random_vector(std::size_t length, std::uint64_t seed,
                                        std::int64_t value_min = -100,
                                        std::int64_t value_max = 100);

}  // namespace spmv
