// Copyright (c) 2026 The cssc-spmv Authors
// SPDX-License-Identifier: Apache-2.0

// Test-side oracles, kept deliberately independent of the packing and
// rotation machinery they check: plain nested loops over dense arrays.

#pragma once

#include <cstdint>
#include <vector>

#include "spmv/he.hpp"
#include "spmv/sparse.hpp"

namespace spmv::test {

inline std::vector<std::vector<std::int64_t>> dense_of(const CsrMatrix& m) {
    std::vector<std::vector<std::int64_t>> dense(m.rows, std::vector<std::int64_t>(m.cols, 0));
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t k = m.row_ptrs[i]; k < m.row_ptrs[i + 1]; ++k) {
            dense[i][m.col_indices[k]] = m.values[k];
        }
    }
    return dense;
}

// Plain matvec, reduced to the centered residue system the decryptor reports.
inline std::vector<std::int64_t> matvec_mod(const std::vector<std::vector<std::int64_t>>& dense,
                                            const std::vector<std::int64_t>& v,
                                            std::uint64_t modulus) {
    std::vector<std::int64_t> out(dense.size(), 0);
    for (std::size_t i = 0; i < dense.size(); ++i) {
        std::int64_t acc = 0;
        for (std::size_t j = 0; j < v.size(); ++j) {
            acc += dense[i][j] * v[j];
        }
        out[i] = to_signed(to_residue(acc, modulus), modulus);
    }
    return out;
}

// Column-block sums of a column-major flattened chunk: slot u of the result
// is the sum of slots u, u + rows, ..., u + (cols - 1) * rows.
inline std::vector<std::int64_t> block_sums(const std::vector<std::int64_t>& flat,
                                            std::size_t rows, std::size_t cols) {
    std::vector<std::int64_t> out(rows, 0);
    for (std::size_t c = 0; c < cols; ++c) {
        for (std::size_t r = 0; r < rows; ++r) {
            out[r] += flat[c * rows + r];
        }
    }
    return out;
}

}  // namespace spmv::test
