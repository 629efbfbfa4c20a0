// Copyright (c) 2026 The cssc-spmv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "spmv/sparse.hpp"

namespace spmv {

// One ciphertext worth of matrix data: `cols` consecutive aligned columns,
// each padded to the height of the first (tallest) one and flattened
// column-major. Padding slots carry value 0 and column index -1.
struct Chunk {
    std::size_t rows = 0;  // padded column height h
    std::size_t cols = 0;  // aligned columns packed into this chunk
    std::vector<std::int64_t> value_flat;   // length rows * cols
    std::vector<std::int64_t> colidx_flat;  // length rows * cols, -1 on padding
};

struct ChunkSet {
    std::vector<Chunk> chunks;
    std::vector<std::size_t> r_list;  // heights, one per chunk
    std::vector<std::size_t> c_list;  // column counts, one per chunk
    std::vector<std::size_t> row_map;
    std::size_t rows = 0;
    std::size_t cols = 0;

    std::size_t n_ct() const { return chunks.size(); }
};

// Greedy left-to-right packing: a chunk opens at the first unconsumed aligned
// column, fixes h to that column's height, and absorbs further columns while
// the padded size h * (cols + 1) stays within slot_budget. Throws
// ColumnTooTallError when some aligned column alone exceeds slot_budget.
ChunkSet generate_chunks(const CsscMatrix& m, std::size_t slot_budget);

// Horizontal slices of at most max_rows rows each, in original row order.
// Every slice's aligned columns fit a chunk of that budget, since a column
// height never exceeds the slice row count.
std::vector<CsrMatrix> partition_rows(const CsrMatrix& m, std::size_t max_rows);

}  // namespace spmv
