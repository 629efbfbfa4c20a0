// Copyright (c) 2026 The cssc-spmv Authors
// SPDX-License-Identifier: Apache-2.0

#include "spmv/chunk.hpp"

#include <string>

namespace spmv {

ChunkSet generate_chunks(const CsscMatrix& m, std::size_t slot_budget) {
    if (slot_budget == 0) {
        throw std::invalid_argument("generate_chunks: slot budget must be positive");
    }
    const std::size_t L = m.aligned_cols();
    for (std::size_t j = 0; j < L; ++j) {
        if (m.column_height(j) > slot_budget) {
            throw ColumnTooTallError("generate_chunks: aligned column " + std::to_string(j) +
                                     " has height " + std::to_string(m.column_height(j)) +
                                     " > budget " + std::to_string(slot_budget) +
                                     "; partition the rows first");
        }
    }

    ChunkSet out;
    out.rows = m.rows;
    out.cols = m.cols;
    out.row_map = m.rm;

    std::size_t i = 0;
    while (i < L) {
        const std::size_t h = m.column_height(i);
        Chunk chunk;
        chunk.rows = h;
        while (i < L && h * (chunk.cols + 1) <= slot_budget) {
            const std::size_t height = m.column_height(i);
            for (std::size_t idx = m.cp[i]; idx < m.cp[i + 1]; ++idx) {
                chunk.value_flat.push_back(m.va[idx]);
                chunk.colidx_flat.push_back(static_cast<std::int64_t>(m.ci[idx]));
            }
            chunk.value_flat.insert(chunk.value_flat.end(), h - height, 0);
            chunk.colidx_flat.insert(chunk.colidx_flat.end(), h - height, -1);
            chunk.cols += 1;
            ++i;
        }
        out.r_list.push_back(chunk.rows);
        out.c_list.push_back(chunk.cols);
        out.chunks.push_back(std::move(chunk));
    }
    return out;
}

std::vector<CsrMatrix> partition_rows(const CsrMatrix& m, std::size_t max_rows) {
    if (max_rows == 0) {
        throw std::invalid_argument("partition_rows: max_rows must be positive");
    }
    std::vector<CsrMatrix> slices;
    for (std::size_t start = 0; start < m.rows; start += max_rows) {
        const std::size_t end = std::min(start + max_rows, m.rows);
        CsrMatrix slice;
        slice.rows = end - start;
        slice.cols = m.cols;
        const std::size_t base = m.row_ptrs[start];
        slice.row_ptrs.resize(slice.rows + 1);
        for (std::size_t i = 0; i <= slice.rows; ++i) {
            slice.row_ptrs[i] = m.row_ptrs[start + i] - base;
        }
        slice.values.assign(m.values.begin() + base, m.values.begin() + m.row_ptrs[end]);
        slice.col_indices.assign(m.col_indices.begin() + base,
                                 m.col_indices.begin() + m.row_ptrs[end]);
        slices.push_back(std::move(slice));
    }
    return slices;
}

}  // namespace spmv
