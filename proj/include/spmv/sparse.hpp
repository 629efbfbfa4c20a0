// Copyright (c) 2026 The cssc-spmv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spmv/errors.hpp"

namespace spmv {

struct CooEntry {
    std::size_t row = 0;
    std::size_t col = 0;
    std::int64_t value = 0;

    bool operator==(const CooEntry&) const = default;
};

// Unordered triplet form, the ingestion format. Positions must be unique;
// coo_to_csr enforces that.
struct CooMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<CooEntry> entries;
};

// Standard CSR with rows sorted by index and columns ascending within a row.
struct CsrMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::int64_t> values;
    std::vector<std::size_t> col_indices;
    std::vector<std::size_t> row_ptrs;  // length rows + 1

    std::size_t nnz() const { return values.size(); }
};

// Column-major storage of the row-sorted, left-aligned form of a sparse
// matrix. Rows are ordered by descending non-zero count (stable; ties keep
// ascending original index) and their entries are packed flush left, so the
// aligned columns have non-increasing heights. va/ci list the aligned columns
// one after another; cp[j] is the offset of aligned column j; rm maps sorted
// row position to the original row index.
struct CsscMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::int64_t> va;
    std::vector<std::size_t> ci;
    std::vector<std::size_t> rm;
    std::vector<std::size_t> cp;  // length L + 1, L = max row nnz

    std::size_t aligned_cols() const { return cp.empty() ? 0 : cp.size() - 1; }
    std::size_t nnz() const { return va.size(); }
    std::size_t column_height(std::size_t j) const { return cp[j + 1] - cp[j]; }
};

// Throws DuplicateEntryError on repeated positions and IndexOutOfRangeError
// on positions outside rows x cols. Explicit zero values are dropped.
CsrMatrix coo_to_csr(const CooMatrix& coo);

CsrMatrix csr_from_dense(const std::vector<std::vector<std::int64_t>>& dense);

std::vector<std::vector<std::int64_t>> csr_to_dense(const CsrMatrix& m);

CsscMatrix csr_to_cssc(const CsrMatrix& m);

// Dense reconstruction in sorted-row order: row p of the result is original
// row rm[p]. Inverse of csr_to_cssc up to the row sort.
std::vector<std::vector<std::int64_t>> cssc_expand(const CsscMatrix& m);

// Structural checks; returns one message per violation, empty when clean.
std::vector<std::string> validate_cssc(const CsscMatrix& m);

}  // namespace spmv
