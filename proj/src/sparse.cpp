// Copyright (c) 2026 The cssc-spmv Authors
// SPDX-License-Identifier: Apache-2.0

#include "spmv/sparse.hpp"

#include <algorithm>
#include <numeric>

namespace spmv {

CsrMatrix coo_to_csr(const CooMatrix& coo) {
    CsrMatrix out;
    out.rows = coo.rows;
    out.cols = coo.cols;

    std::vector<CooEntry> entries;
    entries.reserve(coo.entries.size());
    for (const auto& e : coo.entries) {
        if (e.row >= coo.rows || e.col >= coo.cols) {
            throw IndexOutOfRangeError("coo_to_csr: entry (" + std::to_string(e.row) + ", " +
                                       std::to_string(e.col) + ") outside " +
                                       std::to_string(coo.rows) + "x" + std::to_string(coo.cols));
        }
        if (e.value == 0) {
            continue;  // structural zeros carry no information
        }
        entries.push_back(e);
    }

    std::sort(entries.begin(), entries.end(), [](const CooEntry& a, const CooEntry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    for (std::size_t i = 1; i < entries.size(); ++i) {
        if (entries[i].row == entries[i - 1].row && entries[i].col == entries[i - 1].col) {
            throw DuplicateEntryError("coo_to_csr: duplicate entry at (" +
                                      std::to_string(entries[i].row) + ", " +
                                      std::to_string(entries[i].col) + ")");
        }
    }

    out.row_ptrs.assign(coo.rows + 1, 0);
    out.values.reserve(entries.size());
    out.col_indices.reserve(entries.size());
    for (const auto& e : entries) {
        out.row_ptrs[e.row + 1] += 1;
    }
    std::partial_sum(out.row_ptrs.begin(), out.row_ptrs.end(), out.row_ptrs.begin());
    for (const auto& e : entries) {
        out.values.push_back(e.value);
        out.col_indices.push_back(e.col);
    }
    return out;
}

CsrMatrix csr_from_dense(const std::vector<std::vector<std::int64_t>>& dense) {
    CooMatrix coo;
    coo.rows = dense.size();
    coo.cols = dense.empty() ? 0 : dense.front().size();
    for (std::size_t i = 0; i < dense.size(); ++i) {
        for (std::size_t j = 0; j < dense[i].size(); ++j) {
            if (dense[i][j] != 0) {
                coo.entries.push_back({i, j, dense[i][j]});
            }
        }
    }
    return coo_to_csr(coo);
}

std::vector<std::vector<std::int64_t>> csr_to_dense(const CsrMatrix& m) {
    std::vector<std::vector<std::int64_t>> dense(m.rows, std::vector<std::int64_t>(m.cols, 0));
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t k = m.row_ptrs[i]; k < m.row_ptrs[i + 1]; ++k) {
            dense[i][m.col_indices[k]] = m.values[k];
        }
    }
    return dense;
}

CsscMatrix csr_to_cssc(const CsrMatrix& m) {
    CsscMatrix out;
    out.rows = m.rows;
    out.cols = m.cols;

    std::vector<std::size_t> nnz_row(m.rows);
    std::size_t max_nnz = 0;
    for (std::size_t i = 0; i < m.rows; ++i) {
        nnz_row[i] = m.row_ptrs[i + 1] - m.row_ptrs[i];
        max_nnz = std::max(max_nnz, nnz_row[i]);
    }

    out.rm.resize(m.rows);
    std::iota(out.rm.begin(), out.rm.end(), std::size_t{0});
    std::stable_sort(out.rm.begin(), out.rm.end(),
                     [&](std::size_t a, std::size_t b) { return nnz_row[a] > nnz_row[b]; });

    // Read the left-aligned sorted rows column by column. Within aligned
    // column j, exactly the rows with more than j entries contribute, and the
    // sort puts those first, so each column is a prefix of the sorted rows.
    out.va.reserve(m.nnz());
    out.ci.reserve(m.nnz());
    out.cp.resize(max_nnz + 1);
    std::size_t w = 0;
    for (std::size_t j = 0; j < max_nnz; ++j) {
        out.cp[j] = w;
        for (std::size_t p = 0; p < m.rows; ++p) {
            const std::size_t i = out.rm[p];
            if (j < nnz_row[i]) {
                const std::size_t k = m.row_ptrs[i] + j;
                out.va.push_back(m.values[k]);
                out.ci.push_back(m.col_indices[k]);
                ++w;
            }
        }
    }
    out.cp[max_nnz] = w;
    return out;
}

std::vector<std::vector<std::int64_t>> cssc_expand(const CsscMatrix& m) {
    std::vector<std::vector<std::int64_t>> dense(m.rows, std::vector<std::int64_t>(m.cols, 0));
    for (std::size_t j = 0; j < m.aligned_cols(); ++j) {
        for (std::size_t idx = m.cp[j]; idx < m.cp[j + 1]; ++idx) {
            const std::size_t p = idx - m.cp[j];  // sorted row position
            dense[p][m.ci[idx]] = m.va[idx];
        }
    }
    return dense;
}

std::vector<std::string> validate_cssc(const CsscMatrix& m) {
    std::vector<std::string> violations;

    if (m.cp.empty()) {
        violations.push_back("CP is empty; expected at least [0]");
        return violations;
    }
    if (m.cp.front() != 0) {
        violations.push_back("CP[0] is " + std::to_string(m.cp.front()) + ", expected 0");
    }
    for (std::size_t j = 0; j + 1 < m.cp.size(); ++j) {
        if (m.cp[j + 1] < m.cp[j]) {
            violations.push_back("CP not non-decreasing at j=" + std::to_string(j + 1));
        }
    }
    bool cp_monotone = violations.empty();

    if (m.cp.back() != m.va.size()) {
        violations.push_back("CP end is " + std::to_string(m.cp.back()) + " but VA has " +
                             std::to_string(m.va.size()) + " entries");
    }
    if (m.va.size() != m.ci.size()) {
        violations.push_back("VA and CI lengths differ (" + std::to_string(m.va.size()) + " vs " +
                             std::to_string(m.ci.size()) + ")");
    }

    if (cp_monotone) {
        for (std::size_t j = 0; j + 2 < m.cp.size(); ++j) {
            if (m.column_height(j + 1) > m.column_height(j)) {
                violations.push_back("column heights not non-increasing at j=" +
                                     std::to_string(j + 1));
            }
        }
        if (m.aligned_cols() > 0 && m.column_height(0) > m.rows) {
            violations.push_back("column 0 height exceeds row count");
        }
    }

    for (std::size_t k = 0; k < m.ci.size(); ++k) {
        if (m.ci[k] >= m.cols) {
            violations.push_back("CI out of range at k=" + std::to_string(k) + " (" +
                                 std::to_string(m.ci[k]) + " >= " + std::to_string(m.cols) + ")");
        }
    }

    if (m.rm.size() != m.rows) {
        violations.push_back("RM length " + std::to_string(m.rm.size()) + " does not match " +
                             std::to_string(m.rows) + " rows");
    } else {
        std::vector<bool> seen(m.rows, false);
        bool perm = true;
        for (std::size_t p : m.rm) {
            if (p >= m.rows || seen[p]) {
                perm = false;
                break;
            }
            seen[p] = true;
        }
        if (!perm) {
            violations.push_back("RM not a permutation of [0, rows)");
        }
    }

    return violations;
}

}  // namespace spmv
