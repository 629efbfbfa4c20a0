// Copyright (c) 2026 The cssc-spmv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spmv/cost.hpp"
#include "spmv/he.hpp"
#include "spmv/protocol.hpp"
#include "spmv/sparse.hpp"

namespace spmv {

// Wrap-around diagonals of a square matrix: offsets lists every d with some
// non-zero at (i, (i + d) mod n), and vectors[k][i] is that entry (zero where
// the diagonal is empty at row i).
struct DiagPlan {
    std::size_t n = 0;
    std::vector<std::size_t> offsets;
    std::vector<std::vector<std::int64_t>> vectors;
};

// Throws NonSquareError for non-square input.
DiagPlan extract_diagonals(const CsrMatrix& m);

// Classic diagonal-method baseline: encrypt one ciphertext per non-empty
// wrap-around diagonal, multiply each by the vector rotated to that offset,
// and accumulate. Costs one ct*ct multiply, one rotation and one addition per
// non-empty diagonal, against one vector ciphertext.
//
// The vector is packed twice (v || v) so rotations wrap within the logical
// length n; that needs 2n <= slot_count, or n == slot_count where the wrap is
// the natural one. Sizes in between are rejected.
SpmvResult diag_spmv(const HeBackend& be, const CsrMatrix& m, std::span<const std::int64_t> v,
                     PartyRole key_holder = PartyRole::ClientA);

// Side-by-side ledger comparison under a shared cost table; ratio is
// baseline time over ours.
struct ComparisonReport {
    OpLedger ours;
    OpLedger baseline;
    double ours_ms = 0.0;
    double baseline_ms = 0.0;
    double time_ratio = 0.0;
};

ComparisonReport compare_ledgers(const OpLedger& ours, const OpLedger& baseline,
                                 const CostTable& costs = {});

}  // namespace spmv
