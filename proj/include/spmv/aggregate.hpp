// Copyright (c) 2026 The cssc-spmv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spmv/he.hpp"

namespace spmv {

// Bit length of c (numBits(1) = 1, numBits(5) = 3).
int num_bits(std::size_t c);

// One rotate-and-add step of the chunk sum. from_accumulator selects the
// operand: the running partial sum (doubling step) or the untouched input
// (odd-bit step).
struct RotStep {
    std::size_t offset = 0;
    bool from_accumulator = true;

    bool operator==(const RotStep&) const = default;
};

// Rotation plan that folds `cols` blocks of `rows` slots into the first
// block, binary-decomposition style: repeatedly double the number of summed
// blocks by rotating the accumulator, and fold one extra block in (a rotation
// of the original input by the post-doubling offset) for every set bit of
// `cols` below the top one. All offsets are multiples of `rows`; the step
// count is numBits(cols) + popcount(cols) - 2.
std::vector<RotStep> rotation_schedule(std::size_t rows, std::size_t cols);

// Sums the `cols` column blocks of a chunk product ciphertext into its first
// `rows` slots by replaying rotation_schedule. Slots at and beyond `rows`
// hold partial garbage afterwards; mask before mixing results. One addition
// per rotation.
Ciphertext intra_chunk_sum(const HeBackend& be, const Ciphertext& ct, std::size_t rows,
                           std::size_t cols, OpLedger& ledger);

// Prefix-of-ones selector: ones_len ones, zero elsewhere.
struct MaskSpec {
    std::size_t ones_len = 0;
};

Plaintext mask_plaintext(const HeBackend& be, const MaskSpec& spec);

// Stacks per-chunk sums into one result ciphertext: each part is cut down to
// its valid first r_list[i] slots with a plaintext mask (one ct*pt multiply)
// and added onto a transparent zero accumulator (one addition per part).
// Masks are encoded once per distinct r_list value.
Ciphertext inter_chunk_sum(const HeBackend& be, std::span<const Ciphertext> parts,
                           std::span<const std::size_t> r_list, OpLedger& ledger);

}  // namespace spmv
