// Copyright (c) 2026 The cssc-spmv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spmv/chunk.hpp"

namespace spmv {

// Vector segments mirroring a chunk set: segment i gathers the input vector
// entries named by chunk i's column indices, slot for slot, with 0 wherever
// the chunk holds padding. Multiplying chunk i's ciphertext by segment i's
// then aligns every matrix entry with its vector operand.
struct ReorgVector {
    std::vector<std::vector<std::int64_t>> segments;
};

// Throws IndexOutOfRangeError when a column index is outside the vector, and
// DimensionMismatchError when the vector length differs from the chunk set's
// column count.
ReorgVector reorg_vector(std::span<const std::int64_t> v, const ChunkSet& chunks);

}  // namespace spmv
