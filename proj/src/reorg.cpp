// Copyright (c) 2026 The cssc-spmv Authors
// SPDX-License-Identifier: Apache-2.0

#include "spmv/reorg.hpp"

#include <string>

namespace spmv {

ReorgVector reorg_vector(std::span<const std::int64_t> v, const ChunkSet& chunks) {
    if (v.size() != chunks.cols) {
        throw DimensionMismatchError("reorg_vector: vector length " + std::to_string(v.size()) +
                                     " does not match matrix column count " +
                                     std::to_string(chunks.cols));
    }
    ReorgVector out;
    out.segments.reserve(chunks.n_ct());
    for (const Chunk& chunk : chunks.chunks) {
        std::vector<std::int64_t> segment(chunk.colidx_flat.size(), 0);
        for (std::size_t j = 0; j < chunk.colidx_flat.size(); ++j) {
            const std::int64_t idx = chunk.colidx_flat[j];
            if (idx < 0) {
                continue;  // padding slot
            }
            if (static_cast<std::size_t>(idx) >= v.size()) {
                throw IndexOutOfRangeError("reorg_vector: column index " + std::to_string(idx) +
                                           " >= vector length " + std::to_string(v.size()));
            }
            segment[j] = v[static_cast<std::size_t>(idx)];
        }
        out.segments.push_back(std::move(segment));
    }
    return out;
}

}  // namespace spmv
