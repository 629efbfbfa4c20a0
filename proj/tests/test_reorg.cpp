// Copyright (c) 2026 The cssc-spmv Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "spmv/reorg.hpp"
#include "spmv/synthetic.hpp"

using namespace spmv;

namespace {

ChunkSet single_chunk(std::vector<std::int64_t> colidx, std::size_t rows, std::size_t cols,
                      std::size_t vector_len) {
    Chunk chunk;
    chunk.rows = rows;
    chunk.cols = cols;
    chunk.colidx_flat = std::move(colidx);
    chunk.value_flat.assign(chunk.colidx_flat.size(), 1);
    ChunkSet set;
    set.rows = rows;
    set.cols = vector_len;
    set.r_list = {rows};
    set.c_list = {cols};
    set.chunks.push_back(std::move(chunk));
    return set;
}

}  // namespace

TEST_CASE("segments gather vector entries by column index") {
    // Slot 3 names column 1, so it picks v[1].
    ChunkSet set = single_chunk({0, 2, 1, 1, 3, -1}, 3, 2, 4);
    const std::vector<std::int64_t> v{10, 20, 30, 40};
    ReorgVector reorg = reorg_vector(v, set);
    REQUIRE(reorg.segments.size() == 1);
    CHECK(reorg.segments[0] == std::vector<std::int64_t>{10, 30, 20, 20, 40, 0});
}

TEST_CASE("padding slots always read zero even when v has no zeros") {
    ChunkSet set = single_chunk({1, -1, -1, 0}, 2, 2, 2);
    const std::vector<std::int64_t> v{7, 9};
    ReorgVector reorg = reorg_vector(v, set);
    CHECK(reorg.segments[0] == std::vector<std::int64_t>{9, 0, 0, 7});
}

TEST_CASE("an identity gather returns the vector itself") {
    ChunkSet set = single_chunk({0, 1, 2, 3}, 4, 1, 4);
    const std::vector<std::int64_t> v{4, 3, 2, 1};
    CHECK(reorg_vector(v, set).segments[0] == v);
}

TEST_CASE("out-of-range column indices are rejected") {
    ChunkSet set = single_chunk({0, 5}, 2, 1, 3);
    const std::vector<std::int64_t> v{1, 2, 3};
    CHECK_THROWS_AS(reorg_vector(v, set), IndexOutOfRangeError);

    ChunkSet ok = single_chunk({0}, 1, 1, 3);
    const std::vector<std::int64_t> short_v{1};
    CHECK_THROWS_AS(reorg_vector(short_v, ok), DimensionMismatchError);
}

TEST_CASE("segment lengths always match their chunk") {
    for (std::uint64_t seed = 600; seed < 640; ++seed) {
        const std::size_t rows = 2 + seed % 9;
        const std::size_t cols = 2 + (seed * 3) % 11;
        CsrMatrix m = random_sparse_csr(rows, cols, rows * cols / 3, seed);
        ChunkSet chunks = generate_chunks(csr_to_cssc(m), rows * 2);
        const auto v = random_vector(cols, seed);
        ReorgVector reorg = reorg_vector(v, chunks);
        REQUIRE(reorg.segments.size() == chunks.n_ct());
        for (std::size_t i = 0; i < chunks.n_ct(); ++i) {
            CHECK(reorg.segments[i].size() == chunks.chunks[i].value_flat.size());
            // Slot for slot: named column's entry, or zero on padding.
            for (std::size_t k = 0; k < reorg.segments[i].size(); ++k) {
                const std::int64_t idx = chunks.chunks[i].colidx_flat[k];
                CHECK(reorg.segments[i][k] == (idx >= 0 ? v[static_cast<std::size_t>(idx)] : 0));
            }
        }
    }
}
