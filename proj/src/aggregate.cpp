// Copyright (c) 2026 The cssc-spmv Authors
// SPDX-License-Identifier: Apache-2.0

#include "spmv/aggregate.hpp"

#include <bit>
#include <map>
#include <stdexcept>

namespace spmv {

int num_bits(std::size_t c) {
    if (c == 0) {
        throw std::invalid_argument("num_bits: c must be positive");
    }
    return std::bit_width(c);
}

std::vector<RotStep> rotation_schedule(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("rotation_schedule: rows and cols must be positive");
    }
    std::vector<RotStep> steps;
    std::size_t e = 1;  // blocks summed into the accumulator so far
    for (int j = num_bits(cols) - 2; j >= 0; --j) {
        steps.push_back({e * rows, true});
        e *= 2;
        if ((cols >> static_cast<unsigned>(j)) & 1u) {
            steps.push_back({e * rows, false});
            e += 1;
        }
    }
    return steps;
}

Ciphertext intra_chunk_sum(const HeBackend& be, const Ciphertext& ct, std::size_t rows,
                           std::size_t cols, OpLedger& ledger) {
    if (rows * cols > be.params().slot_count) {
        throw OverLengthError("intra_chunk_sum: chunk exceeds slot count");
    }
    Ciphertext acc = ct;
    for (const RotStep& step : rotation_schedule(rows, cols)) {
        const Ciphertext& source = step.from_accumulator ? acc : ct;
        Ciphertext rotated = be.rotate(source, static_cast<std::int64_t>(step.offset), ledger);
        acc = be.add(acc, rotated, ledger);
    }
    return acc;
}

Plaintext mask_plaintext(const HeBackend& be, const MaskSpec& spec) {
    std::vector<std::int64_t> ones(spec.ones_len, 1);
    return be.encode(ones);
}

Ciphertext inter_chunk_sum(const HeBackend& be, std::span<const Ciphertext> parts,
                           std::span<const std::size_t> r_list, OpLedger& ledger) {
    if (parts.size() != r_list.size()) {
        throw DimensionMismatchError("inter_chunk_sum: parts and r_list lengths differ");
    }
    if (parts.empty()) {
        throw std::invalid_argument("inter_chunk_sum: nothing to aggregate");
    }
    std::map<std::size_t, Plaintext> mask_cache;
    Ciphertext acc = be.zero_ciphertext();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        auto it = mask_cache.find(r_list[i]);
        if (it == mask_cache.end()) {
            it = mask_cache.emplace(r_list[i], mask_plaintext(be, {r_list[i]})).first;
        }
        Ciphertext masked = be.multiply_plain(parts[i], it->second, ledger);
        acc = be.add(acc, masked, ledger);
    }
    return acc;
}

}  // namespace spmv
