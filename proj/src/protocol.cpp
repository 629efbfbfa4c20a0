// Copyright (c) 2026 The cssc-spmv Authors
// SPDX-License-Identifier: Apache-2.0

#include "spmv/protocol.hpp"

#include <algorithm>
#include <cmath>

namespace spmv {

std::string to_string(PartyRole p) {
    switch (p) {
        case PartyRole::ClientA: return "A";
        case PartyRole::ClientB: return "B";
        case PartyRole::Cloud: return "Cloud";
    }
    return "?";
}

std::string to_string(MessageKind k) {
    switch (k) {
        case MessageKind::CiphertextBatch: return "ciphertext_batch";
        case MessageKind::ColumnIndexPlain: return "column_index_plain";
        case MessageKind::ChunkShapeMeta: return "chunk_shape_meta";
        case MessageKind::ResultCiphertext: return "result_ciphertext";
        case MessageKind::PlaintextValues: return "plaintext_values";
    }
    return "?";
}

std::uint64_t MessageLedger::bytes_between(PartyRole from, PartyRole to) const {
    std::uint64_t total = 0;
    for (const Message& m : messages) {
        if (m.from == from && m.to == to) {
            total += m.payload_bytes;
        }
    }
    return total;
}

std::size_t MessageLedger::ciphertexts_between(PartyRole from, PartyRole to) const {
    std::size_t total = 0;
    for (const Message& m : messages) {
        if (m.from == from && m.to == to) {
            total += m.ciphertext_count;
        }
    }
    return total;
}

std::uint64_t ciphertext_batch_bytes(const HeParams& params, std::size_t count) {
    return static_cast<std::uint64_t>(
        std::llround(static_cast<double>(count) * params.ciphertext_size_mb * 1048576.0));
}

namespace {

// Column indices travel as 4-byte integers with a per-chunk (h, k) header.
std::uint64_t column_index_bytes(const ChunkSet& chunks) {
    std::uint64_t bytes = 4;  // chunk count
    for (const Chunk& c : chunks.chunks) {
        bytes += 8 + 4 * static_cast<std::uint64_t>(c.colidx_flat.size());
    }
    return bytes;
}

// Shape metadata is the (r_list, c_list) pair as 4-byte integers.
std::uint64_t shape_meta_bytes(std::size_t n_ct) {
    return 4 + 8 * static_cast<std::uint64_t>(n_ct);
}

}  // namespace

SpmvResult spmv(const HeBackend& be, const CsrMatrix& m, std::span<const std::int64_t> v,
                std::size_t chunk_size, PartyRole key_holder) {
    const HeParams& params = be.params();
    if (m.cols != v.size()) {
        throw DimensionMismatchError("spmv: vector length " + std::to_string(v.size()) +
                                     " does not match matrix column count " +
                                     std::to_string(m.cols));
    }
    if (chunk_size == 0 || chunk_size > params.slot_count) {
        throw std::invalid_argument("spmv: chunk_size must be in [1, slot_count]");
    }

    SpmvResult res;
    res.message_ledger.key_holder = key_holder;
    OpLedger& ops = res.op_ledger;
    MessageLedger& msgs = res.message_ledger;

    // Client A: pack the matrix and encrypt the values. The cloud sees only
    // ciphertexts plus chunk shapes; B sees the column indices it needs to
    // line the vector up.
    const CsscMatrix cssc = csr_to_cssc(m);
    const ChunkSet chunks = generate_chunks(cssc, chunk_size);
    const std::size_t n_ct = chunks.n_ct();
    res.n_ct = n_ct;

    std::vector<Ciphertext> ct_values;
    ct_values.reserve(n_ct);
    for (const Chunk& chunk : chunks.chunks) {
        ct_values.push_back(be.encrypt(be.encode(chunk.value_flat), ops));
    }
    msgs.append({PartyRole::ClientA, PartyRole::Cloud, MessageKind::CiphertextBatch,
                 ciphertext_batch_bytes(params, n_ct), n_ct});
    msgs.append({PartyRole::ClientA, PartyRole::ClientB, MessageKind::ColumnIndexPlain,
                 column_index_bytes(chunks), 0});
    msgs.append({PartyRole::ClientA, PartyRole::Cloud, MessageKind::ChunkShapeMeta,
                 shape_meta_bytes(n_ct), 0});

    // Client B: gather the vector per chunk and encrypt each segment.
    const ReorgVector reorg = reorg_vector(v, chunks);
    std::vector<Ciphertext> ct_vectors;
    ct_vectors.reserve(n_ct);
    for (const auto& segment : reorg.segments) {
        ct_vectors.push_back(be.encrypt(be.encode(segment), ops));
    }
    msgs.append({PartyRole::ClientB, PartyRole::Cloud, MessageKind::CiphertextBatch,
                 ciphertext_batch_bytes(params, n_ct), n_ct});

    // Cloud: elementwise products, then the two-level aggregation.
    SlotVector result_slots(params.slot_count, 0);
    if (n_ct > 0) {
        std::vector<Ciphertext> parts;
        parts.reserve(n_ct);
        for (std::size_t i = 0; i < n_ct; ++i) {
            Ciphertext product = be.multiply(ct_values[i], ct_vectors[i], ops);
            parts.push_back(
                intra_chunk_sum(be, product, chunks.r_list[i], chunks.c_list[i], ops));
        }
        Ciphertext ct_res = inter_chunk_sum(be, parts, chunks.r_list, ops);
        msgs.append({PartyRole::Cloud, key_holder, MessageKind::ResultCiphertext,
                     ciphertext_batch_bytes(params, 1), 1});

        // Key holder: decrypt and undo the row sort.
        result_slots = be.decrypt(ct_res, ops);
        res.noise_budget_remaining_bits = ct_res.noise_budget_bits;
    } else {
        res.noise_budget_remaining_bits = params.noise.initial_budget_bits;
    }

    res.values.assign(m.rows, 0);
    for (std::size_t idx = 0; idx < m.rows; ++idx) {
        // Sorted rows past the slot count are all-zero rows: every chunk sum
        // masks to the tallest column height, which fits the slot count.
        const std::int64_t value =
            idx < result_slots.size()
                ? to_signed(result_slots[idx], params.plaintext_modulus)
                : 0;
        res.values[chunks.row_map[idx]] = value;
    }
    return res;
}

SpmvResult spmv_partitioned(const HeBackend& be, const CsrMatrix& m,
                            std::span<const std::int64_t> v, std::size_t chunk_size,
                            PartyRole key_holder) {
    if (m.cols != v.size()) {
        throw DimensionMismatchError("spmv_partitioned: vector length does not match columns");
    }
    SpmvResult merged;
    merged.message_ledger.key_holder = key_holder;
    merged.noise_budget_remaining_bits = be.params().noise.initial_budget_bits;
    for (const CsrMatrix& slice : partition_rows(m, chunk_size)) {
        SpmvResult part = spmv(be, slice, v, chunk_size, key_holder);
        merged.values.insert(merged.values.end(), part.values.begin(), part.values.end());
        merged.op_ledger += part.op_ledger;
        merged.message_ledger.messages.insert(merged.message_ledger.messages.end(),
                                              part.message_ledger.messages.begin(),
                                              part.message_ledger.messages.end());
        merged.n_ct += part.n_ct;
        merged.noise_budget_remaining_bits =
            std::min(merged.noise_budget_remaining_bits, part.noise_budget_remaining_bits);
    }
    return merged;
}

AuditReport audit_leakage(const MessageLedger& ledger) {
    AuditReport report;
    for (std::size_t i = 0; i < ledger.messages.size(); ++i) {
        const Message& m = ledger.messages[i];
        const std::string where = "message #" + std::to_string(i) + " (" + to_string(m.from) +
                                  " -> " + to_string(m.to) + ", " + to_string(m.kind) + ")";
        if (m.to == PartyRole::Cloud && m.kind != MessageKind::CiphertextBatch &&
            m.kind != MessageKind::ChunkShapeMeta) {
            report.violations.push_back(
                where + ": the cloud may receive only ciphertext batches and chunk-shape metadata");
        }
        if (m.kind == MessageKind::ColumnIndexPlain &&
            !(m.from == PartyRole::ClientA && m.to == PartyRole::ClientB)) {
            report.violations.push_back(where +
                                        ": plaintext column indices may flow only from A to B");
        }
        if (m.kind == MessageKind::PlaintextValues && m.to != ledger.key_holder) {
            report.violations.push_back(where + ": plaintext values delivered to " +
                                        to_string(m.to) + ", but the key holder is " +
                                        to_string(ledger.key_holder));
        }
    }
    report.passed = report.violations.empty();
    return report;
}

}  // namespace spmv
