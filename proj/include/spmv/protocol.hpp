// Copyright (c) 2026 The cssc-spmv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "spmv/aggregate.hpp"
#include "spmv/chunk.hpp"
#include "spmv/he.hpp"
#include "spmv/reorg.hpp"
#include "spmv/sparse.hpp"

namespace spmv {

// Parties of the outsourced multiplication: A holds the matrix, B holds the
// vector, the Cloud computes. A and B are semi-honest and do not collude with
// the Cloud.
enum class PartyRole { ClientA, ClientB, Cloud };

// What a transcript message carries. PlaintextValues never occurs in a
// protocol run; it exists so audits can describe (and reject) transcripts
// where numeric data travels unencrypted.
enum class MessageKind {
    CiphertextBatch,
    ColumnIndexPlain,
    ChunkShapeMeta,
    ResultCiphertext,
    PlaintextValues,
};

std::string to_string(PartyRole p);
std::string to_string(MessageKind k);

struct Message {
    PartyRole from = PartyRole::ClientA;
    PartyRole to = PartyRole::Cloud;
    MessageKind kind = MessageKind::CiphertextBatch;
    std::uint64_t payload_bytes = 0;
    std::size_t ciphertext_count = 0;  // 0 for plaintext messages
};

// Append-only record of everything sent during a run, plus who may decrypt.
struct MessageLedger {
    PartyRole key_holder = PartyRole::ClientA;
    std::vector<Message> messages;

    void append(Message m) { messages.push_back(m); }

    std::uint64_t bytes_between(PartyRole from, PartyRole to) const;
    std::size_t ciphertexts_between(PartyRole from, PartyRole to) const;
};

// Serialized size of a batch of ciphertexts, from the profile's per-ct size.
std::uint64_t ciphertext_batch_bytes(const HeParams& params, std::size_t count);

struct SpmvResult {
    std::vector<std::int64_t> values;  // original row order, centered mod t
    OpLedger op_ledger;
    MessageLedger message_ledger;
    std::size_t n_ct = 0;
    int noise_budget_remaining_bits = 0;
};

// One protocol round:
//   A: convert + chunk the matrix, encrypt chunk values -> Cloud; column
//      indices in plaintext -> B; chunk shapes -> Cloud.
//   B: reorganize + encrypt the vector segments -> Cloud.
//   Cloud: one ct*ct multiply per chunk, rotate-and-add aggregation, result
//      ciphertext -> key holder.
//   Key holder: decrypt and undo the row sort.
// chunk_size bounds the packed slots per ciphertext and must not exceed
// params().slot_count. Throws ColumnTooTallError when an aligned column
// exceeds chunk_size (see spmv_partitioned) and DimensionMismatchError when
// the vector length is not the matrix column count.
SpmvResult spmv(const HeBackend& be, const CsrMatrix& m, std::span<const std::int64_t> v,
                std::size_t chunk_size, PartyRole key_holder = PartyRole::ClientA);

// Row-partitioned variant for matrices whose aligned columns outgrow a single
// chunk: horizontal slices of at most chunk_size rows run the protocol
// independently and their outputs are concatenated; ledgers merge. Equals
// spmv whenever the matrix fits one slice.
SpmvResult spmv_partitioned(const HeBackend& be, const CsrMatrix& m,
                            std::span<const std::int64_t> v, std::size_t chunk_size,
                            PartyRole key_holder = PartyRole::ClientA);

struct AuditReport {
    bool passed = true;
    std::vector<std::string> violations;
};

// Checks a transcript against the protocol's leakage budget:
//   (a) the Cloud receives only ciphertext batches and chunk-shape metadata,
//   (b) plaintext column indices flow from A to B and nowhere else,
//   (c) plaintext values reach no party but the key holder.
AuditReport audit_leakage(const MessageLedger& ledger);

}  // namespace spmv
