// Copyright (c) 2026 The cssc-spmv Authors
// SPDX-License-Identifier: Apache-2.0

#include "spmv/diagonal.hpp"

#include <string>

namespace spmv {

DiagPlan extract_diagonals(const CsrMatrix& m) {
    if (m.rows != m.cols) {
        throw NonSquareError("extract_diagonals: matrix is " + std::to_string(m.rows) + "x" +
                             std::to_string(m.cols) + "; the diagonal method needs square input");
    }
    DiagPlan plan;
    plan.n = m.rows;
    std::vector<std::vector<std::int64_t>> by_offset(m.rows);
    std::vector<bool> used(m.rows, false);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t k = m.row_ptrs[i]; k < m.row_ptrs[i + 1]; ++k) {
            const std::size_t j = m.col_indices[k];
            const std::size_t d = (j + m.rows - i) % m.rows;
            if (!used[d]) {
                used[d] = true;
                by_offset[d].assign(m.rows, 0);
            }
            by_offset[d][i] = m.values[k];
        }
    }
    for (std::size_t d = 0; d < m.rows; ++d) {
        if (used[d]) {
            plan.offsets.push_back(d);
            plan.vectors.push_back(std::move(by_offset[d]));
        }
    }
    return plan;
}

SpmvResult diag_spmv(const HeBackend& be, const CsrMatrix& m, std::span<const std::int64_t> v,
                     PartyRole key_holder) {
    const HeParams& params = be.params();
    if (m.cols != v.size()) {
        throw DimensionMismatchError("diag_spmv: vector length does not match matrix columns");
    }
    DiagPlan plan = extract_diagonals(m);  // throws NonSquareError
    const std::size_t n = plan.n;
    if (n > params.slot_count) {
        throw OverLengthError("diag_spmv: matrix order exceeds slot count");
    }
    const bool duplicated = 2 * n <= params.slot_count;
    if (!duplicated && n != params.slot_count) {
        throw OverLengthError(
            "diag_spmv: order " + std::to_string(n) + " needs the duplicated vector layout, which "
            "requires 2n <= slot_count (or n == slot_count)");
    }

    SpmvResult res;
    res.message_ledger.key_holder = key_holder;
    OpLedger& ops = res.op_ledger;
    MessageLedger& msgs = res.message_ledger;
    const std::size_t n_diag = plan.offsets.size();
    res.n_ct = n_diag;

    // Client A: one ciphertext per non-empty diagonal.
    std::vector<Ciphertext> ct_diags;
    ct_diags.reserve(n_diag);
    for (const auto& diag : plan.vectors) {
        ct_diags.push_back(be.encrypt(be.encode(diag), ops));
    }
    msgs.append({PartyRole::ClientA, PartyRole::Cloud, MessageKind::CiphertextBatch,
                 ciphertext_batch_bytes(params, n_diag), n_diag});

    // Client B: the vector, doubled when it fits so rotations wrap mod n.
    std::vector<std::int64_t> packed(v.begin(), v.end());
    if (duplicated) {
        packed.insert(packed.end(), v.begin(), v.end());
    }
    Ciphertext ct_v = be.encrypt(be.encode(packed), ops);
    msgs.append({PartyRole::ClientB, PartyRole::Cloud, MessageKind::CiphertextBatch,
                 ciphertext_batch_bytes(params, 1), 1});

    // Cloud: rotate, multiply, accumulate per diagonal.
    if (n_diag > 0) {
        Ciphertext acc = be.zero_ciphertext();
        for (std::size_t k = 0; k < n_diag; ++k) {
            Ciphertext rotated =
                be.rotate(ct_v, static_cast<std::int64_t>(plan.offsets[k]), ops);
            Ciphertext product = be.multiply(ct_diags[k], rotated, ops);
            acc = be.add(acc, product, ops);
        }
        msgs.append({PartyRole::Cloud, key_holder, MessageKind::ResultCiphertext,
                     ciphertext_batch_bytes(params, 1), 1});
        SlotVector slots = be.decrypt(acc, ops);
        res.noise_budget_remaining_bits = acc.noise_budget_bits;
        res.values.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            res.values[i] = to_signed(slots[i], params.plaintext_modulus);
        }
    } else {
        res.noise_budget_remaining_bits = params.noise.initial_budget_bits;
        res.values.assign(n, 0);
    }
    return res;
}

ComparisonReport compare_ledgers(const OpLedger& ours, const OpLedger& baseline,
                                 const CostTable& costs) {
    ComparisonReport report;
    report.ours = ours;
    report.baseline = baseline;
    report.ours_ms = estimate_time_ms(ours, costs);
    report.baseline_ms = estimate_time_ms(baseline, costs);
    report.time_ratio = report.ours_ms > 0.0 ? report.baseline_ms / report.ours_ms : 0.0;
    return report;
}

}  // namespace spmv
