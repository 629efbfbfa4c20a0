// Copyright (c) 2026 The cssc-spmv Authors
// SPDX-License-Identifier: Apache-2.0

#include "spmv/cost.hpp"

namespace spmv {

double estimate_time_ms(const OpLedger& ledger, const CostTable& costs) {
    return static_cast<double>(ledger.n_enc) * costs.enc_ms +
           static_cast<double>(ledger.n_dec) * costs.dec_ms +
           static_cast<double>(ledger.n_add) * costs.add_ms +
           static_cast<double>(ledger.n_mult_cc) * costs.mult_cc_ms +
           static_cast<double>(ledger.n_mult_cp) * costs.mult_cp_ms +
           static_cast<double>(ledger.n_rot) * costs.rot_ms;
}

double estimate_cloud_time_ms(const OpLedger& ledger, const CostTable& costs) {
    return static_cast<double>(ledger.n_add) * costs.add_ms +
           static_cast<double>(ledger.n_mult_cc) * costs.mult_cc_ms +
           static_cast<double>(ledger.n_mult_cp) * costs.mult_cp_ms +
           static_cast<double>(ledger.n_rot) * costs.rot_ms;
}

double estimate_memory_mb(const OpLedger& ledger, const HeParams& params) {
    const std::uint64_t cts = ledger.n_enc + ledger.n_add + ledger.n_mult_cc + ledger.n_mult_cp +
                              ledger.n_rot;
    return static_cast<double>(cts) * params.ciphertext_size_mb;
}

}  // namespace spmv
