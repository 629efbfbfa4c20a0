// Copyright (c) 2026 The cssc-spmv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "spmv/he.hpp"

namespace spmv {

// Per-operation wall-clock estimates in milliseconds. Defaults were measured
// single-threaded on a BFV backend at N = 8192; swap in your own numbers to
// retarget the estimates.
struct CostTable {
    double enc_ms = 5.501;
    double dec_ms = 2.570;
    double add_ms = 0.550;
    double mult_cc_ms = 20.874;
    double mult_cp_ms = 4.138;
    double rot_ms = 5.350;
};

// Weighted sum of ledger counts.
double estimate_time_ms(const OpLedger& ledger, const CostTable& costs = {});

// Same, restricted to the cloud-side operations (multiplies, rotations,
// additions); encryption and decryption happen at the clients.
double estimate_cloud_time_ms(const OpLedger& ledger, const CostTable& costs = {});

// Ciphertexts materialized over a run (every operation output plus every
// encryption) times the per-ciphertext size.
double estimate_memory_mb(const OpLedger& ledger, const HeParams& params);

}  // namespace spmv
