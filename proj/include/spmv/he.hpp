// Copyright (c) 2026 The cssc-spmv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spmv/errors.hpp"

namespace spmv {

// Slot-level view of a packed plaintext or decrypted ciphertext: one residue
// mod t per SIMD slot.
using SlotVector = std::vector<std::uint64_t>;

// Linear noise-budget model. Every operation subtracts a fixed per-kind cost
// from the budget, floored at zero; decryption requires a positive budget.
// The defaults are fitted to budget decay observed on a BFV backend at
// N = 8192, t = 65537, logQ = 200. Measured per-step deltas are not perfectly
// uniform (ct*ct steps cost 32-33 bits, ct*pt steps 25-26); the model uses the
// conservative upper value of each range.
struct NoiseModel {
    int initial_budget_bits = 146;
    int cost_ct_ct_mult_bits = 33;
    int cost_ct_pt_mult_bits = 26;
    int cost_add_bits = 0;
    int cost_rot_bits = 0;
};

// Scheme profile for the slot-vector simulator. ciphertext_size_mb feeds the
// communication and memory estimates only; no payload of that size exists in
// the simulator.
struct HeParams {
    std::size_t slot_count = 8192;
    std::uint64_t plaintext_modulus = 65537;
    double ciphertext_size_mb = 0.52;
    NoiseModel noise;

    // Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

struct Plaintext {
    SlotVector slots;
};

// Immutable ciphertext handle. The payload is simulator-internal: a real
// backend would carry an opaque blob instead.
struct Ciphertext {
    SlotVector payload;
    int noise_budget_bits = 0;
    std::uint64_t id = 0;
};

// Per-run operation counters. Monotone while a run is live; confined to a
// single run, so plain integers suffice.
struct OpLedger {
    std::uint64_t n_mult_cc = 0;
    std::uint64_t n_mult_cp = 0;
    std::uint64_t n_rot = 0;
    std::uint64_t n_add = 0;
    std::uint64_t n_enc = 0;
    std::uint64_t n_dec = 0;

    void reset() { *this = OpLedger{}; }

    OpLedger& operator+=(const OpLedger& other) {
        n_mult_cc += other.n_mult_cc;
        n_mult_cp += other.n_mult_cp;
        n_rot += other.n_rot;
        n_add += other.n_add;
        n_enc += other.n_enc;
        n_dec += other.n_dec;
        return *this;
    }

    bool operator==(const OpLedger&) const = default;
};

// Backend contract for the protocol layers. The shipped implementation is the
// deterministic slot-vector simulator below; the interface is narrow enough
// that an adapter over a lattice library (e.g. a BFV context) can slot in
// without touching callers. No such adapter ships here.
class HeBackend {
public:
    virtual ~HeBackend() = default;

    virtual const HeParams& params() const = 0;

    // Packs integers into slots, reducing mod t (negatives wrap) and
    // zero-padding to slot_count. Throws OverLengthError when the input is
    // longer than slot_count.
    virtual Plaintext encode(std::span<const std::int64_t> values) const = 0;

    virtual Ciphertext encrypt(const Plaintext& pt, OpLedger& ledger) const = 0;

    // Throws NoiseExhaustedError when the budget has reached zero.
    virtual SlotVector decrypt(const Ciphertext& ct, OpLedger& ledger) const = 0;

    virtual Ciphertext add(const Ciphertext& a, const Ciphertext& b, OpLedger& ledger) const = 0;

    virtual Ciphertext multiply(const Ciphertext& a, const Ciphertext& b, OpLedger& ledger) const = 0;

    virtual Ciphertext multiply_plain(const Ciphertext& a, const Plaintext& b, OpLedger& ledger) const = 0;

    // Cyclic left rotation by k slots; negative k rotates right. k is reduced
    // mod slot_count.
    virtual Ciphertext rotate(const Ciphertext& a, std::int64_t k, OpLedger& ledger) const = 0;

    // Transparent all-zero ciphertext used as an accumulator seed. Anyone can
    // form one without the secret key, so it is not ledgered as an encryption.
    virtual Ciphertext zero_ciphertext() const = 0;
};

// Deterministic simulator: slotwise arithmetic mod t plus the linear noise
// model. Operation latency is not simulated; see cost.hpp for estimates.
class SimBackend final : public HeBackend {
public:
    explicit SimBackend(HeParams params);

    const HeParams& params() const override { return params_; }

    Plaintext encode(std::span<const std::int64_t> values) const override;
    Ciphertext encrypt(const Plaintext& pt, OpLedger& ledger) const override;
    SlotVector decrypt(const Ciphertext& ct, OpLedger& ledger) const override;
    Ciphertext add(const Ciphertext& a, const Ciphertext& b, OpLedger& ledger) const override;
    Ciphertext multiply(const Ciphertext& a, const Ciphertext& b, OpLedger& ledger) const override;
    Ciphertext multiply_plain(const Ciphertext& a, const Plaintext& b, OpLedger& ledger) const override;
    Ciphertext rotate(const Ciphertext& a, std::int64_t k, OpLedger& ledger) const override;
    Ciphertext zero_ciphertext() const override;

private:
    HeParams params_;

    std::uint64_t fresh_id() const;
    int lowered_budget(int budget, int cost) const;
};

// Centered representative of a residue: maps [0, t) onto [-(t-1)/2 .. t/2]
// so that encoded negatives read back as negatives.
std::int64_t to_signed(std::uint64_t residue, std::uint64_t modulus);

// Residue of a (possibly negative) integer mod t.
std::uint64_t to_residue(std::int64_t value, std::uint64_t modulus);

}  // namespace spmv
