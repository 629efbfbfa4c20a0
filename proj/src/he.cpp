// Copyright (c) 2026 The cssc-spmv Authors
// SPDX-License-Identifier: Apache-2.0

#include "spmv/he.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>

namespace spmv {

namespace {

std::atomic<std::uint64_t> g_next_ct_id{1};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t t) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % t);
}

}  // namespace

void HeParams::validate() const {
    if (slot_count == 0) {
        throw std::invalid_argument("slot_count must be positive");
    }
    if (plaintext_modulus < 2) {
        throw std::invalid_argument("plaintext_modulus must be at least 2");
    }
    if (ciphertext_size_mb <= 0.0) {
        throw std::invalid_argument("ciphertext_size_mb must be positive");
    }
    if (noise.initial_budget_bits <= 0) {
        throw std::invalid_argument("initial noise budget must be positive");
    }
    if (noise.cost_ct_ct_mult_bits < 0 || noise.cost_ct_pt_mult_bits < 0 ||
        noise.cost_add_bits < 0 || noise.cost_rot_bits < 0) {
        throw std::invalid_argument("noise costs must be non-negative");
    }
}

std::int64_t to_signed(std::uint64_t residue, std::uint64_t modulus) {
    if (residue <= modulus / 2) {
        return static_cast<std::int64_t>(residue);
    }
    return static_cast<std::int64_t>(residue) - static_cast<std::int64_t>(modulus);
}

std::uint64_t to_residue(std::int64_t value, std::uint64_t modulus) {
    auto m = static_cast<std::int64_t>(modulus);
    std::int64_t r = value % m;
    if (r < 0) {
        r += m;
    }
    return static_cast<std::uint64_t>(r);
}

SimBackend::SimBackend(HeParams params) : params_(params) { params_.validate(); }

std::uint64_t SimBackend::fresh_id() const { return g_next_ct_id.fetch_add(1); }

int SimBackend::lowered_budget(int budget, int cost) const { return std::max(0, budget - cost); }

Plaintext SimBackend::encode(std::span<const std::int64_t> values) const {
    if (values.size() > params_.slot_count) {
        throw OverLengthError("encode: " + std::to_string(values.size()) + " values exceed " +
                              std::to_string(params_.slot_count) + " slots");
    }
    SlotVector slots(params_.slot_count, 0);
    for (std::size_t i = 0; i < values.size(); ++i) {
        slots[i] = to_residue(values[i], params_.plaintext_modulus);
    }
    return Plaintext{std::move(slots)};
}

Ciphertext SimBackend::encrypt(const Plaintext& pt, OpLedger& ledger) const {
    if (pt.slots.size() != params_.slot_count) {
        throw DimensionMismatchError("encrypt: plaintext slot count does not match parameters");
    }
    ledger.n_enc += 1;
    return Ciphertext{pt.slots, params_.noise.initial_budget_bits, fresh_id()};
}

SlotVector SimBackend::decrypt(const Ciphertext& ct, OpLedger& ledger) const {
    if (ct.noise_budget_bits <= 0) {
        throw NoiseExhaustedError("decrypt: noise budget exhausted (ciphertext id " +
                                  std::to_string(ct.id) + ")");
    }
    ledger.n_dec += 1;
    return ct.payload;
}

Ciphertext SimBackend::add(const Ciphertext& a, const Ciphertext& b, OpLedger& ledger) const {
    if (a.payload.size() != b.payload.size()) {
        throw DimensionMismatchError("add: ciphertext slot counts differ");
    }
    const std::uint64_t t = params_.plaintext_modulus;
    SlotVector out(a.payload.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = (a.payload[i] + b.payload[i]) % t;
    }
    ledger.n_add += 1;
    int budget = lowered_budget(std::min(a.noise_budget_bits, b.noise_budget_bits),
                                params_.noise.cost_add_bits);
    return Ciphertext{std::move(out), budget, fresh_id()};
}

Ciphertext SimBackend::multiply(const Ciphertext& a, const Ciphertext& b, OpLedger& ledger) const {
    if (a.payload.size() != b.payload.size()) {
        throw DimensionMismatchError("multiply: ciphertext slot counts differ");
    }
    const std::uint64_t t = params_.plaintext_modulus;
    SlotVector out(a.payload.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = mul_mod(a.payload[i], b.payload[i], t);
    }
    ledger.n_mult_cc += 1;
    int budget = lowered_budget(std::min(a.noise_budget_bits, b.noise_budget_bits),
                                params_.noise.cost_ct_ct_mult_bits);
    return Ciphertext{std::move(out), budget, fresh_id()};
}

Ciphertext SimBackend::multiply_plain(const Ciphertext& a, const Plaintext& b,
                                      OpLedger& ledger) const {
    if (a.payload.size() != b.slots.size()) {
        throw DimensionMismatchError("multiply_plain: slot counts differ");
    }
    const std::uint64_t t = params_.plaintext_modulus;
    SlotVector out(a.payload.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = mul_mod(a.payload[i], b.slots[i], t);
    }
    ledger.n_mult_cp += 1;
    int budget = lowered_budget(a.noise_budget_bits, params_.noise.cost_ct_pt_mult_bits);
    return Ciphertext{std::move(out), budget, fresh_id()};
}

Ciphertext SimBackend::rotate(const Ciphertext& a, std::int64_t k, OpLedger& ledger) const {
    const auto n = static_cast<std::int64_t>(params_.slot_count);
    std::int64_t shift = ((k % n) + n) % n;
    SlotVector out(a.payload.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = a.payload[(i + static_cast<std::size_t>(shift)) % params_.slot_count];
    }
    ledger.n_rot += 1;
    int budget = lowered_budget(a.noise_budget_bits, params_.noise.cost_rot_bits);
    return Ciphertext{std::move(out), budget, fresh_id()};
}

Ciphertext SimBackend::zero_ciphertext() const {
    return Ciphertext{SlotVector(params_.slot_count, 0), params_.noise.initial_budget_bits,
                      fresh_id()};
}

}  // namespace spmv
