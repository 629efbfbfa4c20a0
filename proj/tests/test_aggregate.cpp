// Copyright (c) 2026 The cssc-spmv Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <bit>

#include "spmv/aggregate.hpp"
#include "spmv/synthetic.hpp"
#include "test_util.hpp"

using namespace spmv;

namespace {

HeParams params_with_slots(std::size_t slots, std::uint64_t t = 65537) {
    HeParams p;
    p.slot_count = slots;
    p.plaintext_modulus = t;
    return p;
}

std::vector<std::size_t> offsets_of(const std::vector<RotStep>& steps) {
    std::vector<std::size_t> out;
    for (const RotStep& s : steps) {
        out.push_back(s.offset);
    }
    return out;
}

}  // namespace

// ============================================================
// Schedule shape
// ============================================================

TEST_CASE("num_bits is the binary length") {
    CHECK(num_bits(1) == 1);
    CHECK(num_bits(2) == 2);
    CHECK(num_bits(5) == 3);
    CHECK(num_bits(21) == 5);
    CHECK_THROWS_AS(num_bits(0), std::invalid_argument);
}

TEST_CASE("rotation schedules for the reference shapes") {
    CHECK(rotation_schedule(10, 1).empty());
    CHECK(offsets_of(rotation_schedule(7, 2)) == std::vector<std::size_t>{7});
    CHECK(offsets_of(rotation_schedule(3, 4)) == std::vector<std::size_t>{3, 6});
}

TEST_CASE("schedule length is numBits + popcount - 2, offsets are multiples of rows") {
    for (std::size_t c = 1; c <= 200; ++c) {
        for (std::size_t r : {1, 3, 16}) {
            const auto steps = rotation_schedule(r, c);
            const std::size_t expected = static_cast<std::size_t>(num_bits(c)) +
                                         static_cast<std::size_t>(std::popcount(c)) - 2;
            CHECK(steps.size() == expected);
            CHECK(steps.size() >= static_cast<std::size_t>(num_bits(c) - 1));
            CHECK(steps.size() <= 2 * static_cast<std::size_t>(num_bits(c) - 1));
            for (const RotStep& s : steps) {
                CHECK(s.offset % r == 0);
            }
        }
    }
}

// ============================================================
// Intra-chunk folding against the brute-force oracle
// ============================================================

TEST_CASE("folding sums all column blocks into the first") {
    SimBackend be(params_with_slots(64));
    OpLedger ledger;

    SUBCASE("single column needs no rotation") {
        const std::vector<std::int64_t> flat{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
        Ciphertext ct = be.encrypt(be.encode(flat), ledger);
        Ciphertext sum = intra_chunk_sum(be, ct, 10, 1, ledger);
        CHECK(ledger.n_rot == 0);
        CHECK(ledger.n_add == 0);
        const SlotVector slots = be.decrypt(sum, ledger);
        for (std::size_t i = 0; i < 10; ++i) {
            CHECK(slots[i] == flat[i]);
        }
    }

    SUBCASE("two columns fold with one rotation of exactly rows slots") {
        std::vector<std::int64_t> flat(14);
        for (std::size_t i = 0; i < flat.size(); ++i) {
            flat[i] = static_cast<std::int64_t>(i + 1);
        }
        Ciphertext ct = be.encrypt(be.encode(flat), ledger);
        ledger.reset();
        Ciphertext sum = intra_chunk_sum(be, ct, 7, 2, ledger);
        CHECK(ledger.n_rot == 1);
        CHECK(ledger.n_add == 1);
        const auto oracle = test::block_sums(flat, 7, 2);
        const SlotVector slots = be.decrypt(sum, ledger);
        for (std::size_t i = 0; i < 7; ++i) {
            CHECK(to_signed(slots[i], 65537) == oracle[i]);
        }
    }

    SUBCASE("four columns fold with rotations by rows and 2*rows") {
        std::vector<std::int64_t> flat(12);
        for (std::size_t i = 0; i < flat.size(); ++i) {
            flat[i] = static_cast<std::int64_t>(2 * i + 1);
        }
        Ciphertext ct = be.encrypt(be.encode(flat), ledger);
        ledger.reset();
        Ciphertext sum = intra_chunk_sum(be, ct, 3, 4, ledger);
        CHECK(ledger.n_rot == 2);
        CHECK(ledger.n_add == 2);
        const auto oracle = test::block_sums(flat, 3, 4);
        const SlotVector slots = be.decrypt(sum, ledger);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(to_signed(slots[i], 65537) == oracle[i]);
        }
    }
}

TEST_CASE("folding matches the oracle for every shape, including ragged bit patterns") {
    SimBackend be(params_with_slots(256));
    for (std::uint64_t seed = 700; seed < 760; ++seed) {
        std::mt19937_64 rng(seed);
        const std::size_t rows = 1 + bounded_draw(rng, 16);
        const std::size_t cols = 1 + bounded_draw(rng, 256 / rows);
        std::vector<std::int64_t> flat(rows * cols);
        for (auto& x : flat) {
            x = static_cast<std::int64_t>(bounded_draw(rng, 201)) - 100;
        }
        OpLedger ledger;
        Ciphertext ct = be.encrypt(be.encode(flat), ledger);
        ledger.reset();
        Ciphertext sum = intra_chunk_sum(be, ct, rows, cols, ledger);

        CHECK(ledger.n_rot == rotation_schedule(rows, cols).size());
        CHECK(ledger.n_add == ledger.n_rot);

        const auto oracle = test::block_sums(flat, rows, cols);
        const SlotVector slots = be.decrypt(sum, ledger);
        for (std::size_t i = 0; i < rows; ++i) {
            CHECK(to_signed(slots[i], 65537) == oracle[i]);
        }
    }
}

// ============================================================
// Inter-chunk masking and stacking
// ============================================================

TEST_CASE("masking keeps the leading slots and zeroes the rest") {
    SimBackend be(params_with_slots(8, 97));
    OpLedger ledger;
    const std::vector<std::int64_t> junk{5, 6, 7, 8, 9, 10, 11, 12};
    Ciphertext ct = be.encrypt(be.encode(junk), ledger);
    const std::vector<Ciphertext> parts{ct};
    const std::vector<std::size_t> r_list{3};
    Ciphertext out = inter_chunk_sum(be, parts, r_list, ledger);
    CHECK(be.decrypt(out, ledger) == SlotVector{5, 6, 7, 0, 0, 0, 0, 0});
    CHECK(ledger.n_mult_cp == 1);
    CHECK(ledger.n_add == 1);
}

TEST_CASE("stacked chunks add only where their rows are valid") {
    SimBackend be(params_with_slots(32, 65537));
    OpLedger ledger;

    // Three parts shaped like the reference fixture (heights 10, 7, 3); the
    // folded sums live in the leading slots, garbage elsewhere.
    std::mt19937_64 rng(99);
    std::vector<std::vector<std::int64_t>> raw(3);
    const std::vector<std::size_t> r_list{10, 7, 3};
    std::vector<Ciphertext> parts;
    for (std::size_t i = 0; i < 3; ++i) {
        raw[i].resize(32);
        for (auto& x : raw[i]) {
            x = static_cast<std::int64_t>(bounded_draw(rng, 2001)) - 1000;
        }
        parts.push_back(be.encrypt(be.encode(raw[i]), ledger));
    }
    ledger.reset();
    Ciphertext out = inter_chunk_sum(be, parts, r_list, ledger);
    CHECK(ledger.n_mult_cp == 3);
    CHECK(ledger.n_add == 3);
    CHECK(ledger.n_enc == 0);  // the accumulator seed is transparent

    const SlotVector slots = be.decrypt(out, ledger);
    for (std::size_t u = 0; u < 32; ++u) {
        std::int64_t expected = 0;
        for (std::size_t i = 0; i < 3; ++i) {
            if (u < r_list[i]) {
                expected += raw[i][u];
            }
        }
        CHECK(to_signed(slots[u], 65537) == to_signed(to_residue(expected, 65537), 65537));
    }
}

TEST_CASE("noise after a chunk product and aggregation is 87 bits") {
    SimBackend be(params_with_slots(16));
    OpLedger ledger;
    const std::vector<std::int64_t> a{1, 2, 3, 4, 5, 6};
    const std::vector<std::int64_t> b{6, 5, 4, 3, 2, 1};
    Ciphertext ca = be.encrypt(be.encode(a), ledger);
    Ciphertext cb = be.encrypt(be.encode(b), ledger);
    Ciphertext product = be.multiply(ca, cb, ledger);
    Ciphertext folded = intra_chunk_sum(be, product, 3, 2, ledger);
    const std::vector<Ciphertext> parts{folded};
    const std::vector<std::size_t> r_list{3};
    Ciphertext res = inter_chunk_sum(be, parts, r_list, ledger);
    CHECK(res.noise_budget_bits == 146 - 33 - 26);
}
