#include "zkhash/fastdiv.hpp"

#include <cassert>

namespace zkhash::fastdiv {

namespace {

unsigned bit_length_u64(uint64_t v) {
    return v == 0 ? 0 : 64 - static_cast<unsigned>(__builtin_clzll(v));
}

} // namespace

ReciprocalEntry precompute(uint64_t s, unsigned k) {
    if (s < 2) {
        throw Error(ErrorCode::divisor_too_small, "divisor must be at least 2");
    }
    if (k < 2 * bit_length_u64(s) || k > 512) {
        throw Error(ErrorCode::scale_too_small,
                    "scale exponent must cover twice the input width (and at most 512)");
    }

    // floor(2^k / s) by short division of the single set bit, top limb down.
    size_t n = k / 64 + 1;
    std::vector<uint64_t> dividend(n, 0);
    dividend[k / 64] = 1ULL << (k % 64);
    std::vector<uint64_t> quotient(n, 0);
    uint64_t rem = 0;
    for (size_t i = n; i-- > 0;) {
        uint128_t acc = (static_cast<uint128_t>(rem) << 64) | dividend[i];
        quotient[i] = static_cast<uint64_t>(acc / s);
        rem = static_cast<uint64_t>(acc % s);
    }
    assert(rem < s);
    while (quotient.size() > 1 && quotient.back() == 0) quotient.pop_back();

    return ReciprocalEntry{s, k, std::move(quotient)};
}

ReciprocalTable ReciprocalTable::for_radices(std::span<const uint32_t> radices, unsigned k) {
    ReciprocalTable table;
    table.entries.reserve(radices.size());
    for (uint32_t s : radices) {
        table.entries.push_back(precompute(s, k));
    }
    return table;
}

DivRem divrem(const U256& x, const ReciprocalEntry& entry) {
    unsigned k = entry.scale_exponent;
    if (x.bit_length() > k / 2) {
        throw Error(ErrorCode::dividend_too_large,
                    "dividend exceeds 2^(k/2) for this reciprocal entry");
    }

    // q_hat = (x * recip) >> k; never overshoots, undershoots by at most 1.
    size_t nx = (x.bit_length() + 63) / 64;
    if (nx == 0) nx = 1;
    size_t nr = entry.scaled_reciprocal.size();
    uint64_t product[13];  // 4 + 8 limbs max, plus headroom
    limbs::mul(x.limbs.data(), nx, entry.scaled_reciprocal.data(), nr, product);

    U256 q;
    limbs::shr(product, nx + nr, k, q.limbs.data(), 4);

    // r = x - q * s, then at most two subtract-and-increment corrections.
    uint64_t s = entry.divisor;
    U256 qs;
    uint64_t carry = 0;
    for (int i = 0; i < 4; ++i) {
        uint128_t acc = static_cast<uint128_t>(q.limbs[i]) * s + carry;
        qs.limbs[i] = static_cast<uint64_t>(acc);
        carry = static_cast<uint64_t>(acc >> 64);
    }
    assert(carry == 0);
    U256 r;
    uint64_t borrow = u256_sub(x, qs, r);
    assert(borrow == 0);
    (void)borrow;

    int corrections = 0;
    while (r.limbs[1] != 0 || r.limbs[2] != 0 || r.limbs[3] != 0 || r.limbs[0] >= s) {
        u256_sub(r, U256(s), r);
        u256_add(q, U256(1), q);
        ++corrections;
        assert(corrections <= 2);
    }
    (void)corrections;

    return DivRem{q, r.limbs[0]};
}

} // namespace zkhash::fastdiv
