#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "zkhash/bigint.hpp"
#include "zkhash/errors.hpp"

namespace zkhash::fastdiv {

/// Precomputed scaled reciprocal floor(2^k / s) for a fixed small divisor.
/// Replaces division by s with a wide multiply and a right shift by k, plus
/// a bounded correction. k must be at least twice the bit width of any
/// dividend passed to divrem.
struct ReciprocalEntry {
    uint64_t divisor = 0;
    unsigned scale_exponent = 0;
    std::vector<uint64_t> scaled_reciprocal;  // little-endian limbs, trimmed

    bool operator==(const ReciprocalEntry&) const = default;
};

/// One entry per radix, positionally aligned with the radix list that
/// produced it. Immutable after construction.
struct ReciprocalTable {
    std::vector<ReciprocalEntry> entries;

    static ReciprocalTable for_radices(std::span<const uint32_t> radices, unsigned k);
};

struct DivRem {
    U256 quotient;
    uint64_t remainder = 0;
};

/// Throws DivisorTooSmall (s < 2) or ScaleTooSmall (k < 2 * bit_length(s),
/// the doubled-input-width floor; divisors are themselves valid dividends).
ReciprocalEntry precompute(uint64_t s, unsigned k);

/// Euclidean quotient and remainder of x by entry.divisor, computed as
/// (x * scaled_reciprocal) >> k followed by the correction loop. Requires
/// bit_length(x) <= k / 2; throws DividendTooLarge otherwise.
DivRem divrem(const U256& x, const ReciprocalEntry& entry);

} // namespace zkhash::fastdiv
