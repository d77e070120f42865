#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <string>

namespace zkhash {

using uint128_t = unsigned __int128;

/// 256-bit unsigned integer, four 64-bit limbs, least significant first.
struct U256 {
    std::array<uint64_t, 4> limbs{0, 0, 0, 0};

    constexpr U256() = default;
    constexpr explicit U256(uint64_t v) : limbs{v, 0, 0, 0} {}
    constexpr U256(uint64_t l0, uint64_t l1, uint64_t l2, uint64_t l3)
        : limbs{l0, l1, l2, l3} {}

    constexpr bool operator==(const U256&) const = default;

    bool is_zero() const {
        return (limbs[0] | limbs[1] | limbs[2] | limbs[3]) == 0;
    }

    bool bit(unsigned i) const {
        return (limbs[i / 64] >> (i % 64)) & 1;
    }

    unsigned bit_length() const {
        for (int i = 3; i >= 0; --i) {
            if (limbs[i] != 0) {
                return static_cast<unsigned>(64 * i + 64 - __builtin_clzll(limbs[i]));
            }
        }
        return 0;
    }
};

inline int u256_cmp(const U256& a, const U256& b) {
    for (int i = 3; i >= 0; --i) {
        if (a.limbs[i] < b.limbs[i]) return -1;
        if (a.limbs[i] > b.limbs[i]) return 1;
    }
    return 0;
}

inline bool operator<(const U256& a, const U256& b) { return u256_cmp(a, b) < 0; }
inline bool operator>=(const U256& a, const U256& b) { return u256_cmp(a, b) >= 0; }

// Returns the carry out.
inline uint64_t u256_add(const U256& a, const U256& b, U256& r) {
    uint128_t acc = 0;
    for (int i = 0; i < 4; ++i) {
        acc += static_cast<uint128_t>(a.limbs[i]) + b.limbs[i];
        r.limbs[i] = static_cast<uint64_t>(acc);
        acc >>= 64;
    }
    return static_cast<uint64_t>(acc);
}

// Returns the borrow out. Caller guarantees a >= b when borrow must be 0.
inline uint64_t u256_sub(const U256& a, const U256& b, U256& r) {
    uint64_t borrow = 0;
    for (int i = 0; i < 4; ++i) {
        uint128_t d = static_cast<uint128_t>(a.limbs[i]) - b.limbs[i] - borrow;
        r.limbs[i] = static_cast<uint64_t>(d);
        borrow = static_cast<uint64_t>(d >> 64) & 1;
    }
    return borrow;
}

inline void u256_shl1(U256& a) {
    uint64_t carry = 0;
    for (int i = 0; i < 4; ++i) {
        uint64_t next = a.limbs[i] >> 63;
        a.limbs[i] = (a.limbs[i] << 1) | carry;
        carry = next;
    }
}

/// Schoolbook 256x256 -> 512-bit product into 8 limbs.
inline void u256_mul_wide(const U256& a, const U256& b, uint64_t out[8]) {
    std::memset(out, 0, 8 * sizeof(uint64_t));
    for (int i = 0; i < 4; ++i) {
        uint64_t carry = 0;
        for (int j = 0; j < 4; ++j) {
            uint128_t acc = static_cast<uint128_t>(a.limbs[i]) * b.limbs[j]
                            + out[i + j] + carry;
            out[i + j] = static_cast<uint64_t>(acc);
            carry = static_cast<uint64_t>(acc >> 64);
        }
        out[i + 4] = carry;
    }
}

/// Generic limb-span helpers used by the reciprocal-division engine.
namespace limbs {

inline void mul(const uint64_t* a, size_t na, const uint64_t* b, size_t nb,
                uint64_t* out /* na+nb limbs, zeroed by this call */) {
    std::memset(out, 0, (na + nb) * sizeof(uint64_t));
    for (size_t i = 0; i < na; ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < nb; ++j) {
            uint128_t acc = static_cast<uint128_t>(a[i]) * b[j] + out[i + j] + carry;
            out[i + j] = static_cast<uint64_t>(acc);
            carry = static_cast<uint64_t>(acc >> 64);
        }
        out[i + nb] = carry;
    }
}

inline void shr(const uint64_t* a, size_t na, unsigned bits,
                uint64_t* out, size_t nout) {
    size_t limb_shift = bits / 64;
    unsigned bit_shift = bits % 64;
    for (size_t i = 0; i < nout; ++i) {
        size_t src = i + limb_shift;
        uint64_t lo = src < na ? a[src] : 0;
        uint64_t hi = src + 1 < na ? a[src + 1] : 0;
        out[i] = bit_shift == 0 ? lo : (lo >> bit_shift) | (hi << (64 - bit_shift));
    }
}

} // namespace limbs

std::string u256_to_hex(const U256& v);        // 0x + exactly 64 lowercase digits
U256 u256_from_hex(const std::string& s);      // strict: throws Error(parse_error)
std::string u256_to_decimal(const U256& v);
U256 u256_from_decimal(const std::string& s);  // throws Error(parse_error)

} // namespace zkhash
