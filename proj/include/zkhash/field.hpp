#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>

#include "zkhash/bigint.hpp"
#include "zkhash/errors.hpp"

namespace zkhash {

/// A residue modulo the configured prime. Stored in Montgomery form; the
/// representation is an implementation detail that never crosses the
/// serialization boundary (to_bytes/to_hex emit the canonical value).
struct FieldElement {
    std::array<uint64_t, 4> limbs{0, 0, 0, 0};

    constexpr bool operator==(const FieldElement&) const = default;
};

/// An odd prime p < 2^254 together with the precomputed Montgomery
/// constants. Immutable after construction; all operations are pure, so a
/// FieldSpec may be shared across threads by reference.
class FieldSpec {
public:
    /// Empty spec; only useful as a slot to assign a real one into.
    FieldSpec() = default;

    /// Parses a decimal modulus, runs the load-time checks (odd, < 2^254,
    /// probable prime) and precomputes the Montgomery constants.
    /// Throws Error(validation_error) naming the violated check.
    static FieldSpec from_modulus_decimal(const std::string& decimal);

    static const FieldSpec& bn254_scalar();

    const U256& modulus() const { return p_; }
    unsigned bit_length() const { return bit_length_; }
    unsigned montgomery_radix_exponent() const { return 256; }
    uint64_t neg_p_inverse() const { return neg_p_inv_; }
    const U256& r_squared() const { return r2_; }

    FieldElement zero() const { return FieldElement{}; }
    FieldElement one() const { return one_; }

    // The four hot operations are defined inline below the class so the
    // permutation loops can flatten them.
    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement square(const FieldElement& a) const { return mul(a, a); }

    /// x^e by binary exponentiation, LSB first: one conditional multiply
    /// and one squaring per remaining exponent bit.
    FieldElement pow(const FieldElement& x, const U256& e) const;
    FieldElement pow(const FieldElement& x, uint64_t e) const {
        return pow(x, U256(e));
    }

    /// Throws Error(zero_inverse) for x = 0.
    FieldElement inv(const FieldElement& x) const;

    /// Same contract as mul, computed independently with a general-purpose
    /// big-integer library on the raw limbs. Exists as a test oracle for
    /// the optimized path; never used by the permutations.
    FieldElement mul_reference(const FieldElement& a, const FieldElement& b) const;

    bool is_zero(const FieldElement& a) const { return a.limbs == FieldElement{}.limbs; }

    /// Canonical residue <-> internal form.
    U256 to_canonical(const FieldElement& a) const;
    FieldElement from_canonical(const U256& v) const;  // requires v < p
    FieldElement from_u64(uint64_t v) const;           // reduces mod p

    /// Reduces an arbitrary 256-bit integer into the field. Used by the
    /// digit-recomposition path, whose lazily accumulated value may reach
    /// the full radix product before its single final reduction.
    FieldElement reduce_wide(const U256& v) const;

    /// 32-byte little-endian canonical encoding.
    /// from_bytes throws Error(non_canonical_encoding) when the integer >= p.
    std::array<uint8_t, 32> to_bytes(const FieldElement& a) const;
    FieldElement from_bytes(const std::array<uint8_t, 32>& bytes) const;

    /// 0x-prefixed big-endian hex, exactly 64 digits. Mixed-width input is
    /// rejected (parse_error) rather than zero-padded.
    std::string to_hex(const FieldElement& a) const;
    FieldElement from_hex(const std::string& hex) const;

    /// Uniform residue by rejection sampling.
    FieldElement random_element(std::mt19937_64& rng) const;

private:
    FieldElement mont_mul(const FieldElement& a, const FieldElement& b) const;

    U256 p_;
    U256 r2_;             // 2^512 mod p
    U256 r_inv_;          // 2^-256 mod p, for the reference multiplier
    FieldElement one_;    // 2^256 mod p
    uint64_t neg_p_inv_ = 0;
    unsigned bit_length_ = 0;
};

inline FieldElement FieldSpec::mont_mul(const FieldElement& a, const FieldElement& b) const {
    // CIOS: interleaved product accumulation and word-level reduction.
    uint64_t t[6] = {0, 0, 0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
        uint64_t carry = 0;
        for (int j = 0; j < 4; ++j) {
            uint128_t acc = static_cast<uint128_t>(a.limbs[i]) * b.limbs[j] + t[j] + carry;
            t[j] = static_cast<uint64_t>(acc);
            carry = static_cast<uint64_t>(acc >> 64);
        }
        uint128_t acc = static_cast<uint128_t>(t[4]) + carry;
        t[4] = static_cast<uint64_t>(acc);
        t[5] = static_cast<uint64_t>(acc >> 64);

        uint64_t m = t[0] * neg_p_inv_;
        acc = static_cast<uint128_t>(m) * p_.limbs[0] + t[0];
        carry = static_cast<uint64_t>(acc >> 64);
        for (int j = 1; j < 4; ++j) {
            acc = static_cast<uint128_t>(m) * p_.limbs[j] + t[j] + carry;
            t[j - 1] = static_cast<uint64_t>(acc);
            carry = static_cast<uint64_t>(acc >> 64);
        }
        acc = static_cast<uint128_t>(t[4]) + carry;
        t[3] = static_cast<uint64_t>(acc);
        t[4] = t[5] + static_cast<uint64_t>(acc >> 64);
    }
    FieldElement r{{t[0], t[1], t[2], t[3]}};
    U256 as_u256{t[0], t[1], t[2], t[3]};
    if (t[4] != 0 || as_u256 >= p_) {
        U256 reduced;
        u256_sub(as_u256, p_, reduced);
        r.limbs = reduced.limbs;
    }
    return r;
}

inline FieldElement FieldSpec::mul(const FieldElement& a, const FieldElement& b) const {
    return mont_mul(a, b);
}

inline FieldElement FieldSpec::add(const FieldElement& a, const FieldElement& b) const {
    U256 sum;
    u256_add(U256{a.limbs[0], a.limbs[1], a.limbs[2], a.limbs[3]},
             U256{b.limbs[0], b.limbs[1], b.limbs[2], b.limbs[3]}, sum);
    if (sum >= p_) u256_sub(sum, p_, sum);
    return FieldElement{sum.limbs};
}

inline FieldElement FieldSpec::sub(const FieldElement& a, const FieldElement& b) const {
    U256 av{a.limbs[0], a.limbs[1], a.limbs[2], a.limbs[3]};
    U256 bv{b.limbs[0], b.limbs[1], b.limbs[2], b.limbs[3]};
    U256 r;
    if (u256_sub(av, bv, r) != 0) {
        u256_add(r, p_, r);
    }
    return FieldElement{r.limbs};
}

inline FieldElement FieldSpec::neg(const FieldElement& a) const {
    if (is_zero(a)) return a;
    U256 r;
    u256_sub(p_, U256{a.limbs[0], a.limbs[1], a.limbs[2], a.limbs[3]}, r);
    return FieldElement{r.limbs};
}

} // namespace zkhash
