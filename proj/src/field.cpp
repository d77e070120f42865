#include "zkhash/field.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include "boost_convert.hpp"

namespace zkhash {

namespace {

namespace mp = boost::multiprecision;
using detail::from_cpp_int;
using detail::to_cpp_int;

void u256_shr1(U256& a) {
    for (int i = 0; i < 4; ++i) {
        uint64_t hi = i < 3 ? a.limbs[i + 1] : 0;
        a.limbs[i] = (a.limbs[i] >> 1) | (hi << 63);
    }
}

} // namespace

FieldSpec FieldSpec::from_modulus_decimal(const std::string& decimal) {
    FieldSpec spec;
    spec.p_ = u256_from_decimal(decimal);
    spec.bit_length_ = spec.p_.bit_length();

    if ((spec.p_.limbs[0] & 1) == 0) {
        throw Error(ErrorCode::validation_error, "modulus_odd: modulus must be odd");
    }
    if (spec.bit_length_ > 254 || spec.bit_length_ < 2) {
        throw Error(ErrorCode::validation_error, "modulus_width: modulus must be in (2, 2^254)");
    }
    if (!mp::miller_rabin_test(to_cpp_int(spec.p_), 40)) {
        throw Error(ErrorCode::validation_error, "modulus_prime: modulus failed primality test");
    }

    // -p^{-1} mod 2^64 by Newton iteration (p odd).
    uint64_t inv = spec.p_.limbs[0];
    for (int i = 0; i < 6; ++i) {
        inv *= 2 - spec.p_.limbs[0] * inv;
    }
    spec.neg_p_inv_ = ~inv + 1;
    if (spec.neg_p_inv_ * spec.p_.limbs[0] + 1 != 0) {
        throw Error(ErrorCode::validation_error,
                    "neg_p_inverse: word inverse does not satisfy -p^-1 * p = -1 mod 2^64");
    }

    // 2^256 mod p and 2^512 mod p by repeated doubling; 2*acc stays below
    // 2^255 because the modulus is capped at 254 bits.
    U256 acc(1);
    for (int i = 0; i < 512; ++i) {
        u256_shl1(acc);
        if (acc >= spec.p_) u256_sub(acc, spec.p_, acc);
        if (i == 255) spec.one_.limbs = acc.limbs;  // R mod p = Montgomery form of 1
    }
    spec.r2_ = acc;

    // R^{-1} mod p for the reference multiplier.
    mp::cpp_int p = to_cpp_int(spec.p_);
    mp::cpp_int r = mp::cpp_int(1) << 256;
    spec.r_inv_ = from_cpp_int(mp::powm(r % p, p - 2, p));

    return spec;
}

const FieldSpec& FieldSpec::bn254_scalar() {
    static const FieldSpec spec = from_modulus_decimal(
        "21888242871839275222246405745257275088548364400416034343698204186575808495617");
    return spec;
}






FieldElement FieldSpec::pow(const FieldElement& x, const U256& e) const {
    FieldElement result = one();
    FieldElement base = x;
    U256 rem = e;
    while (!rem.is_zero()) {
        if (rem.limbs[0] & 1) result = mont_mul(result, base);
        base = mont_mul(base, base);
        u256_shr1(rem);
    }
    return result;
}

FieldElement FieldSpec::inv(const FieldElement& x) const {
    if (is_zero(x)) {
        throw Error(ErrorCode::zero_inverse, "inverse of zero is undefined");
    }
    U256 e;
    u256_sub(p_, U256(2), e);
    return pow(x, e);
}

FieldElement FieldSpec::mul_reference(const FieldElement& a, const FieldElement& b) const {
    // (aR)(bR)R^{-1} mod p on the raw limbs, entirely in boost arithmetic;
    // shares nothing with mont_mul.
    mp::cpp_int p = to_cpp_int(p_);
    mp::cpp_int prod = to_cpp_int(U256{a.limbs[0], a.limbs[1], a.limbs[2], a.limbs[3]})
                       * to_cpp_int(U256{b.limbs[0], b.limbs[1], b.limbs[2], b.limbs[3]});
    mp::cpp_int r = (prod % p) * to_cpp_int(r_inv_) % p;
    return FieldElement{from_cpp_int(r).limbs};
}

U256 FieldSpec::to_canonical(const FieldElement& a) const {
    FieldElement unit{{1, 0, 0, 0}};
    FieldElement canon = mont_mul(a, unit);
    return U256{canon.limbs[0], canon.limbs[1], canon.limbs[2], canon.limbs[3]};
}

FieldElement FieldSpec::from_canonical(const U256& v) const {
    if (v >= p_) {
        throw Error(ErrorCode::non_canonical_encoding, "value not below the modulus");
    }
    FieldElement raw{v.limbs};
    return mont_mul(raw, FieldElement{r2_.limbs});
}

FieldElement FieldSpec::from_u64(uint64_t v) const {
    if ((p_.limbs[1] | p_.limbs[2] | p_.limbs[3]) == 0) {
        v %= p_.limbs[0];  // single-limb modulus
    }
    return from_canonical(U256(v));
}

FieldElement FieldSpec::reduce_wide(const U256& v) const {
    // mont_mul(v, R^2) = v * 2^256 mod p. The CIOS output stays below 2p
    // for any 256-bit first operand, so the usual conditional subtraction
    // suffices.
    return mont_mul(FieldElement{v.limbs}, FieldElement{r2_.limbs});
}

std::array<uint8_t, 32> FieldSpec::to_bytes(const FieldElement& a) const {
    U256 canon = to_canonical(a);
    std::array<uint8_t, 32> out{};
    for (int i = 0; i < 32; ++i) {
        out[i] = static_cast<uint8_t>(canon.limbs[i / 8] >> (8 * (i % 8)));
    }
    return out;
}

FieldElement FieldSpec::from_bytes(const std::array<uint8_t, 32>& bytes) const {
    U256 v;
    for (int i = 0; i < 32; ++i) {
        v.limbs[i / 8] |= static_cast<uint64_t>(bytes[i]) << (8 * (i % 8));
    }
    return from_canonical(v);
}

std::string FieldSpec::to_hex(const FieldElement& a) const {
    return u256_to_hex(to_canonical(a));
}

FieldElement FieldSpec::from_hex(const std::string& hex) const {
    return from_canonical(u256_from_hex(hex));
}

FieldElement FieldSpec::random_element(std::mt19937_64& rng) const {
    unsigned top_limb = (bit_length_ - 1) / 64;
    unsigned top_bits = bit_length_ - 64 * top_limb;
    uint64_t mask = top_bits == 64 ? ~0ULL : (1ULL << top_bits) - 1;
    for (;;) {
        U256 v;
        for (unsigned i = 0; i <= top_limb; ++i) v.limbs[i] = rng();
        v.limbs[top_limb] &= mask;
        if (v < p_) return from_canonical(v);
    }
}

} // namespace zkhash
