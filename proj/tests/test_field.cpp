#include <doctest.h>

#include "test_util.hpp"
#include "zkhash/field.hpp"

using namespace zkhash;
namespace mp = boost::multiprecision;

namespace {

const FieldSpec& bn254() { return FieldSpec::bn254_scalar(); }

mp::cpp_int modulus_int(const FieldSpec& f) { return test_util::to_int(f.modulus()); }

} // namespace

TEST_CASE("modulus checks reject bad inputs") {
    CHECK_THROWS_AS(FieldSpec::from_modulus_decimal("1024"), Error);  // even
    CHECK_THROWS_AS(FieldSpec::from_modulus_decimal("1015"), Error);  // 5 * 7 * 29
    CHECK_THROWS_AS(FieldSpec::from_modulus_decimal(
                        // 2^255 - 19, one bit too wide for this library
                        "578960446186580977117854925043439539266349923328202820197287920"
                        "03956564819949"),
                    Error);
    CHECK_THROWS_AS(FieldSpec::from_modulus_decimal("not a number"), Error);
}

TEST_CASE("additive identities and wraparound") {
    const FieldSpec& f = bn254();
    CHECK(f.add(f.zero(), f.zero()) == f.zero());

    U256 pm1;
    u256_sub(f.modulus(), U256(1), pm1);
    FieldElement top = f.from_canonical(pm1);
    CHECK(f.add(top, f.one()) == f.zero());
    CHECK(f.neg(top) == f.one());
}

TEST_CASE("multiplicative identities") {
    const FieldSpec& f = bn254();
    std::mt19937_64 rng(42);
    for (int i = 0; i < 32; ++i) {
        FieldElement x = f.random_element(rng);
        CHECK(f.mul(f.one(), x) == x);
        CHECK(f.mul(f.zero(), x) == f.zero());
    }
}

TEST_CASE("optimized arithmetic matches the big-integer oracle") {
    const FieldSpec& f = bn254();
    mp::cpp_int p = modulus_int(f);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100000; ++i) {
        FieldElement a = f.random_element(rng);
        FieldElement b = f.random_element(rng);
        mp::cpp_int ai = test_util::to_int(f, a);
        mp::cpp_int bi = test_util::to_int(f, b);
        CHECK(test_util::to_int(f, f.mul(a, b)) == ai * bi % p);
        if (i % 8 == 0) {
            CHECK(test_util::to_int(f, f.add(a, b)) == (ai + bi) % p);
            CHECK(test_util::to_int(f, f.sub(a, b)) == ((ai - bi) % p + p) % p);
        }
    }
}

TEST_CASE("mul agrees with mul_reference") {
    const FieldSpec& f = bn254();
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20000; ++i) {
        FieldElement a = f.random_element(rng);
        FieldElement b = f.random_element(rng);
        CHECK(f.mul(a, b) == f.mul_reference(a, b));
    }
    // the oracle agrees with itself on the trivial cases
    FieldElement x = f.random_element(rng);
    CHECK(f.mul_reference(f.one(), x) == x);
    CHECK(f.mul_reference(f.zero(), x) == f.zero());
}

TEST_CASE("pow identities") {
    const FieldSpec& f = bn254();
    std::mt19937_64 rng(13);
    FieldElement x = f.random_element(rng);
    CHECK(f.pow(x, U256(0)) == f.one());
    CHECK(f.pow(x, U256(1)) == x);

    SUBCASE("pow agrees with iterated multiplication for exponents 0..64") {
        FieldElement base = f.random_element(rng);
        FieldElement acc = f.one();
        for (uint64_t e = 0; e <= 64; ++e) {
            CHECK(f.pow(base, e) == acc);
            acc = f.mul(acc, base);
        }
    }

    SUBCASE("Fermat: x^(p-1) = 1") {
        U256 pm1;
        u256_sub(f.modulus(), U256(1), pm1);
        for (int i = 0; i < 64; ++i) {
            FieldElement v = f.random_element(rng);
            if (f.is_zero(v)) continue;
            CHECK(f.pow(v, pm1) == f.one());
        }
    }
}

TEST_CASE("power map and its inverse cancel") {
    // d * d_inv = 1 mod (p-1) makes x -> x^d and x -> x^d_inv mutual inverses.
    const FieldSpec& f = bn254();
    mp::cpp_int pm1 = modulus_int(f) - 1;
    mp::cpp_int d_inv_int = 0;
    for (int k = 1; k <= 5; ++k) {
        if ((1 + k * pm1) % 5 == 0) {
            d_inv_int = (1 + k * pm1) / 5;
            break;
        }
    }
    REQUIRE(d_inv_int * 5 % pm1 == 1);
    U256 d_inv;
    {
        mp::cpp_int v = d_inv_int;
        for (int i = 0; i < 4; ++i) {
            d_inv.limbs[i] = static_cast<uint64_t>(v & 0xffffffffffffffffULL);
            v >>= 64;
        }
    }
    std::mt19937_64 rng(17);
    for (int i = 0; i < 1000; ++i) {
        FieldElement x = f.random_element(rng);
        CHECK(f.pow(f.pow(x, 5), d_inv) == x);
    }
}

TEST_CASE("inversion") {
    const FieldSpec& f = bn254();
    CHECK(f.inv(f.one()) == f.one());

    U256 pm1;
    u256_sub(f.modulus(), U256(1), pm1);
    FieldElement minus_one = f.from_canonical(pm1);
    CHECK(f.inv(minus_one) == minus_one);

    CHECK_THROWS_AS(f.inv(f.zero()), Error);

    std::mt19937_64 rng(19);
    for (int i = 0; i < 2000; ++i) {
        FieldElement x = f.random_element(rng);
        if (f.is_zero(x)) continue;
        CHECK(f.mul(x, f.inv(x)) == f.one());
    }
}

TEST_CASE("abelian group structure on sampled triples") {
    const FieldSpec& f = bn254();
    std::mt19937_64 rng(23);
    for (int i = 0; i < 2000; ++i) {
        FieldElement a = f.random_element(rng);
        FieldElement b = f.random_element(rng);
        FieldElement c = f.random_element(rng);
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
        CHECK(f.add(a, f.neg(a)) == f.zero());
        CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
        CHECK(f.mul(a, b) == f.mul(b, a));
    }
}

TEST_CASE("byte encoding round-trips and rejects non-canonical values") {
    const FieldSpec& f = bn254();
    CHECK(f.to_bytes(f.zero()) == std::array<uint8_t, 32>{});
    CHECK(f.from_bytes(std::array<uint8_t, 32>{}) == f.zero());

    // the modulus itself is not a canonical encoding
    std::array<uint8_t, 32> p_bytes{};
    for (int i = 0; i < 32; ++i) {
        p_bytes[i] = static_cast<uint8_t>(f.modulus().limbs[i / 8] >> (8 * (i % 8)));
    }
    CHECK_THROWS_AS(f.from_bytes(p_bytes), Error);

    std::mt19937_64 rng(29);
    for (int i = 0; i < 100000; ++i) {
        FieldElement x = f.random_element(rng);
        CHECK(f.from_bytes(f.to_bytes(x)) == x);
    }
}

TEST_CASE("hex encoding is strict and round-trips") {
    const FieldSpec& f = bn254();
    std::mt19937_64 rng(31);
    for (int i = 0; i < 1000; ++i) {
        FieldElement x = f.random_element(rng);
        std::string h = f.to_hex(x);
        CHECK(h.size() == 66);
        CHECK(f.from_hex(h) == x);
    }
    CHECK_THROWS_AS(f.from_hex("0x0"), Error);
    CHECK_THROWS_AS(f.from_hex("00"), Error);
    CHECK_THROWS_AS(f.from_hex(std::string(66, 'f')), Error);
    CHECK(f.from_hex("0x" + std::string(63, '0') + "1") == f.one());
}

TEST_CASE("toy-prime field behaves like the 254-bit one") {
    FieldSpec f = FieldSpec::from_modulus_decimal("1013");
    mp::cpp_int p = 1013;
    for (uint64_t a = 0; a < 1013; a += 13) {
        for (uint64_t b = 0; b < 1013; b += 7) {
            FieldElement fa = f.from_u64(a);
            FieldElement fb = f.from_u64(b);
            CHECK(test_util::to_int(f, f.mul(fa, fb)) == mp::cpp_int(a) * b % p);
        }
    }
}

TEST_CASE("decimal conversions round-trip") {
    CHECK(u256_to_decimal(U256(0)) == "0");
    CHECK(u256_to_decimal(U256(1234567890)) == "1234567890");
    const std::string p =
        "21888242871839275222246405745257275088548364400416034343698204186575808495617";
    CHECK(u256_to_decimal(u256_from_decimal(p)) == p);
    CHECK_THROWS_AS(u256_from_decimal("12x"), Error);
    CHECK_THROWS_AS(u256_from_decimal(std::string(80, '9')), Error);
}
