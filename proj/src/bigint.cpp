#include "zkhash/bigint.hpp"

#include <cctype>

#include "zkhash/errors.hpp"

namespace zkhash {

std::string u256_to_hex(const U256& v) {
    static const char* digits = "0123456789abcdef";
    std::string out = "0x";
    out.reserve(66);
    for (int limb = 3; limb >= 0; --limb) {
        for (int nibble = 15; nibble >= 0; --nibble) {
            out.push_back(digits[(v.limbs[limb] >> (4 * nibble)) & 0xf]);
        }
    }
    return out;
}

U256 u256_from_hex(const std::string& s) {
    if (s.size() != 66 || s[0] != '0' || s[1] != 'x') {
        throw Error(ErrorCode::parse_error,
                    "expected 0x-prefixed hex with exactly 64 digits, got '" + s + "'");
    }
    U256 v;
    for (size_t i = 2; i < 66; ++i) {
        char c = s[i];
        uint64_t nibble;
        if (c >= '0' && c <= '9') nibble = static_cast<uint64_t>(c - '0');
        else if (c >= 'a' && c <= 'f') nibble = static_cast<uint64_t>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F') nibble = static_cast<uint64_t>(c - 'A' + 10);
        else throw Error(ErrorCode::parse_error, "invalid hex digit in '" + s + "'");
        size_t pos = 65 - i;  // nibble index from the least significant end
        v.limbs[pos / 16] |= nibble << (4 * (pos % 16));
    }
    return v;
}

std::string u256_to_decimal(const U256& v) {
    if (v.is_zero()) return "0";
    U256 cur = v;
    std::string out;
    while (!cur.is_zero()) {
        // divide by 10, collect remainder
        uint64_t rem = 0;
        for (int i = 3; i >= 0; --i) {
            uint128_t acc = (static_cast<uint128_t>(rem) << 64) | cur.limbs[i];
            cur.limbs[i] = static_cast<uint64_t>(acc / 10);
            rem = static_cast<uint64_t>(acc % 10);
        }
        out.push_back(static_cast<char>('0' + rem));
    }
    return std::string(out.rbegin(), out.rend());
}

U256 u256_from_decimal(const std::string& s) {
    if (s.empty()) throw Error(ErrorCode::parse_error, "empty decimal string");
    U256 v;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw Error(ErrorCode::parse_error, "invalid decimal digit in '" + s + "'");
        }
        // v = v * 10 + digit, with overflow detection
        uint64_t carry = static_cast<uint64_t>(c - '0');
        for (int i = 0; i < 4; ++i) {
            uint128_t acc = static_cast<uint128_t>(v.limbs[i]) * 10 + carry;
            v.limbs[i] = static_cast<uint64_t>(acc);
            carry = static_cast<uint64_t>(acc >> 64);
        }
        if (carry != 0) {
            throw Error(ErrorCode::parse_error, "decimal value exceeds 256 bits: '" + s + "'");
        }
    }
    return v;
}

} // namespace zkhash
