#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "zkhash/bigint.hpp"

namespace zkhash::detail {

inline boost::multiprecision::cpp_int to_cpp_int(const U256& v) {
    boost::multiprecision::cpp_int out = 0;
    for (int i = 3; i >= 0; --i) {
        out <<= 64;
        out += v.limbs[i];
    }
    return out;
}

inline U256 from_cpp_int(boost::multiprecision::cpp_int v) {
    U256 out;
    for (int i = 0; i < 4; ++i) {
        out.limbs[i] = static_cast<uint64_t>(v & 0xffffffffffffffffULL);
        v >>= 64;
    }
    return out;
}

} // namespace zkhash::detail
