#pragma once

#include "zkhash/state.hpp"

namespace zkhash {

/// Dispatches to the permutation selected by params.kind and counts the
/// invocation. All hashing and Merkle paths go through here.
State permute(const State& s, const HashParams& params);

} // namespace zkhash
