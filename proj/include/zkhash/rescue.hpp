#pragma once

#include "zkhash/state.hpp"

namespace zkhash::rescue {

/// Element-wise forward power map x -> x^d.
State sbox_layer(const State& s, const HashParams& params);

/// Element-wise inverse power map x -> x^{1/d} (binary exponentiation with
/// the full-width d_inv).
State inv_sbox_layer(const State& s, const HashParams& params);

/// M*s plus the constants for one half-round. Each round consumes 2m
/// constants split at m: step_index 2r takes the first half of round r's
/// slice, step_index 2r+1 the second.
State linear_layer(const State& s, uint32_t step_index, const HashParams& params);

/// The full permutation: per round, sbox -> linear -> inverse sbox ->
/// linear, constants consumed in file order. Throws KindMismatch unless
/// params.kind is rescue_prime.
State permute(const State& s, const HashParams& params);

} // namespace zkhash::rescue
