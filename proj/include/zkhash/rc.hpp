#pragma once

#include "zkhash/state.hpp"

namespace zkhash::rc {

/// Mixed-radix digits of one field element, most significant first,
/// positionally aligned with the parameter radix list. Internal to the
/// permutation; never crosses the public hashing API.
struct DigitVector {
    std::vector<uint32_t> digits;

    bool operator==(const DigitVector&) const = default;
};

/// M*s plus the constants slice for this concrete occurrence.
State concrete(const State& s, uint32_t round_index, const HashParams& params);

/// Degree-5 nonlinear map:
/// (x0^d, x1*(x0^2 + a1*x0 + b1), x2*(x1^2 + a2*x1 + b2)).
State bricks(const State& s, const HashParams& params);

/// DECOMPOSE: extract digits least-significant radix first via the
/// reciprocal table, store most significant first.
DigitVector decomp(const FieldElement& x, const HashParams& params);

/// Per-position sbox table lookup.
DigitVector sbox_digits(const DigitVector& dv, const HashParams& params);

/// COMPOSE: Horner recomposition. The accumulator is kept as a raw 256-bit
/// integer (the radix product is validated to fit) and reduced into the
/// field once at the end.
FieldElement comp(const DigitVector& dv, const HashParams& params);

/// comp(sbox_digits(decomp(x))).
FieldElement bar(const FieldElement& x, const HashParams& params);

/// Element-wise bar; counts one bars execution.
State bars(const State& s, const HashParams& params);

/// Executes the schedule left to right, consuming one constants slice per
/// concrete occurrence. Throws KindMismatch / StateSizeUnsupported.
State permute(const State& s, const HashParams& params);

} // namespace zkhash::rc
