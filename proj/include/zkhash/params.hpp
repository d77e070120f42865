#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zkhash/fastdiv.hpp"
#include "zkhash/field.hpp"

namespace zkhash {

enum class HashKind { rescue_prime, griffin, reinforced_concrete };

const char* to_string(HashKind kind);
HashKind hash_kind_from_string(const std::string& name);  // parse_error

/// Stable small codes used in sponge domain tags. Never reorder.
inline uint32_t kind_code(HashKind kind) {
    switch (kind) {
        case HashKind::rescue_prime: return 1;
        case HashKind::griffin: return 2;
        case HashKind::reinforced_concrete: return 3;
    }
    return 0;
}

/// Coefficients of the quadratic lane: y2 = x2 * (L^2 + alpha*L + beta)
/// with L = y0_coeff * y0 + y1.
struct GriffinParams {
    FieldElement alpha;
    FieldElement beta;
    FieldElement y0_coeff;
};

enum class RcComponent { concrete, bricks, bars };

struct RcBarParams {
    std::vector<uint32_t> radices;
    // One table per position, aligned with radices. Positions sharing a
    // radix value must carry identical tables.
    std::vector<std::vector<uint32_t>> sbox_tables;
    fastdiv::ReciprocalTable reciprocals;
};

struct RcParams {
    FieldElement alpha1, beta1, alpha2, beta2;
    std::vector<RcComponent> schedule;
    RcBarParams bar;
};

/// One hash function's complete parameter set. Deeply immutable after load;
/// share freely across threads.
struct HashParams {
    HashKind kind = HashKind::rescue_prime;
    FieldSpec field;
    uint32_t m = 0;
    uint32_t d = 0;
    U256 d_inv;
    uint32_t rounds = 0;
    std::vector<std::vector<FieldElement>> mds;
    std::vector<std::vector<FieldElement>> round_constants;
    std::optional<GriffinParams> griffin;
    std::optional<RcParams> rc;
    std::string digest;
};

/// Parse, digest-check and validate a parameter file.
/// Throws Error(parse_error) on malformed input and
/// Error(validation_error) naming the first violated invariant.
HashParams load_params(const std::string& path);
HashParams params_from_json(const nlohmann::json& doc);

/// Pure check; returns the names of all violated invariants (empty = valid).
std::vector<std::string> validate(const HashParams& params);

nlohmann::json serialize_params(const HashParams& params);
void save_params(const HashParams& params, const std::string& path);

/// SHA-256 hex over the canonical dump (sorted keys, compact separators)
/// of the document body with the digest key removed.
std::string params_body_digest(nlohmann::json body);

/// Parameter sets over the 1013 toy prime, small enough for exhaustive
/// bar/decomp checks. Built programmatically; equivalent in shape to the
/// shipped params/*_toy.json files.
HashParams toy_params(HashKind kind);

/// Even smaller sets over p = 23 (m = 2 for rescue_prime, 3 otherwise),
/// sized for exhaustive whole-permutation bijectivity sweeps.
HashParams tiny_params(HashKind kind);

} // namespace zkhash
