#pragma once

#include <cstddef>
#include <span>

#include "zkhash/state.hpp"

namespace zkhash {

/// Rate/capacity split plus the domain tag mixed into the capacity section
/// at initialization. rate + capacity must equal params.m, both >= 1.
struct SpongeConfig {
    uint32_t rate = 0;
    uint32_t capacity = 0;
    FieldElement domain_tag;
};

/// Tag for variable-length hashing: kind code | rate << 8 | out_len << 16.
FieldElement sponge_domain_tag(const HashParams& params, uint32_t rate, uint32_t out_len);

/// Tag for the fixed 2-to-1 node compression: kind code | 1 << 48.
FieldElement node_domain_tag(const HashParams& params);

/// rate = m-1, capacity = 1, tag derived from (kind, rate, out_len).
SpongeConfig default_config(const HashParams& params, uint32_t out_len);

enum class SpongePhase { absorbing, squeezing };

/// Absorb/squeeze state machine over any configured permutation. A value
/// owned by one caller at a time; distinct instances run concurrently
/// freely. Inputs are combined into the rate section with field addition,
/// padding is one element of 1 followed by zeros to the block boundary.
class Sponge {
public:
    /// Throws ConfigMismatch when the split does not fit params.m.
    Sponge(const HashParams& params, SpongeConfig config);

    /// Throws PhaseError once squeezing has started.
    void absorb(std::span<const FieldElement> inputs);

    /// First call applies padding and switches phase.
    std::vector<FieldElement> squeeze(uint32_t count);

    SpongePhase phase() const { return phase_; }
    const State& state() const { return state_; }

private:
    const HashParams* params_;
    SpongeConfig config_;
    State state_;
    uint32_t absorbed_in_block_ = 0;
    uint32_t squeezed_in_block_ = 0;
    SpongePhase phase_ = SpongePhase::absorbing;
};

/// One-shot init -> absorb -> squeeze(out_len) with the default config.
std::vector<FieldElement> sponge_hash(const HashParams& params,
                                      std::span<const FieldElement> inputs,
                                      uint32_t out_len);
std::vector<FieldElement> sponge_hash(const HashParams& params, const SpongeConfig& config,
                                      std::span<const FieldElement> inputs, uint32_t out_len);

/// Fixed-length, padding-free Merkle node hash:
/// permute((a, b, node_tag))[0]. Requires m = 3.
FieldElement compress2to1(const HashParams& params, const FieldElement& a,
                          const FieldElement& b);

/// Packs bytes into field elements, 31 bytes per element little-endian,
/// final partial chunk zero-filled, then one trailing element carrying the
/// total byte length (which makes the packing injective).
std::vector<FieldElement> pack_bytes(const FieldSpec& field, std::span<const uint8_t> bytes);

} // namespace zkhash
