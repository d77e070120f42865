#pragma once

#include <span>
#include <string>

#include "zkhash/sponge.hpp"

namespace zkhash {

/// Sibling path for one leaf, leaf-to-root order; directions are encoded by
/// the bits of leaf_index.
struct MerkleProof {
    uint64_t leaf_index = 0;
    std::vector<FieldElement> siblings;
};

/// Level-indexed commitment tree over already-hashed leaves. Leaves are
/// padded to the next power of two with the zero element; the original
/// count is kept so padded indices cannot be proven. Immutable once built.
class MerkleTree {
public:
    /// Throws EmptyLeaves for an empty span.
    static MerkleTree build(std::span<const FieldElement> leaves, const HashParams& params);

    uint32_t depth() const { return static_cast<uint32_t>(levels_.size() - 1); }
    uint64_t leaf_count() const { return leaf_count_; }
    uint64_t padded_leaf_count() const { return levels_.front().size(); }
    const FieldElement& root() const { return levels_.back().front(); }
    const std::vector<std::vector<FieldElement>>& levels() const { return levels_; }

    /// Throws IndexOutOfRange for index >= leaf_count().
    MerkleProof prove(uint64_t index) const;

    /// Element-wise prove, order preserving; the first bad index aborts.
    std::vector<MerkleProof> batch_prove(std::span<const uint64_t> indices) const;

    /// Text format: header (kind, params digest, depth, leaf count) plus
    /// the level-0 array; inner levels are recomputed on load.
    void save(const std::string& path) const;
    static MerkleTree load(const std::string& path, const HashParams& params);

private:
    MerkleTree(const HashParams& params, uint64_t leaf_count,
               std::vector<std::vector<FieldElement>> levels)
        : params_(&params), leaf_count_(leaf_count), levels_(std::move(levels)) {}

    const HashParams* params_;
    uint64_t leaf_count_;
    std::vector<std::vector<FieldElement>> levels_;
};

/// True iff folding leaf through the siblings reproduces root. Runs exactly
/// proof.siblings.size() compressions.
bool merkle_verify(const FieldElement& root, const FieldElement& leaf,
                   const MerkleProof& proof, const HashParams& params);

void save_proof(const MerkleProof& proof, const FieldSpec& field, const std::string& path);
MerkleProof load_proof(const std::string& path, const FieldSpec& field);

} // namespace zkhash
