#pragma once

// Core data model for partial block systems: n vertices, k-element blocks,
// with every t-set of vertices contained in at most lambda blocks. Blocks are
// a collection (duplicates allowed), stored flat with a vertex-to-block index
// so that operations on systems with tens of millions of blocks only touch
// the blocks they need.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "blockseq/errors.hpp"

namespace blockseq {

using Vertex = std::uint32_t;

struct Params {
    std::uint32_t n = 0;       // vertex count
    std::uint32_t k = 0;       // block size
    std::uint32_t t = 0;       // covering order
    std::uint32_t lambda = 1;  // max t-set multiplicity

    // Requires n >= k > t >= 2 and lambda >= 1.
    void check() const;
};

// A block is a sorted list of k distinct vertex ids.
using Block = std::vector<Vertex>;

// Immutable after construction; safe to share across threads.
class PartialSystem {
public:
    // Takes block data flattened as m*k vertex ids. Each block is sorted on
    // ingest; repeated or out-of-range vertices raise StructuralError naming
    // the block index.
    PartialSystem(Params params, std::vector<Vertex> flat_blocks);

    static PartialSystem from_blocks(Params params, const std::vector<Block>& blocks);

    const Params& params() const noexcept { return params_; }
    std::size_t block_count() const noexcept { return flat_.size() / params_.k; }
    std::span<const Vertex> block(std::size_t i) const noexcept {
        return {flat_.data() + i * params_.k, params_.k};
    }
    // Indices of blocks containing v, in increasing block order.
    std::span<const std::uint32_t> blocks_containing(Vertex v) const noexcept {
        return {index_blocks_.data() + index_offsets_[v],
                index_blocks_.data() + index_offsets_[v + 1]};
    }
    const std::vector<Vertex>& flat_blocks() const noexcept { return flat_; }

private:
    Params params_;
    std::vector<Vertex> flat_;                   // m*k ids, each block sorted
    std::vector<std::uint64_t> index_offsets_;   // n+1 entries
    std::vector<std::uint32_t> index_blocks_;    // CSR payload of block ids
};

struct ValidationReport {
    bool valid = false;
    std::uint64_t max_multiplicity = 0;           // largest number of blocks over any t-set
    std::optional<Block> witness;                 // one offending t-set when invalid
};

// Exact maximum t-set multiplicity, counted over t-subsets of blocks only
// (t-sets inside no block have multiplicity 0 and are never enumerated).
ValidationReport validate(const PartialSystem& sys);

// True iff no block is a subset of the candidate set. Only blocks touching
// the candidate are examined, via the vertex index.
bool is_independent(const PartialSystem& sys, std::span<const Vertex> candidate);

// True iff every t-set lies in exactly lambda blocks; equivalent to validity
// plus block_count * C(k,t) == lambda * C(n,t), checked in exact arithmetic.
bool is_complete(const PartialSystem& sys);

// Drops the k-t-1 largest vertex ids from every block, giving an
// (n, t+1, t)_lambda system. Duplicates created by truncation are retained.
// Requires k >= t+2.
PartialSystem truncate_to_order(const PartialSystem& sys);

}  // namespace blockseq
