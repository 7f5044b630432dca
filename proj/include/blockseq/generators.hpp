#pragma once

// Instance sources: the Bose and Skolem constructions for Steiner triple
// systems and a greedy randomized generator for partial systems with
// arbitrary (n, k, t, lambda).

#include <cstdint>

#include "blockseq/design.hpp"

namespace blockseq {

// Complete (n,3,2)_1 system for n == 3 (mod 6), n >= 9, built on
// Z_{n/3} x {0,1,2} and relabelled row-major: (x, j) -> 3x + j.
PartialSystem bose_sts(std::uint32_t n);

// Complete (n,3,2)_1 system for n == 1 (mod 6), n >= 7, built on
// {infinity} + Z_{2q} x {0,1,2} with q = (n-1)/6, relabelled
// (x, j) -> 3x + j and infinity -> n - 1.
PartialSystem skolem_sts(std::uint32_t n);

// Greedy randomized growth: draw uniform k-sets and accept one iff acceptance
// keeps every t-subset multiplicity <= lambda. Stops at target_blocks accepted
// blocks or after 200*target_blocks consecutive rejections, so it may return
// fewer blocks than requested. Deterministic for a fixed seed.
PartialSystem random_partial(Params params, std::uint64_t target_blocks, std::uint64_t seed);

}  // namespace blockseq
