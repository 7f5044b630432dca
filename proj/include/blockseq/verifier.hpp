#pragma once

// Ground-truth checking of (cyclic) ell-goodness. A sequencing is ell-good
// when every window of ell consecutive positions holds an independent set;
// equivalently, every block's span (the shortest window containing it)
// exceeds ell. Goodness is decided block-side, one span per block, which is
// what makes systems with ~10^7 blocks checkable in seconds.

#include <cstdint>
#include <span>
#include <vector>

#include "blockseq/design.hpp"

namespace blockseq {

// A bijection positions {0..n-1} -> vertices, with its inverse.
class Sequencing {
public:
    // Takes the position -> vertex array; must be a permutation of 0..n-1.
    explicit Sequencing(std::vector<Vertex> order);

    static Sequencing identity(std::uint32_t n);

    std::uint32_t n() const noexcept { return static_cast<std::uint32_t>(order_.size()); }
    Vertex at(std::uint32_t position) const noexcept { return order_[position]; }
    std::uint32_t position_of(Vertex v) const noexcept { return position_[v]; }
    const std::vector<Vertex>& order() const noexcept { return order_; }
    const std::vector<std::uint32_t>& positions() const noexcept { return position_; }

private:
    std::vector<Vertex> order_;          // position -> vertex
    std::vector<std::uint32_t> position_;  // vertex -> position
};

// Smallest w such that the positions fit in some cyclic window of length w:
// n minus the largest cyclic gap between consecutive sorted positions, plus
// one. Duplicate positions raise InputError.
std::uint32_t cyclic_span(std::span<const std::uint32_t> positions, std::uint32_t n);

// max position - min position + 1.
std::uint32_t linear_span(std::span<const std::uint32_t> positions);

struct SpanProfile {
    std::vector<std::uint32_t> cyclic;  // per block
    std::vector<std::uint32_t> linear;  // per block; k <= cyclic <= linear <= n
};

SpanProfile span_profile(const PartialSystem& sys, const Sequencing& seq);

// True iff every block's (cyclic or linear) span exceeds ell.
// Requires 1 <= ell <= n; windows longer than n are not defined.
bool is_ell_good(const PartialSystem& sys, const Sequencing& seq, std::uint32_t ell, bool cyclic);

// (minimum span over blocks) - 1; n for an empty block collection.
std::uint32_t max_good_ell(const PartialSystem& sys, const Sequencing& seq, bool cyclic);

// The ell cyclically consecutive vertices starting at `start` (taken mod n);
// guaranteed independent when the sequencing is cyclically ell-good, which is
// checked (ContractError otherwise).
std::vector<Vertex> extract_independent_set(const PartialSystem& sys, const Sequencing& seq,
                                            std::uint32_t ell, std::uint32_t start);

// Splits positions into ceil(n/ell) runs of at most ell consecutive vertices;
// every class is independent when the sequencing is (linearly) ell-good,
// which is checked (ContractError otherwise).
std::vector<std::vector<Vertex>> coloring_from_sequencing(const PartialSystem& sys,
                                                          const Sequencing& seq,
                                                          std::uint32_t ell);

// The n cyclic windows of length ell, each carrying weight 1/ell. Every
// vertex lies in exactly ell windows, so its covering weight is exactly 1 and
// the total weight is n/ell. coverage[] holds the per-vertex window counts as
// actually enumerated. The caller is responsible for the sequencing being
// cyclically ell-good (this function never sees the system).
struct FractionalCover {
    std::uint32_t n = 0;              // number of windows
    std::uint32_t ell = 0;            // each window weighs 1/ell
    std::vector<std::uint32_t> coverage;  // per-vertex count of covering windows
};

FractionalCover fractional_cover_weights(const Sequencing& seq, std::uint32_t ell);

}  // namespace blockseq
