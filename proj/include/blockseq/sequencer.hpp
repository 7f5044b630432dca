#pragma once

// The constructive pipeline. A random class partition is resampled
// Moser-Tardos style until no block fits inside two cyclically adjacent
// classes, each class gets left/right buffers, deficient classes are repaired
// by moving single vertices in from large classes, and the classes are
// concatenated into a cyclic sequencing that is verified before being
// returned.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "blockseq/design.hpp"
#include "blockseq/verifier.hpp"

namespace blockseq {

struct ClassPartition {
    std::uint32_t s = 0;               // class count
    std::vector<std::uint32_t> label;  // vertex -> class in Z_s
};

struct PartitionResult {
    ClassPartition partition;
    std::uint64_t resample_count = 0;
};

// A class with its buffers. Rules, for buffer width ell-1:
//   (B1) |S| <= ell-2        : left = right = S
//   (B2) ell-1 <= |S| <= 2ell-2 : |left| = |right| = ell-1, left u right = S
//   (B3) |S| >= 2ell-1       : |left| = |right| = ell-1, left n right = empty
// All three vectors are kept sorted.
struct BufferedClass {
    std::vector<Vertex> members;
    std::vector<Vertex> left;
    std::vector<Vertex> right;
};

// Cyclically ordered classes partitioning the vertex set, built for a given
// ell. Valid when every class is independent (P1) and every
// right-buffer u next-left-buffer is independent (P2).
struct Presequencing {
    std::vector<BufferedClass> classes;
    std::uint32_t ell = 0;
};

enum class SequenceMode { direct, truncate };

struct RunOptions {
    std::uint64_t seed = 1;
    SequenceMode mode = SequenceMode::direct;
    std::optional<std::uint32_t> s_override;       // class count; default ceil(sigma)
    std::optional<std::uint64_t> max_resamples;    // default 100 * block count
    bool check_invariants = false;                 // verify (P1)/(P2) and structure as the run goes
};

struct RunReport {
    std::uint64_t seed = 0;
    std::uint32_t ell = 0;
    SequenceMode mode = SequenceMode::direct;
    double sigma = 0.0;
    std::uint32_t s = 0;
    std::uint64_t resample_count = 0;
    std::uint64_t repair_moves = 0;
    double partition_ms = 0.0;
    double repair_ms = 0.0;
    double assemble_ms = 0.0;
    double verify_ms = 0.0;
    bool verified = false;
};

// True iff the distinct labels are {i} or {i, i+1 mod s} for some i.
bool is_bad_block(std::span<const std::uint32_t> labels, std::uint32_t s);

// Uniform labels, then Moser-Tardos resampling: pop a bad block off a FIFO
// work queue, redraw the labels of its vertices, and re-examine exactly the
// blocks sharing a vertex with it. Deterministic for a fixed seed. Throws
// NonconvergenceError once resample_count would exceed max_resamples.
// Requires s >= 3.
PartitionResult random_partition(const PartialSystem& sys, std::uint32_t s, std::uint64_t seed,
                                 std::uint64_t max_resamples);

// Buffers chosen deterministically from the sorted members: (B1) copies S,
// (B2)/(B3) take the first and last ell-1 elements. ell == 1 gives empty
// buffers, matching the rules with width 0.
BufferedClass make_buffered(std::vector<Vertex> members, std::uint32_t ell);

// Groups vertices by class label and buffers every class.
Presequencing buffered_partition(const ClassPartition& partition, std::uint32_t ell);

struct RepairResult {
    Presequencing pre;
    std::uint64_t moves = 0;
};

// Repeatedly picks the lowest-index deficient class and moves in the
// smallest-id vertex that is outside every buffer and whose move cannot put a
// block inside the deficient class's merged windows. Each move raises one
// deficient class size by one; source classes always have >= 2*ell-1
// members. Throws RepairStuckError when no such vertex exists.
RepairResult repair(const PartialSystem& sys, Presequencing pre, bool check_invariants = false);

// Concatenates the classes in cyclic order, each emitted as
// left-only, left-and-right, interior, right-only (all ascending), so a
// class's first ell-1 positions are exactly its left buffer and its last
// ell-1 exactly its right buffer. Requires every class nondeficient.
Sequencing assemble(const Presequencing& pre);

struct SequenceResult {
    Sequencing seq;
    RunReport report;
};

// Full pipeline: (optionally truncate to order t+1) -> partition with
// s = ceil(sigma) classes -> buffer -> repair -> assemble, then verify the
// result against the original system at ell (cyclic) and record the verdict.
SequenceResult sequence(const PartialSystem& sys, std::uint32_t ell, const RunOptions& options = {});

// --- helpers shared by checks and tests ---

// Sum over classes of max(0, ell-1 - |members|); repair performs exactly this
// many moves.
std::uint64_t deficiency_potential(const Presequencing& pre);

// True iff the buffers satisfy the (B1)-(B3) rule matching the class size.
bool buffers_well_formed(const BufferedClass& cls, std::uint32_t ell);

// Partition property plus (P1) and (P2) against the system.
bool presequencing_valid(const PartialSystem& sys, const Presequencing& pre);

}  // namespace blockseq
