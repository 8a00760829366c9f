#ifndef BISIMLAB_ROBERTS_HPP
#define BISIMLAB_ROBERTS_HPP

#include <span>
#include <vector>

#include "bisimlab/lts.hpp"
#include "bisimlab/partition.hpp"

namespace bisimlab {

/// A minimal transition-closed set of states: a bottom strongly connected
/// component without outgoing edges (an isolated state counts).  For
/// deterministic one-action systems the closed set is a simple cycle and the
/// decomposition fields are filled; otherwise they stay empty.
struct EndStructure {
    std::vector<int> states;             // ascending
    std::vector<int> cycle;              // cycle order, starting at the smallest state
    std::vector<std::vector<int>> trees; // per cycle state, the tree states whose
                                         // walk first hits the cycle there (BFS order)
};

/// All end structures, ordered by smallest member.  Every state of a finite
/// system can walk into one.
std::vector<EndStructure> end_structures(const Lts& lts);

/// Shortest word v with w = v^e (e maximal), via the classic failure-function
/// period argument.
struct PeriodDecomposition {
    std::vector<int> period;
    int exponent;
};
PeriodDecomposition least_repeating_prefix(std::span<const int> word);

/// Lexicographically least rotation of a word and the left-rotation offset
/// that produces it.  Symbols compare as integers.
struct RotationResult {
    std::vector<int> least;
    int offset;
};
RotationResult canonical_rotation(std::span<const int> word);

/// Equivalence-class label of a state: the eventually periodic word of
/// initial-partition blocks its run produces, as an irreducible prefix plus a
/// rotation of the cycle's canonical period.  Two states are bisimilar
/// exactly when their keys are equal.
struct ClassKey {
    std::vector<int> prefix;
    std::vector<int> rotation;
    std::vector<int> anchor; // canonical (least) rotation of the period
    bool operator==(const ClassKey&) const = default;
};

struct RobertsResult {
    Partition partition;
    std::vector<ClassKey> keys; // one per state
    long long symbol_comparisons;
};

/// Bisimulation classes of a deterministic one-action system: per cycle, the
/// canonical period is found once and rotations are assigned by position;
/// tree states fold their block symbol onto the child key walking outward,
/// shrinking back onto the cycle classes where the fold allows it.  Symbol
/// comparisons stay linear in the state count.
RobertsResult roberts_partition(const Lts& lts);

} // namespace bisimlab

#endif
