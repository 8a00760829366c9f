#ifndef BISIMLAB_FAMILIES_HPP
#define BISIMLAB_FAMILIES_HPP

#include <optional>
#include <string>
#include <string_view>

#include "bisimlab/lts.hpp"

namespace bisimlab {

/// Bisplitter over bitstrings of length k (k >= 1): 2^k states named by their
/// bit pattern (state id = integer value, most significant bit first), actions
/// a1..a(k-1).  Under action ai a state keeps still when bit i+1 is 0 and
/// otherwise flips bit i and zeroes everything below it.  The initial
/// partition splits on the leading bit.  Every run to stability moves exactly
/// (k-1)*2^(k-1) states in total.
Lts bisplitter(int k);

/// Height of the decision gadget used by layered_bisplitter:
/// ceil(log2((k-1)/2)), clamped at zero.
int gadget_height(int k);

/// Index in 1..k-1 encoded by a gadget word over {a,b}: one plus the value of
/// the word read as binary (a=0, b=1), capped at k-1.
int tree_label(std::string_view word, int k);

/// Layered bisplitter (k >= 2): per bitstring sigma, a stake of 2^k counter
/// states feeding a binary decision gadget of height gadget_height(k) whose
/// leaf exits re-enter the stakes along the bisplitter moves selected by
/// tree_label.  Two actions a, b.  State ids: all stakes first ([sigma, l] at
/// sigma*2^k + l-1), then per sigma the gadget nodes in breadth-first order.
/// The initial partition separates stake levels by leading bit and lumps all
/// gadget nodes into one block.
Lts layered_bisplitter(int k);

/// Chain 1 -> 2 -> ... -> n with a self-loop at n (n > 2), one action, state
/// ids 0..n-1 for names "1".."n".  Initial partition {1..n-1 | n}.  Exactly
/// one valid refinement exists at every step.
Lts sequential_splitter(int n);

/// Fan-in splitter (k >= 1): states a_0..a_(2^k-1) then b_0..b_(k-1); a_i
/// moves to b_j exactly when bit j of i is set.  Initial partition: all a's
/// in one block, each b a singleton.  One parallel round reaches stability.
Lts fanin_splitter(int k);

/// The 22-state, one-action worked example: a six-cycle c1..c6 with five
/// trees hanging off it, initial partition accepting/non-accepting with the
/// accepting block listed first.  Edges are transcribed from a fixed table.
Lts roberts_example();

struct FamilyId {
    std::string name; // "bisplitter", "layered", "seqsplit", "fanin", "roberts-example"
    int param;        // k or n; 0 when the family takes no parameter
    bool operator==(const FamilyId&) const = default;
};

/// Recognizes the generated families by structural comparison against a
/// regenerated candidate of the matching size.  Display names are ignored.
std::optional<FamilyId> identify_family(const Lts& lts);

} // namespace bisimlab

#endif
