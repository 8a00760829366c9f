#include "bisimlab/oracle_es.hpp"

#include <utility>

#include "bisimlab/errors.hpp"
#include "bisimlab/families.hpp"
#include "bisimlab/oracle.hpp"
#include "bisimlab/roberts.hpp"

namespace bisimlab {

Partition end_structure_partition(const Lts& lts) {
    int n = lts.state_count();
    Partition classes = bisimilarity_oracle(lts);
    std::vector<char> seeded(classes.block_count(), 0);
    for (const EndStructure& es : end_structures(lts))
        for (int s : es.states)
            seeded[classes.block_of(s)] = 1;

    const Partition& pi0 = lts.initial_partition();
    // Two id spaces before renumbering: class ids for seeded classes, shifted
    // original block ids for everything else.
    std::vector<int> raw(n);
    for (int s = 0; s < n; ++s) {
        int c = classes.block_of(s);
        raw[s] = seeded[c] ? c : classes.block_count() + pi0.block_of(s);
    }
    std::vector<int> remap(classes.block_count() + pi0.block_count(), -1);
    std::vector<int> block_of(n);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (remap[raw[s]] == -1)
            remap[raw[s]] = next++;
        block_of[s] = remap[raw[s]];
    }
    return Partition::from_block_of(std::move(block_of));
}

RefinementTrace run_with_oracle(const Lts& lts, Strategy strategy) {
    return run_to_stable_from(lts, end_structure_partition(lts), strategy);
}

Partition project_prefix11(const Partition& pi, int k) {
    if (k < 3)
        throw InputError("k must be >= 3");
    if (pi.state_count() != (1 << k))
        throw InputError("partition does not cover 2^k states");
    int m = 1 << (k - 2);
    std::vector<int> remap(pi.block_count(), -1);
    std::vector<int> block_of(m);
    int next = 0;
    for (int sigma = 0; sigma < m; ++sigma) {
        int b = pi.block_of(3 * m + sigma);
        if (remap[b] == -1)
            remap[b] = next++;
        block_of[sigma] = remap[b];
    }
    return Partition::from_block_of(std::move(block_of));
}

Partition project_level(const Partition& pi, int k, int level) {
    if (k < 2 || k > 10)
        throw InputError("k must be in [2, 10]");
    int side = 1 << k;
    if (level < 1 || level > side)
        throw InputError("level must be between 1 and 2^k");
    long long tree_size = (2LL << gadget_height(k)) - 1;
    long long expected = static_cast<long long>(side) * (side + tree_size);
    if (pi.state_count() != expected)
        throw InputError("partition does not cover the layered system");
    std::vector<int> remap(pi.block_count(), -1);
    std::vector<int> block_of(side);
    int next = 0;
    for (int sigma = 0; sigma < side; ++sigma) {
        int b = pi.block_of(sigma * side + (level - 1));
        if (remap[b] == -1)
            remap[b] = next++;
        block_of[sigma] = remap[b];
    }
    return Partition::from_block_of(std::move(block_of));
}

std::vector<Partition> dedup_consecutive(const std::vector<Partition>& seq) {
    std::vector<Partition> out;
    for (const Partition& p : seq)
        if (out.empty() || !out.back().same_blocks(p))
            out.push_back(p);
    return out;
}

} // namespace bisimlab
