#include "bisimlab/parallel.hpp"

#include <utility>

#include "bisimlab/engine.hpp"
#include "bisimlab/errors.hpp"
#include "enumerate_detail.hpp"

namespace bisimlab {

std::optional<Partition> parallel_round(const Lts& lts, const Partition& pi) {
    return refine_step(lts, pi, Strategy::FullSignature);
}

RefinementTrace run_parallel_rounds(const Lts& lts) {
    return run_to_stable(lts, Strategy::FullSignature);
}

RefinementTrace run_parallel_rounds_from(const Lts& lts, Partition start) {
    return run_to_stable_from(lts, std::move(start), Strategy::FullSignature);
}

std::vector<Partition> enumerate_valid_refinements(const Lts& lts, const Partition& pi,
                                                   long long max_results) {
    if (max_results < 0)
        throw InputError("max_results must be >= 0");
    return detail::enumerate_refinements(lts, pi, max_results);
}

PointerJumpTrace pointer_jump_distances(const Lts& lts) {
    if (lts.action_count() != 1 || !lts.deterministic())
        throw UnsupportedInputError(
            "pointer jumping needs a deterministic one-action system");
    int n = lts.state_count();
    std::vector<int> ptr(n);
    for (int s = 0; s < n; ++s)
        ptr[s] = lts.successors(s, 0).front();

    // Reject any cycle longer than a self-loop; distances would be undefined.
    std::vector<int> color(n, 0);
    for (int s = 0; s < n; ++s) {
        if (color[s] != 0)
            continue;
        std::vector<int> path;
        int cur = s;
        while (color[cur] == 0) {
            color[cur] = 1;
            path.push_back(cur);
            cur = ptr[cur];
        }
        if (color[cur] == 1 && ptr[cur] != cur)
            throw UnsupportedInputError("pointer jumping needs every cycle to be a self-loop");
        for (int v : path)
            color[v] = 2;
    }

    PointerJumpTrace trace;
    std::vector<int> dist(n);
    for (int s = 0; s < n; ++s)
        dist[s] = ptr[s] == s ? 0 : 1;
    trace.distances.push_back(dist);
    std::vector<int> next_ptr(n), next_dist(n);
    while (true) {
        bool jumped = false;
        for (int s = 0; s < n; ++s) {
            next_ptr[s] = ptr[ptr[s]];
            next_dist[s] = dist[s] + dist[ptr[s]];
            if (next_ptr[s] != ptr[s])
                jumped = true;
        }
        if (!jumped)
            break;
        ptr.swap(next_ptr);
        dist.swap(next_dist);
        trace.distances.push_back(dist);
        ++trace.rounds;
    }
    return trace;
}

} // namespace bisimlab
