#include "bisimlab/roberts.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "bisimlab/errors.hpp"

namespace bisimlab {

namespace {

struct SccResult {
    std::vector<int> comp_of;
    int comp_count = 0;
};

// Iterative Tarjan over the union of all action relations.
SccResult strongly_connected_components(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    SccResult res;
    res.comp_of.assign(n, -1);
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stack;
    struct Frame {
        int v;
        size_t child;
    };
    std::vector<Frame> frames;
    int next_index = 0;
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1)
            continue;
        frames.push_back({root, 0});
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.child < adj[f.v].size()) {
                int w = adj[f.v][f.child++];
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                int v = f.v;
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().v] = std::min(low[frames.back().v], low[v]);
                if (low[v] == index[v]) {
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        res.comp_of[w] = res.comp_count;
                        if (w == v)
                            break;
                    }
                    ++res.comp_count;
                }
            }
        }
    }
    return res;
}

} // namespace

std::vector<EndStructure> end_structures(const Lts& lts) {
    int n = lts.state_count();
    std::vector<std::vector<int>> adj(n);
    for (int s = 0; s < n; ++s)
        for (int a = 0; a < lts.action_count(); ++a)
            for (int t : lts.successors(s, a))
                adj[s].push_back(t);

    SccResult scc = strongly_connected_components(adj);
    std::vector<char> has_exit(scc.comp_count, 0);
    for (int s = 0; s < n; ++s)
        for (int t : adj[s])
            if (scc.comp_of[s] != scc.comp_of[t])
                has_exit[scc.comp_of[s]] = 1;

    std::vector<std::vector<int>> members(scc.comp_count);
    for (int s = 0; s < n; ++s)
        members[scc.comp_of[s]].push_back(s);

    std::vector<EndStructure> out;
    for (int c = 0; c < scc.comp_count; ++c) {
        if (has_exit[c])
            continue;
        EndStructure es;
        es.states = members[c]; // ascending by construction
        out.push_back(std::move(es));
    }
    std::sort(out.begin(), out.end(), [](const EndStructure& a, const EndStructure& b) {
        return a.states.front() < b.states.front();
    });

    if (!(lts.deterministic() && lts.action_count() == 1))
        return out;

    // Deterministic one-action: each closed set is a simple cycle; hang the
    // incoming trees off their entry states in breadth-first order.
    std::vector<int> cycle_slot(n, -1); // position of a cycle state in its structure
    std::vector<int> structure_of(n, -1);
    for (size_t i = 0; i < out.size(); ++i) {
        EndStructure& es = out[i];
        int start = es.states.front();
        int cur = start;
        do {
            cycle_slot[cur] = static_cast<int>(es.cycle.size());
            structure_of[cur] = static_cast<int>(i);
            es.cycle.push_back(cur);
            cur = lts.successors(cur, 0).front();
        } while (cur != start);
        es.trees.assign(es.cycle.size(), {});
    }
    std::vector<std::vector<int>> preds(n);
    for (int s = 0; s < n; ++s)
        preds[lts.successors(s, 0).front()].push_back(s); // ascending in s
    for (EndStructure& es : out) {
        for (size_t i = 0; i < es.cycle.size(); ++i) {
            std::vector<int> queue{es.cycle[i]};
            for (size_t head = 0; head < queue.size(); ++head) {
                for (int p : preds[queue[head]]) {
                    if (cycle_slot[p] != -1)
                        continue;
                    es.trees[i].push_back(p);
                    queue.push_back(p);
                }
            }
        }
    }
    return out;
}

namespace {

// Failure function f[i] = longest proper border of word[0..i).
std::vector<int> failure_function(std::span<const int> w, long long* comparisons) {
    int L = static_cast<int>(w.size());
    std::vector<int> f(L + 1, 0);
    for (int i = 2; i <= L; ++i) {
        int j = f[i - 1];
        while (true) {
            if (comparisons != nullptr)
                ++*comparisons;
            if (w[i - 1] == w[j]) {
                f[i] = j + 1;
                break;
            }
            if (j == 0) {
                f[i] = 0;
                break;
            }
            j = f[j];
        }
    }
    return f;
}

PeriodDecomposition least_repeating_prefix_counted(std::span<const int> word,
                                                   long long* comparisons) {
    if (word.empty())
        throw InputError("word must be non-empty");
    int L = static_cast<int>(word.size());
    std::vector<int> f = failure_function(word, comparisons);
    int p = L - f[L];
    if (L % p != 0)
        p = L;
    return {std::vector<int>(word.begin(), word.begin() + p), L / p};
}

// Booth's least-rotation algorithm.
int least_rotation_offset(std::span<const int> w, long long* comparisons) {
    int n = static_cast<int>(w.size());
    std::vector<int> f(2 * n, -1);
    int k = 0;
    for (int j = 1; j < 2 * n; ++j) {
        int sj = w[j % n];
        int i = f[j - k - 1];
        while (i != -1) {
            if (comparisons != nullptr)
                ++*comparisons;
            if (sj == w[(k + i + 1) % n])
                break;
            if (sj < w[(k + i + 1) % n])
                k = j - i - 1;
            i = f[i];
        }
        if (i == -1) {
            if (comparisons != nullptr)
                ++*comparisons;
            if (sj != w[(k + i + 1) % n]) {
                if (sj < w[k % n])
                    k = j;
                f[j - k] = -1;
            } else {
                f[j - k] = i + 1;
            }
        } else {
            f[j - k] = i + 1;
        }
    }
    return k;
}

std::vector<int> rotate_left(std::span<const int> w, int by) {
    std::vector<int> out;
    out.reserve(w.size());
    out.insert(out.end(), w.begin() + by, w.end());
    out.insert(out.end(), w.begin(), w.begin() + by);
    return out;
}

std::vector<int> rotate_right_once(const std::vector<int>& w) {
    std::vector<int> out;
    out.reserve(w.size());
    out.push_back(w.back());
    out.insert(out.end(), w.begin(), w.end() - 1);
    return out;
}

} // namespace

PeriodDecomposition least_repeating_prefix(std::span<const int> word) {
    return least_repeating_prefix_counted(word, nullptr);
}

RotationResult canonical_rotation(std::span<const int> word) {
    if (word.empty())
        throw InputError("word must be non-empty");
    int k = least_rotation_offset(word, nullptr);
    return {rotate_left(word, k), k};
}

RobertsResult roberts_partition(const Lts& lts) {
    if (lts.action_count() != 1 || !lts.deterministic())
        throw UnsupportedInputError(
            "cycle classification needs a deterministic one-action system");
    int n = lts.state_count();
    const Partition& pi0 = lts.initial_partition();
    long long comparisons = 0;

    std::vector<EndStructure> structures = end_structures(lts);
    std::vector<ClassKey> keys(n);
    std::vector<char> labeled(n, 0);
    for (const EndStructure& es : structures) {
        int cycle_len = static_cast<int>(es.cycle.size());
        std::vector<int> word(cycle_len);
        for (int i = 0; i < cycle_len; ++i)
            word[i] = pi0.block_of(es.cycle[i]);
        PeriodDecomposition period = least_repeating_prefix_counted(word, &comparisons);
        int p = static_cast<int>(period.period.size());
        int offset = least_rotation_offset(period.period, &comparisons);
        std::vector<int> anchor = rotate_left(period.period, offset);
        // All p rotations of the anchor, so cycle states share storage work.
        std::vector<std::vector<int>> rotations(p);
        for (int r = 0; r < p; ++r)
            rotations[r] = rotate_left(anchor, r);
        for (int i = 0; i < cycle_len; ++i) {
            int phase = ((i - offset) % p + p) % p;
            keys[es.cycle[i]] = ClassKey{{}, rotations[phase], anchor};
            labeled[es.cycle[i]] = 1;
        }
        // Tree states fold their symbol onto the key of the state they step
        // into; parents precede children in the stored breadth-first order.
        for (const std::vector<int>& tree : es.trees) {
            for (int u : tree) {
                int parent = lts.successors(u, 0).front();
                const ClassKey& pk = keys[parent];
                int x = pi0.block_of(u);
                ClassKey ck;
                ck.anchor = pk.anchor;
                if (pk.prefix.empty()) {
                    ++comparisons;
                    if (x == pk.rotation.back()) {
                        ck.rotation = rotate_right_once(pk.rotation);
                    } else {
                        ck.prefix = {x};
                        ck.rotation = pk.rotation;
                    }
                } else {
                    ck.prefix.reserve(pk.prefix.size() + 1);
                    ck.prefix.push_back(x);
                    ck.prefix.insert(ck.prefix.end(), pk.prefix.begin(), pk.prefix.end());
                    ck.rotation = pk.rotation;
                }
                keys[u] = std::move(ck);
                labeled[u] = 1;
            }
        }
    }
    for (int s = 0; s < n; ++s)
        if (!labeled[s])
            throw std::logic_error("state missed by the cycle/tree labeling");

    // Group equal keys; (prefix, rotation) determines the class.
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> ids;
    std::vector<int> block_of(n);
    for (int s = 0; s < n; ++s) {
        auto key = std::make_pair(keys[s].prefix, keys[s].rotation);
        auto [it, fresh] = ids.try_emplace(std::move(key), static_cast<int>(ids.size()));
        (void)fresh;
        block_of[s] = it->second;
    }
    RobertsResult result{Partition::from_block_of(std::move(block_of)), std::move(keys),
                         comparisons};
    return result;
}

} // namespace bisimlab
