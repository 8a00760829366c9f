#include "bisimlab/families.hpp"

#include <string>
#include <vector>

#include "bisimlab/errors.hpp"

namespace bisimlab {

namespace {

std::string bits_of(int value, int k) {
    std::string s(k, '0');
    for (int j = 0; j < k; ++j)
        if (value & (1 << (k - 1 - j)))
            s[j] = '1';
    return s;
}

// One bisplitter move: from bit pattern `id` under action a_i (1-based).
// Bit positions count from the most significant end, so bit i sits at
// 1 << (k - i).
int bisplitter_move(int id, int i, int k) {
    int below = (id >> (k - i - 1)) & 1; // bit i+1
    if (below == 0)
        return id;
    int flipped = 1 - ((id >> (k - i)) & 1);
    int kept = (id >> (k - i + 1)) << (k - i + 1);
    return kept | (flipped << (k - i));
}

} // namespace

Lts bisplitter(int k) {
    if (k < 1)
        throw InputError("k must be >= 1");
    if (k > 20)
        throw InputError("k must be <= 20");
    int n = 1 << k;
    std::vector<std::string> actions;
    for (int i = 1; i < k; ++i)
        actions.push_back("a" + std::to_string(i));
    std::vector<Transition> trans;
    trans.reserve(static_cast<size_t>(n) * (k - 1));
    for (int id = 0; id < n; ++id)
        for (int i = 1; i < k; ++i)
            trans.push_back({id, i - 1, bisplitter_move(id, i, k)});
    std::vector<int> block_of(n);
    std::vector<std::string> names(n);
    for (int id = 0; id < n; ++id) {
        block_of[id] = id >> (k - 1);
        names[id] = bits_of(id, k);
    }
    return Lts(n, std::move(actions), trans, Partition::from_block_of(std::move(block_of)),
               std::move(names));
}

int gadget_height(int k) {
    if (k < 2)
        throw InputError("k must be >= 2");
    int h = 0;
    while ((2 << h) < k - 1)
        ++h;
    return h;
}

int tree_label(std::string_view word, int k) {
    if (k < 2)
        throw InputError("k must be >= 2");
    int bin = 0;
    for (char c : word) {
        if (c != 'a' && c != 'b')
            throw InputError("gadget words use only 'a' and 'b'");
        bin = 2 * bin + (c == 'b' ? 1 : 0);
    }
    int label = bin + 1;
    return label < k - 1 ? label : k - 1;
}

Lts layered_bisplitter(int k) {
    if (k < 2)
        throw InputError("k must be >= 2");
    if (k > 10)
        throw InputError("k must be <= 10");
    int big_n = 1 << k;            // stake height and bitstring count
    int h = gadget_height(k);
    int tree_sz = (1 << (h + 1)) - 1;
    int n = big_n * big_n + big_n * tree_sz;
    int tree_base = big_n * big_n;

    auto stake_id = [&](int sigma, int level) { return sigma * big_n + (level - 1); };
    auto tree_id = [&](int sigma, int heap) { return tree_base + sigma * tree_sz + heap; };

    std::vector<Transition> trans;
    trans.reserve(static_cast<size_t>(n) * 2);
    std::vector<std::string> names(n);
    for (int sigma = 0; sigma < big_n; ++sigma) {
        std::string bits = bits_of(sigma, k);
        for (int level = 1; level <= big_n; ++level) {
            int id = stake_id(sigma, level);
            names[id] = "[" + bits + "," + std::to_string(level) + "]";
            int next = level < big_n ? stake_id(sigma, level + 1) : tree_id(sigma, 0);
            trans.push_back({id, 0, next});
            trans.push_back({id, 1, next});
        }
        // Gadget nodes in heap order: node i has word length floor(log2(i+1));
        // children sit at 2i+1 (action a) and 2i+2 (action b).
        for (int heap = 0; heap < tree_sz; ++heap) {
            int depth = 0;
            while ((2 << depth) <= heap + 1)
                ++depth;
            int word_bits = heap + 1 - (1 << depth);
            std::string word;
            for (int d = depth - 1; d >= 0; --d)
                word += (word_bits & (1 << d)) ? 'b' : 'a';
            int id = tree_id(sigma, heap);
            names[id] = "<" + bits + "," + (word.empty() ? std::string("-") : word) + ">";
            if (depth < h) {
                trans.push_back({id, 0, tree_id(sigma, 2 * heap + 1)});
                trans.push_back({id, 1, tree_id(sigma, 2 * heap + 2)});
            } else {
                for (int act = 0; act < 2; ++act) {
                    int j = tree_label(word + (act == 0 ? 'a' : 'b'), k);
                    int target = bisplitter_move(sigma, j, k);
                    trans.push_back({id, act, stake_id(target, 1)});
                }
            }
        }
    }

    // Blocks: per level a leading-0 and a leading-1 block, then one block for
    // every gadget node.
    std::vector<int> block_of(n);
    for (int sigma = 0; sigma < big_n; ++sigma) {
        int lead = sigma >> (k - 1);
        for (int level = 1; level <= big_n; ++level)
            block_of[stake_id(sigma, level)] = 2 * (level - 1) + lead;
        for (int heap = 0; heap < tree_sz; ++heap)
            block_of[tree_id(sigma, heap)] = 2 * big_n;
    }
    return Lts(n, {"a", "b"}, trans, Partition::from_block_of(std::move(block_of)),
               std::move(names));
}

Lts sequential_splitter(int n) {
    if (n <= 2)
        throw InputError("n must be > 2");
    std::vector<Transition> trans;
    trans.reserve(n);
    for (int s = 0; s + 1 < n; ++s)
        trans.push_back({s, 0, s + 1});
    trans.push_back({n - 1, 0, n - 1});
    std::vector<int> block_of(n, 0);
    block_of[n - 1] = 1;
    std::vector<std::string> names(n);
    for (int s = 0; s < n; ++s)
        names[s] = std::to_string(s + 1);
    return Lts(n, {"a"}, trans, Partition::from_block_of(std::move(block_of)),
               std::move(names));
}

Lts fanin_splitter(int k) {
    if (k < 1)
        throw InputError("k must be >= 1");
    if (k > 20)
        throw InputError("k must be <= 20");
    int fan = 1 << k;
    int n = fan + k;
    std::vector<Transition> trans;
    std::vector<int> block_of(n);
    std::vector<std::string> names(n);
    for (int i = 0; i < fan; ++i) {
        block_of[i] = 0;
        names[i] = "a" + std::to_string(i);
        for (int j = 0; j < k; ++j)
            if (i & (1 << j))
                trans.push_back({i, 0, fan + j});
    }
    for (int j = 0; j < k; ++j) {
        block_of[fan + j] = 1 + j;
        names[fan + j] = "b" + std::to_string(j);
    }
    return Lts(n, {"a"}, trans, Partition::from_block_of(std::move(block_of)),
               std::move(names));
}

Lts roberts_example() {
    // 0..5: the cycle c1..c6; then s11..s14, s21..s23, s31..s32, s41..s44,
    // s51..s53 in that order.
    static const int edges[][2] = {
        {0, 1},  {1, 2},  {2, 3},  {3, 4},  {4, 5},  {5, 0},
        {6, 0},  {7, 6},  {8, 7},  {9, 8},
        {10, 1}, {11, 10}, {12, 10},
        {13, 2}, {14, 2},
        {15, 3}, {16, 15}, {17, 15}, {18, 15},
        {19, 4}, {20, 4}, {21, 20},
    };
    static const int accepting[] = {0, 2, 3, 5, 6, 8, 9, 10, 11, 12, 13, 16, 17, 18, 20};
    static const char* state_names[] = {
        "c1", "c2", "c3", "c4", "c5", "c6",
        "s11", "s12", "s13", "s14",
        "s21", "s22", "s23",
        "s31", "s32",
        "s41", "s42", "s43", "s44",
        "s51", "s52", "s53",
    };
    int n = 22;
    std::vector<Transition> trans;
    for (const auto& e : edges)
        trans.push_back({e[0], 0, e[1]});
    std::vector<int> block_of(n, 1);
    for (int s : accepting)
        block_of[s] = 0;
    std::vector<std::string> names(state_names, state_names + n);
    return Lts(n, {"a"}, trans, Partition::from_block_of(std::move(block_of)),
               std::move(names));
}

std::optional<FamilyId> identify_family(const Lts& lts) {
    long long n = lts.state_count();
    if ((n & (n - 1)) == 0) {
        int k = 0;
        while ((1LL << k) < n)
            ++k;
        if (k >= 1 && k <= 20 && lts.structurally_equal(bisplitter(k)))
            return FamilyId{"bisplitter", k};
    }
    for (int k = 2; k <= 10; ++k) {
        long long big_n = 1LL << k;
        long long layered_n = big_n * big_n + big_n * ((1 << (gadget_height(k) + 1)) - 1);
        if (layered_n == n && lts.structurally_equal(layered_bisplitter(k)))
            return FamilyId{"layered", k};
        if (layered_n > n)
            break;
    }
    if (n > 2 && n <= 1000000 && lts.structurally_equal(sequential_splitter(static_cast<int>(n))))
        return FamilyId{"seqsplit", static_cast<int>(n)};
    for (int k = 1; k <= 20; ++k) {
        long long fan_n = (1LL << k) + k;
        if (fan_n == n && lts.structurally_equal(fanin_splitter(k)))
            return FamilyId{"fanin", k};
        if (fan_n > n)
            break;
    }
    if (n == 22 && lts.structurally_equal(roberts_example()))
        return FamilyId{"roberts-example", 0};
    return std::nullopt;
}

} // namespace bisimlab
