#include "bisimlab/ltsp.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bisimlab/errors.hpp"

namespace bisimlab {

namespace {

constexpr long long kMaxStates = 10'000'000;
constexpr long long kMaxTransitions = 100'000'000;
constexpr long long kMaxActions = 1'000'000;

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string w;
    while (ss >> w)
        out.push_back(std::move(w));
    return out;
}

long long parse_number(const std::string& tok, const char* what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw InputError(std::string("malformed ") + what + " '" + tok + "'");
    return value;
}

} // namespace

std::string write_ltsp(const Lts& lts) {
    std::ostringstream out;
    out << "LTSP 1\n";
    out << "states " << lts.state_count() << "\n";
    out << "actions";
    for (const std::string& a : lts.actions())
        out << ' ' << a;
    out << "\n";
    out << "transitions " << lts.transition_count() << "\n";
    for (const Transition& t : lts.transitions())
        out << t.src << ' ' << lts.actions()[t.action] << ' ' << t.dst << "\n";
    const Partition& pi = lts.initial_partition();
    out << "partition " << pi.block_count() << "\n";
    for (int s = 0; s < lts.state_count(); ++s) {
        if (s > 0)
            out << ' ';
        out << pi.block_of(s);
    }
    out << "\n";
    return out.str();
}

Lts parse_ltsp(const std::string& text) {
    std::vector<std::string> lines;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        if (nl == std::string::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    size_t cur = 0;
    auto next_line = [&](const char* what) -> const std::string& {
        if (cur >= lines.size())
            throw InputError(std::string("unexpected end of input, expected ") + what);
        return lines[cur++];
    };

    if (tokens_of(next_line("'LTSP 1'")) != std::vector<std::string>{"LTSP", "1"})
        throw InputError("first line must be 'LTSP 1'");

    auto header = [&](const char* keyword, long long lo, long long hi) {
        std::vector<std::string> t = tokens_of(next_line(keyword));
        if (t.size() != 2 || t[0] != keyword)
            throw InputError(std::string("expected '") + keyword + " <count>' line");
        long long v = parse_number(t[1], keyword);
        if (v < lo || v > hi)
            throw InputError(std::string(keyword) + " count out of range");
        return v;
    };

    long long n = header("states", 1, kMaxStates);

    std::vector<std::string> action_tokens = tokens_of(next_line("'actions ...'"));
    if (action_tokens.empty() || action_tokens[0] != "actions")
        throw InputError("expected 'actions ...' line");
    std::vector<std::string> actions(action_tokens.begin() + 1, action_tokens.end());
    if (static_cast<long long>(actions.size()) > kMaxActions)
        throw InputError("actions count out of range");
    std::unordered_map<std::string, int> action_index;
    for (size_t i = 0; i < actions.size(); ++i)
        if (!action_index.emplace(actions[i], static_cast<int>(i)).second)
            throw InputError("duplicate action name '" + actions[i] + "'");

    long long m = header("transitions", 0, kMaxTransitions);
    std::vector<Transition> transitions;
    transitions.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        std::vector<std::string> t = tokens_of(next_line("a transition line"));
        if (t.size() != 3)
            throw InputError("transition line must be '<src> <action> <dst>'");
        long long src = parse_number(t[0], "source state");
        long long dst = parse_number(t[2], "target state");
        if (src < 0 || src >= n || dst < 0 || dst >= n)
            throw InputError("transition state out of range on line '" + t[0] + " " + t[1] +
                             " " + t[2] + "'");
        auto it = action_index.find(t[1]);
        if (it == action_index.end())
            throw InputError("unknown action '" + t[1] + "'");
        transitions.push_back(
            {static_cast<int>(src), it->second, static_cast<int>(dst)});
    }

    long long b = header("partition", 1, n);
    std::vector<std::string> id_tokens = tokens_of(next_line("the block id line"));
    if (static_cast<long long>(id_tokens.size()) != n)
        throw InputError("expected " + std::to_string(n) + " block ids, got " +
                         std::to_string(id_tokens.size()));
    std::vector<int> block_of(static_cast<size_t>(n));
    for (long long s = 0; s < n; ++s) {
        long long id = parse_number(id_tokens[static_cast<size_t>(s)], "block id");
        if (id < 0 || id >= b)
            throw InputError("block id out of range: " + std::to_string(id));
        block_of[static_cast<size_t>(s)] = static_cast<int>(id);
    }
    while (cur < lines.size()) {
        if (!tokens_of(lines[cur]).empty())
            throw InputError("trailing content after the block id line");
        ++cur;
    }

    Partition pi = Partition::from_block_of(std::move(block_of));
    if (pi.block_count() != b)
        throw InputError("partition header says " + std::to_string(b) + " blocks but ids use " +
                         std::to_string(pi.block_count()));
    return Lts(static_cast<int>(n), std::move(actions), transitions, std::move(pi));
}

Lts load_ltsp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw InputError("cannot read " + path);
    return parse_ltsp(buf.str());
}

void save_ltsp_file(const Lts& lts, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot open " + path + " for writing");
    out << write_ltsp(lts);
    out.flush();
    if (!out)
        throw InputError("cannot write " + path);
}

} // namespace bisimlab
