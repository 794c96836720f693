#include "sct/ncpart.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace sct {

Partition Partition::from_blocks(int n, std::vector<std::vector<int>> blocks) {
    Partition p;
    p.n_ = n;
    p.block_of_.assign(std::size_t(n) + 1, -1);
    for (auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("empty block");
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks.begin(), blocks.end());
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        for (int x : blocks[bi]) {
            if (x < 1 || x > n) throw std::invalid_argument("element out of range");
            if (p.block_of_[std::size_t(x)] != -1)
                throw std::invalid_argument("repeated element");
            p.block_of_[std::size_t(x)] = int(bi);
        }
    }
    for (int x = 1; x <= n; ++x)
        if (p.block_of_[std::size_t(x)] == -1)
            throw std::invalid_argument("element missing from partition");
    p.blocks_ = std::move(blocks);
    return p;
}

Partition Partition::singletons(int n) {
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= n; ++i) blocks.push_back({i});
    return from_blocks(n, std::move(blocks));
}

Partition Partition::one_block(int n) {
    if (n == 0) return Partition{};
    std::vector<int> b;
    for (int i = 1; i <= n; ++i) b.push_back(i);
    return from_blocks(n, {b});
}

Partition Partition::parse(std::string_view text) {
    std::vector<std::vector<int>> blocks;
    int maxel = 0;
    std::size_t i = 0;
    while (i < text.size()) {
        std::vector<int> block;
        while (i < text.size() && text[i] != '|') {
            while (i < text.size() && text[i] == ' ') ++i;
            std::size_t start = i;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
            if (i == start) throw std::invalid_argument("expected integer in partition");
            int v = 0;
            for (std::size_t k = start; k < i; ++k) v = v * 10 + (text[k] - '0');
            block.push_back(v);
            maxel = std::max(maxel, v);
            while (i < text.size() && text[i] == ' ') ++i;
            if (i < text.size() && text[i] == ',') ++i;
        }
        blocks.push_back(std::move(block));
        if (i < text.size() && text[i] == '|') ++i;
    }
    return from_blocks(maxel, std::move(blocks));
}

bool Partition::is_noncrossing() const {
    std::vector<int> stack;
    for (int i = 1; i <= n_; ++i) {
        int b = block_of_[std::size_t(i)];
        if (i == blocks_[std::size_t(b)].front()) stack.push_back(b);
        if (stack.empty() || stack.back() != b) return false;
        if (i == blocks_[std::size_t(b)].back()) stack.pop_back();
    }
    return true;
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
        if (bi) out += '|';
        for (std::size_t k = 0; k < blocks_[bi].size(); ++k) {
            if (k) out += ',';
            out += std::to_string(blocks_[bi][k]);
        }
    }
    return out;
}

bool partition_leq(const Partition& a, const Partition& b) {
    if (a.n() != b.n()) return false;
    for (const auto& block : a.blocks()) {
        int home = b.block_index_of(block.front());
        for (int x : block)
            if (b.block_index_of(x) != home) return false;
    }
    return true;
}

namespace {

void grow_rgs(std::vector<int>& rgs, int n, int used, std::vector<Partition>& out) {
    if (int(rgs.size()) == n) {
        std::vector<std::vector<int>> blocks(static_cast<std::size_t>(used));
        for (int i = 0; i < n; ++i)
            blocks[std::size_t(rgs[std::size_t(i)])].push_back(i + 1);
        Partition p = Partition::from_blocks(n, std::move(blocks));
        if (p.is_noncrossing()) out.push_back(std::move(p));
        return;
    }
    for (int v = 0; v <= used; ++v) {
        rgs.push_back(v);
        grow_rgs(rgs, n, std::max(used, v + 1), out);
        rgs.pop_back();
    }
}

} // namespace

const std::vector<Partition>& enumerate_nc(int n) {
    if (n < 0) throw std::invalid_argument("negative n");
    static std::map<int, std::vector<Partition>> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(n);
    if (it == memo.end()) {
        std::vector<Partition> out;
        if (n == 0) {
            out.push_back(Partition{});
        } else {
            std::vector<int> rgs;
            grow_rgs(rgs, n, 0, out);
        }
        std::sort(out.begin(), out.end());
        it = memo.emplace(n, std::move(out)).first;
    }
    return it->second;
}

long long catalan(int n) {
    static const std::vector<long long> table = [] {
        std::vector<long long> c{1};
        for (int k = 1; k <= 30; ++k)
            c.push_back(c.back() * 2 * (2 * k - 1) / (k + 1));
        return c;
    }();
    if (n < 0 || n > 30) throw std::invalid_argument("catalan index out of range");
    return table[std::size_t(n)];
}

Partition kreweras(const Partition& p) {
    // sweep the arc diagram; each primed point lands in the face open above it
    int n = p.n();
    std::vector<std::pair<int, int>> stack;   // open arcs, innermost on top
    std::map<std::pair<int, int>, std::vector<int>> faces;
    for (int i = 1; i <= n; ++i) {
        const auto& block = p.blocks()[std::size_t(p.block_index_of(i))];
        auto pos = std::lower_bound(block.begin(), block.end(), i);
        if (i != block.front()) {
            std::pair<int, int> arc{*(pos - 1), i};
            if (stack.empty() || stack.back() != arc)
                throw std::invalid_argument("kreweras needs a noncrossing partition");
            stack.pop_back();
        }
        if (i != block.back()) stack.emplace_back(i, *(pos + 1));
        faces[stack.empty() ? std::pair<int, int>{0, 0} : stack.back()].push_back(i);
    }
    std::vector<std::vector<int>> blocks;
    for (auto& [key, members] : faces) blocks.push_back(std::move(members));
    return Partition::from_blocks(n, std::move(blocks));
}

namespace {

int nc_index(int n, const Partition& p) {
    const auto& all = enumerate_nc(n);
    auto it = std::lower_bound(all.begin(), all.end(), p);
    if (it == all.end() || !(*it == p)) throw std::invalid_argument("not noncrossing");
    return int(it - all.begin());
}

} // namespace

long long moebius_nc(const Partition& a, const Partition& b) {
    if (!partition_leq(a, b)) throw std::invalid_argument("moebius needs a <= b");
    int n = a.n();
    static std::map<std::tuple<int, int, int>, long long> memo;
    static std::mutex mu;
    int ia = nc_index(n, a), ib = nc_index(n, b);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find({n, ia, ib});
        if (it != memo.end()) return it->second;
    }
    long long value = 1;
    if (!(a == b)) {
        value = 0;
        for (const auto& t : enumerate_nc(n)) {
            if (t == b) continue;
            if (partition_leq(a, t) && partition_leq(t, b)) value -= moebius_nc(a, t);
        }
    }
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(std::make_tuple(n, ia, ib), value);
    return value;
}

long long moebius_bottom(const Partition& p) {
    long long out = ((p.n() - p.block_count()) % 2 == 0) ? 1 : -1;
    for (const auto& b : p.blocks()) out *= catalan(int(b.size()) - 1);
    return out;
}

namespace {

// binary component extraction: keep the outermost edge on each side, every
// middle child starts a new component
struct ArrBuilder {
    const Word& w;
    int leaf_index = 0;
    std::vector<BinaryComponent> comps;

    explicit ArrBuilder(const Word& word) : w(word) {}

    std::size_t subtree_end(std::size_t pos) const {
        int c = 1;
        while (c > 0) {
            c += (w[pos] == 0) ? -1 : int(w[pos]);
            ++pos;
        }
        return pos;
    }

    // returns (end position, built shape), collecting labels in order
    std::pair<std::size_t, SchroederTree> build(std::size_t pos, std::vector<int>& labels) {
        if (w[pos] == 0) {
            ++leaf_index;
            labels.push_back(leaf_index);
            return {pos + 1, SchroederTree::leaf()};
        }
        int arity = int(w[pos]) + 1;
        std::size_t p = pos + 1;
        SchroederTree left = SchroederTree::leaf(), right = SchroederTree::leaf();
        for (int i = 0; i < arity; ++i) {
            if (i == 0) {
                auto [e, s] = build(p, labels);
                left = s;
                p = e;
            } else if (i == arity - 1) {
                auto [e, s] = build(p, labels);
                right = s;
                p = e;
            } else {
                p = component(p);
            }
        }
        return {p, SchroederTree::node({left, right})};
    }

    std::size_t component(std::size_t pos) {
        std::vector<int> labels;
        auto [e, shape] = build(pos, labels);
        comps.push_back(BinaryComponent{shape, std::move(labels)});
        return e;
    }
};

} // namespace

Arrangement tree_to_arrangement(const SchroederTree& t) {
    if (t.weight() < 1 || !is_prime(t))
        throw std::invalid_argument("arrangement needs a prime tree of positive weight");
    ArrBuilder b(t.word());
    int arity = int(t.word()[0]) + 1;
    std::size_t p = 1;
    for (int i = 0; i < arity; ++i) p = b.component(p);
    // the last component is the isolated final leaf
    b.comps.pop_back();
    Arrangement out;
    out.n = t.weight();
    out.comps = std::move(b.comps);
    std::sort(out.comps.begin(), out.comps.end());
    return out;
}

std::string Arrangement::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (i) out += "; ";
        out += format_word(comps[i].shape);
        out += ':';
        for (std::size_t k = 0; k < comps[i].labels.size(); ++k) {
            if (k) out += ',';
            out += std::to_string(comps[i].labels[k]);
        }
    }
    return out;
}

Partition arrangement_to_partition(const Arrangement& a) {
    std::vector<std::vector<int>> blocks;
    for (const auto& c : a.comps) blocks.push_back(c.labels);
    return Partition::from_blocks(a.n, std::move(blocks));
}

Partition sector_partition(const SchroederTree& t) {
    if (t.weight() < 1) throw std::invalid_argument("sector partition needs weight >= 1");
    return Partition::from_blocks(t.weight(), sector_views(t));
}

namespace {

// right-directed tree on the sector range lo..hi of p
SchroederTree rdt_range(const Partition& p, int lo, int hi) {
    if (lo > hi) return SchroederTree::leaf();
    const auto& block = p.blocks()[std::size_t(p.block_index_of(lo))];
    std::vector<SchroederTree> children{SchroederTree::leaf()};
    for (std::size_t k = 0; k < block.size(); ++k) {
        int next_hi = (k + 1 < block.size()) ? block[k + 1] - 1 : hi;
        children.push_back(rdt_range(p, block[k] + 1, next_hi));
    }
    return SchroederTree::node(children);
}

} // namespace

SchroederTree nc_to_rdt(const Partition& p) {
    if (!p.is_noncrossing()) throw std::invalid_argument("nc_to_rdt needs a noncrossing partition");
    if (p.n() == 0) return SchroederTree::leaf();
    return rdt_range(p, 1, p.n());
}

namespace {

void grow_ndpf(std::vector<int>& f, int n, std::vector<std::vector<int>>& out) {
    if (int(f.size()) == n) {
        out.push_back(f);
        return;
    }
    int i = int(f.size()) + 1;
    for (int v = f.empty() ? 1 : f.back(); v <= i; ++v) {
        f.push_back(v);
        grow_ndpf(f, n, out);
        f.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> ndpf_enumerate(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> f;
    grow_ndpf(f, n, out);
    return out;
}

std::vector<int> ndpf_ev(const std::vector<int>& f) {
    std::vector<int> ev;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i == 0 || f[i] != f[i - 1]) ev.push_back(0);
        ++ev.back();
    }
    return ev;
}

} // namespace sct
