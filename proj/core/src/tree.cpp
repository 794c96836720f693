#include "sct/tree.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace sct {

namespace {

// slot count after reading symbol s
inline int slot_delta(Sym s) { return s == 0 ? -1 : int(s); }

// end position of the subtree starting at pos
std::size_t subtree_end(const Word& w, std::size_t pos) {
    int c = 1;
    while (c > 0) {
        c += slot_delta(w[pos]);
        ++pos;
    }
    return pos;
}

std::vector<std::pair<std::size_t, std::size_t>> child_spans(const Word& w, std::size_t pos) {
    std::vector<std::pair<std::size_t, std::size_t>> spans;
    int arity = int(w[pos]) + 1;
    std::size_t p = pos + 1;
    for (int i = 0; i < arity; ++i) {
        std::size_t e = subtree_end(w, p);
        spans.emplace_back(p, e);
        p = e;
    }
    return spans;
}

} // namespace

bool valid_tree_word(const Word& w) {
    if (w.empty()) return false;
    int c = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        c += slot_delta(w[i]);
        if (c <= 0 && i + 1 != w.size()) return false;
    }
    return c == 0;
}

SchroederTree SchroederTree::from_word(Word w) {
    if (!valid_tree_word(w)) throw std::invalid_argument("not a valid tree word");
    return SchroederTree{std::move(w), raw_tag{}};
}

SchroederTree SchroederTree::node(const std::vector<SchroederTree>& children) {
    if (children.size() < 2) throw std::invalid_argument("internal node needs arity >= 2");
    if (children.size() > 255) throw std::invalid_argument("arity too large");
    Word w;
    w.push_back(Sym(children.size() - 1));
    for (const auto& c : children) w.insert(w.end(), c.w_.begin(), c.w_.end());
    return SchroederTree{std::move(w), raw_tag{}};
}

int SchroederTree::degree() const {
    return int(std::count(w_.begin(), w_.end(), Sym(0)));
}

int SchroederTree::internal_count() const {
    return int(w_.size()) - degree();
}

std::vector<SchroederTree> SchroederTree::children() const {
    std::vector<SchroederTree> out;
    if (is_leaf()) return out;
    for (auto [b, e] : child_spans(w_, 0))
        out.emplace_back(Word(w_.begin() + long(b), w_.begin() + long(e)), raw_tag{});
    return out;
}

SchroederTree corolla(int weight) {
    if (weight < 0) throw std::invalid_argument("negative weight");
    if (weight == 0) return SchroederTree::leaf();
    Word w;
    w.push_back(Sym(weight));
    w.insert(w.end(), std::size_t(weight) + 1, Sym(0));
    return SchroederTree{std::move(w), SchroederTree::raw_tag{}};
}

bool word_less(const Word& a, const Word& b) {
    auto zeros = [](const Word& w) {
        return std::count(w.begin(), w.end(), Sym(0));
    };
    auto za = zeros(a), zb = zeros(b);
    if (za != zb) return za < zb;
    if (a.size() != b.size()) return a.size() < b.size();
    return b < a;  // lexicographically decreasing within a weight and length
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Sym s : w) {
        h ^= s;
        h *= 1099511628211ull;
    }
    return h;
}

bool is_prime(const SchroederTree& t) {
    if (t.is_leaf()) return true;
    auto spans = child_spans(t.word(), 0);
    auto [b, e] = spans.back();
    return e - b == 1;
}

namespace {

// pred(word, pos) for the directed checks; "last" selects which child must be a leaf
bool directed_at(const Word& w, std::size_t pos, bool last) {
    if (w[pos] == 0) return true;
    auto spans = child_spans(w, pos);
    auto [b, e] = last ? spans.back() : spans.front();
    if (e - b != 1) return false;
    for (auto [cb, ce] : spans)
        if (!directed_at(w, cb, last)) return false;
    return true;
}

} // namespace

bool is_left_directed(const SchroederTree& t) { return directed_at(t.word(), 0, true); }
bool is_right_directed(const SchroederTree& t) { return directed_at(t.word(), 0, false); }

bool is_binary(const SchroederTree& t) {
    for (Sym s : t.word())
        if (s > 1) return false;
    return true;
}

bool is_corolla(const SchroederTree& t) {
    const Word& w = t.word();
    if (int(w[0]) != t.weight()) return false;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] != 0) return false;
    return true;
}

TreeKind tree_kind_from_name(std::string_view name) {
    if (name == "all") return TreeKind::all;
    if (name == "prime") return TreeKind::prime;
    if (name == "left-directed") return TreeKind::left_directed;
    if (name == "right-directed") return TreeKind::right_directed;
    if (name == "binary") return TreeKind::binary;
    throw std::invalid_argument("unknown tree kind: " + std::string(name));
}

namespace {

using WordList = std::vector<Word>;

const WordList& kind_words(TreeKind kind, int weight);

// append to each partial word every way of filling `slots` child subtrees of
// total weight `payload`, children drawn from `kind`
void fill_children(Word& prefix, TreeKind kind, int slots, int payload, WordList& out) {
    if (slots == 0) {
        if (payload == 0) out.push_back(prefix);
        return;
    }
    for (int w0 = 0; w0 <= payload; ++w0) {
        for (const Word& cw : kind_words(kind, w0)) {
            std::size_t mark = prefix.size();
            prefix.insert(prefix.end(), cw.begin(), cw.end());
            fill_children(prefix, kind, slots - 1, payload - w0, out);
            prefix.resize(mark);
        }
    }
}

WordList build_kind(TreeKind kind, int weight) {
    WordList out;
    if (weight == 0) {
        out.push_back(Word{0});
        return out;
    }
    for (int arity = 2; arity <= weight + 1; ++arity) {
        int payload = weight - (arity - 1);
        Word prefix{Sym(arity - 1)};
        switch (kind) {
        case TreeKind::all:
            fill_children(prefix, TreeKind::all, arity, payload, out);
            break;
        case TreeKind::prime: {
            // rightmost child is a leaf
            WordList heads;
            fill_children(prefix, TreeKind::all, arity - 1, payload, heads);
            for (Word& h : heads) {
                h.push_back(0);
                out.push_back(std::move(h));
            }
            break;
        }
        case TreeKind::left_directed: {
            WordList heads;
            fill_children(prefix, TreeKind::left_directed, arity - 1, payload, heads);
            for (Word& h : heads) {
                h.push_back(0);
                out.push_back(std::move(h));
            }
            break;
        }
        case TreeKind::right_directed: {
            Word p2 = prefix;
            p2.push_back(0);
            fill_children(p2, TreeKind::right_directed, arity - 1, payload, out);
            break;
        }
        case TreeKind::binary:
            if (arity == 2) fill_children(prefix, TreeKind::binary, 2, payload, out);
            break;
        }
    }
    std::sort(out.begin(), out.end(), word_less);
    return out;
}

const WordList& kind_words(TreeKind kind, int weight) {
    static std::map<std::pair<int, int>, WordList> memo;
    static std::recursive_mutex mu;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto key = std::make_pair(int(kind), weight);
    auto it = memo.find(key);
    if (it == memo.end()) {
        WordList built = build_kind(kind, weight);  // recursion re-enters kind_words
        it = memo.emplace(key, std::move(built)).first;
    }
    return it->second;
}

} // namespace

const std::vector<SchroederTree>& enumerate_trees(TreeKind kind, int weight) {
    if (weight < 0) throw std::invalid_argument("negative weight");
    static std::map<std::pair<int, int>, std::vector<SchroederTree>> memo;
    static std::recursive_mutex mu;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto key = std::make_pair(int(kind), weight);
    auto it = memo.find(key);
    if (it == memo.end()) {
        const WordList& words = kind_words(kind, weight);
        std::vector<SchroederTree> trees;
        trees.reserve(words.size());
        for (const Word& w : words) trees.emplace_back(Word(w), SchroederTree::raw_tag{});
        it = memo.emplace(key, std::move(trees)).first;
    }
    return it->second;
}

SchroederTree graft(const SchroederTree& t, const std::vector<SchroederTree>& args) {
    const Word& w = t.word();
    if (args.size() != std::size_t(t.degree()))
        throw std::invalid_argument("graft needs one tree per leaf");
    Word out;
    std::size_t next = 0;
    for (Sym s : w) {
        if (s == 0) {
            const Word& a = args[next++].word();
            out.insert(out.end(), a.begin(), a.end());
        } else {
            out.push_back(s);
        }
    }
    return SchroederTree{std::move(out), SchroederTree::raw_tag{}};
}

namespace {

std::size_t sectors_walk(const Word& w, std::size_t pos, int& leaves, int& next_rank,
                         std::vector<std::vector<int>>& out) {
    if (w[pos] == 0) {
        ++leaves;
        return pos + 1;
    }
    int rank = next_rank++;
    out.emplace_back();
    int arity = int(w[pos]) + 1;
    std::size_t p = pos + 1;
    for (int i = 0; i < arity; ++i) {
        p = sectors_walk(w, p, leaves, next_rank, out);
        if (i + 1 < arity) out[std::size_t(rank)].push_back(leaves);
    }
    return p;
}

} // namespace

std::vector<std::vector<int>> sector_views(const SchroederTree& t) {
    std::vector<std::vector<int>> out;
    if (t.is_leaf()) return out;
    int leaves = 0, rank = 0;
    sectors_walk(t.word(), 0, leaves, rank, out);
    return out;
}

namespace {

void skip_ws(std::string_view s, std::size_t& i) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
}

void parse_nested_at(std::string_view s, std::size_t& i, Word& out) {
    skip_ws(s, i);
    if (i >= s.size()) throw std::invalid_argument("unexpected end of tree literal");
    if (s[i] == '*') {
        ++i;
        out.push_back(0);
        return;
    }
    if (s[i] != '(') throw std::invalid_argument("expected '*' or '(' in tree literal");
    ++i;
    std::size_t mark = out.size();
    out.push_back(0);  // arity patched below
    int arity = 0;
    for (;;) {
        skip_ws(s, i);
        if (i >= s.size()) throw std::invalid_argument("unbalanced '(' in tree literal");
        if (s[i] == ')') {
            ++i;
            break;
        }
        parse_nested_at(s, i, out);
        ++arity;
    }
    if (arity < 2) throw std::invalid_argument("internal node needs arity >= 2");
    if (arity > 255) throw std::invalid_argument("arity too large");
    out[mark] = Sym(arity - 1);
}

} // namespace

SchroederTree parse_tree(std::string_view text) {
    std::size_t b = 0, e = text.size();
    while (b < e && (text[b] == ' ' || text[b] == '\t')) ++b;
    while (e > b && (text[e - 1] == ' ' || text[e - 1] == '\t')) --e;
    std::string_view s = text.substr(b, e - b);
    if (s.empty()) throw std::invalid_argument("empty tree literal");

    if (s[0] == '*' || s[0] == '(') {
        Word w;
        std::size_t i = 0;
        parse_nested_at(s, i, w);
        skip_ws(s, i);
        if (i != s.size()) throw std::invalid_argument("trailing text after tree literal");
        return SchroederTree::from_word(std::move(w));
    }

    Word w;
    std::size_t i = 0;
    for (;;) {
        skip_ws(s, i);
        std::size_t start = i;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
        if (i == start) throw std::invalid_argument("expected integer in tree word");
        int v = 0;
        for (std::size_t k = start; k < i; ++k) {
            v = v * 10 + (s[k] - '0');
            if (v > 255) throw std::invalid_argument("symbol too large in tree word");
        }
        w.push_back(Sym(v));
        skip_ws(s, i);
        if (i == s.size()) break;
        if (s[i] != ',') throw std::invalid_argument("expected ',' in tree word");
        ++i;
    }
    return SchroederTree::from_word(std::move(w));
}

std::string format_word(const SchroederTree& t) {
    std::string out;
    for (std::size_t i = 0; i < t.word().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(int(t.word()[i]));
    }
    return out;
}

namespace {

void nested_at(const Word& w, std::size_t pos, std::string& out) {
    if (w[pos] == 0) {
        out += '*';
        return;
    }
    out += '(';
    bool first = true;
    for (auto [b, e] : child_spans(w, pos)) {
        if (!first) out += ' ';
        first = false;
        nested_at(w, b, out);
    }
    out += ')';
}

} // namespace

std::string format_nested(const SchroederTree& t) {
    std::string out;
    nested_at(t.word(), 0, out);
    return out;
}

} // namespace sct
