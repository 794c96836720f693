#ifndef SCT_TREE_HPP
#define SCT_TREE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sct {

// A reduced plane tree (every internal node has at least two children) is
// stored as its preorder word: an internal node of arity a emits a-1, a leaf
// emits 0.  Such words are exactly the Lukasiewicz paths that stay positive
// until the final step.
using Sym = std::uint8_t;
using Word = std::vector<Sym>;

bool valid_tree_word(const Word& w);

class SchroederTree {
public:
    SchroederTree() : w_{0} {}                       // single leaf
    static SchroederTree from_word(Word w);          // throws std::invalid_argument
    static SchroederTree node(const std::vector<SchroederTree>& children);
    static SchroederTree leaf() { return SchroederTree{}; }

    const Word& word() const { return w_; }
    bool is_leaf() const { return w_.size() == 1; }
    int degree() const;                              // leaf count
    int weight() const { return degree() - 1; }
    int internal_count() const;
    std::vector<SchroederTree> children() const;     // empty for a leaf

    bool operator==(const SchroederTree&) const = default;

    // trusted constructor: w must already be a valid tree word
    struct raw_tag {};
    SchroederTree(Word w, raw_tag) : w_(std::move(w)) {}

private:
    Word w_;
};

SchroederTree corolla(int weight);                   // weight >= 0

// canonical order used everywhere trees are listed or printed:
// weight ascending, then word length ascending, then lexicographically
// decreasing
bool word_less(const Word& a, const Word& b);
inline bool tree_less(const SchroederTree& a, const SchroederTree& b) {
    return word_less(a.word(), b.word());
}
struct TreeLess {
    bool operator()(const SchroederTree& a, const SchroederTree& b) const {
        return tree_less(a, b);
    }
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

bool is_prime(const SchroederTree& t);            // rightmost child of the root is a leaf
bool is_left_directed(const SchroederTree& t);    // rightmost child of every internal node is a leaf
bool is_right_directed(const SchroederTree& t);   // leftmost child of every internal node is a leaf
bool is_binary(const SchroederTree& t);
bool is_corolla(const SchroederTree& t);

enum class TreeKind { all, prime, left_directed, right_directed, binary };
TreeKind tree_kind_from_name(std::string_view name);  // throws on unknown name

// all trees of the given weight and kind, in canonical order; memoized
const std::vector<SchroederTree>& enumerate_trees(TreeKind kind, int weight);

// substitute args[i] for the i-th leaf (left to right); args.size() == degree
SchroederTree graft(const SchroederTree& t, const std::vector<SchroederTree>& args);

// sectors are the gaps between consecutive leaves, numbered 1..weight.
// sector_views lists, for each internal node in preorder, the sectors whose
// view up the tree ends at that node; node v sees arity(v)-1 of them.
std::vector<std::vector<int>> sector_views(const SchroederTree& t);

// parses either "2,0,1,0,0" or the nested form "(* (* *))" / "*"
SchroederTree parse_tree(std::string_view text);
std::string format_word(const SchroederTree& t);     // "2,0,1,0,0"
std::string format_nested(const SchroederTree& t);   // "(* (* *))"

} // namespace sct

#endif
