#ifndef SCT_NCPART_HPP
#define SCT_NCPART_HPP

#include "sct/tree.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace sct {

// set partition of {1..n}; blocks sorted by minimum, elements ascending
class Partition {
public:
    Partition() : n_(0) {}
    static Partition from_blocks(int n, std::vector<std::vector<int>> blocks);
    static Partition singletons(int n);
    static Partition one_block(int n);
    static Partition parse(std::string_view text);   // "1,4,5,6|2,3|7,8,10|9"

    int n() const { return n_; }
    int block_count() const { return int(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_index_of(int i) const { return block_of_[std::size_t(i)]; }
    bool is_noncrossing() const;
    std::string to_string() const;

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        return blocks_ < o.blocks_;
    }

private:
    int n_;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;  // index 1..n
};

// refinement order: every block of a is contained in a block of b
bool partition_leq(const Partition& a, const Partition& b);

// all noncrossing partitions of {1..n}, memoized
const std::vector<Partition>& enumerate_nc(int n);

long long catalan(int n);

// Kreweras complement on noncrossing partitions
Partition kreweras(const Partition& p);

// Moebius function of the noncrossing partition lattice, a <= b required
long long moebius_nc(const Partition& a, const Partition& b);

// (-1)^(n - #blocks) * prod C_{#B-1}; equals moebius_nc(singletons, p)
long long moebius_bottom(const Partition& p);

// noncrossing arrangement of binary trees: leaf-labeled components, labels
// ascending inside a component, components sorted by least label
struct BinaryComponent {
    SchroederTree shape;      // binary tree; a bare leaf for singletons
    std::vector<int> labels;
    bool operator==(const BinaryComponent&) const = default;
    bool operator<(const BinaryComponent& o) const {
        if (labels != o.labels) return labels < o.labels;
        return shape.word() < o.shape.word();
    }
};
struct Arrangement {
    int n = 0;
    std::vector<BinaryComponent> comps;
    bool operator==(const Arrangement&) const = default;
    bool operator<(const Arrangement& o) const {
        if (n != o.n) return n < o.n;
        return comps < o.comps;
    }
    std::string to_string() const;
};

// cuts the middle edges and the root off a prime tree of weight n >= 1;
// the isolated last leaf is dropped
Arrangement tree_to_arrangement(const SchroederTree& t);

Partition arrangement_to_partition(const Arrangement& a);

// blocks are the sector views of the internal nodes
Partition sector_partition(const SchroederTree& t);

// right-directed tree whose sector partition is p
SchroederTree nc_to_rdt(const Partition& p);

// nondecreasing parking functions f: [n] -> [n] with f(i) <= i, in
// lexicographic order
std::vector<std::vector<int>> ndpf_enumerate(int n);

// packed evaluation: multiplicities of the values in increasing value order
std::vector<int> ndpf_ev(const std::vector<int>& f);

} // namespace sct

#endif
