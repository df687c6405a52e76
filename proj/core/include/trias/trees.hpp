#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "trias/errors.hpp"

namespace trias {

// Rooted planar tree, every internal vertex of valence >= 2. A tree with
// n+1 leaves has degree n. Immutable after construction.
class PlanarTree {
  public:
    PlanarTree() : leaves_(1) {}  // the bare leaf

    static PlanarTree leaf() { return PlanarTree(); }
    static PlanarTree graft(std::vector<PlanarTree> children);

    bool is_leaf() const { return children_.empty(); }
    const std::vector<PlanarTree>& children() const { return children_; }
    int leaf_count() const { return leaves_; }
    int degree() const { return leaves_ - 1; }

    bool operator==(const PlanarTree& o) const { return children_ == o.children_; }

  private:
    std::vector<PlanarTree> children_;
    int leaves_;
};

enum class LeafOrientation { Left, Middle, Right };

// Canonical total order: Leaf first, then fewer root children first, ties by
// children compared left to right.
bool tree_less(const PlanarTree& a, const PlanarTree& b);

// All trees of degree n, each once, sorted by tree_less. Counts follow the
// super-Catalan sequence 1, 1, 3, 11, 45, 197, 903, ...
const std::vector<PlanarTree>& enumerate_trees(int n);

// Delete leaf i; a vertex left with a single child is contracted away.
PlanarTree face(const PlanarTree& t, int i);

// Add a new leaf immediately left of leaf i, at the vertex leaf i attaches to.
PlanarTree degeneracy(const PlanarTree& t, int i);

// Left iff leaf i is the leftmost child of its vertex, Right iff rightmost,
// Middle otherwise (in particular for the bare leaf, which has no vertex).
LeafOrientation leaf_orientation(const PlanarTree& t, int i);

// (degree, position in enumerate_trees(degree)).
std::pair<int, std::size_t> index_of(const PlanarTree& t);

// "*", "(* *)", "(* (* *))", ...
std::string to_string(const PlanarTree& t);
PlanarTree parse_tree(const std::string& s);

}  // namespace trias
