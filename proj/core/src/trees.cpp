#include "trias/trees.hpp"

#include <algorithm>
#include <deque>
#include <mutex>

namespace trias {

PlanarTree PlanarTree::graft(std::vector<PlanarTree> children) {
    if (children.size() < 2)
        throw std::invalid_argument("graft needs at least 2 children");
    PlanarTree t;
    t.leaves_ = 0;
    for (const auto& c : children) t.leaves_ += c.leaf_count();
    t.children_ = std::move(children);
    return t;
}

bool tree_less(const PlanarTree& a, const PlanarTree& b) {
    if (a.is_leaf() || b.is_leaf()) return a.is_leaf() && !b.is_leaf();
    const auto& ca = a.children();
    const auto& cb = b.children();
    if (ca.size() != cb.size()) return ca.size() < cb.size();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (tree_less(ca[i], cb[i])) return true;
        if (tree_less(cb[i], ca[i])) return false;
    }
    return false;
}

namespace {

void compositions(int total, int parts, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int first = 0; first <= total; ++first) {
        cur.push_back(first);
        compositions(total - first, parts - 1, cur, out);
        cur.pop_back();
    }
}

std::vector<PlanarTree> build_degree(int n,
                                     const std::deque<std::vector<PlanarTree>>& lower) {
    if (n == 0) return {PlanarTree::leaf()};
    std::vector<PlanarTree> out;
    // root valence k+1, subtree degrees sum to n-k
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<int>> degs;
        std::vector<int> cur;
        compositions(n - k, k + 1, cur, degs);
        for (const auto& d : degs) {
            std::vector<std::size_t> idx(d.size(), 0);
            // odometer over the k+1 child choices
            while (true) {
                std::vector<PlanarTree> children;
                children.reserve(d.size());
                for (std::size_t i = 0; i < d.size(); ++i)
                    children.push_back(lower[d[i]][idx[i]]);
                out.push_back(PlanarTree::graft(std::move(children)));
                std::size_t pos = d.size();
                while (pos > 0) {
                    --pos;
                    if (++idx[pos] < lower[d[pos]].size()) break;
                    idx[pos] = 0;
                    if (pos == 0) goto done;
                }
            }
        done:;
        }
    }
    std::sort(out.begin(), out.end(), tree_less);
    return out;
}

}  // namespace

const std::vector<PlanarTree>& enumerate_trees(int n) {
    if (n < 0) throw IndexOutOfRange("enumerate_trees: negative degree");
    static std::mutex mu;
    static std::deque<std::vector<PlanarTree>> memo;  // deque: refs stay valid
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(memo.size()) <= n)
        memo.push_back(build_degree(static_cast<int>(memo.size()), memo));
    return memo[n];
}

namespace {

// child index holding leaf i, plus the leaf offset within that child
std::pair<std::size_t, int> locate(const PlanarTree& t, int i) {
    int off = 0;
    const auto& cs = t.children();
    for (std::size_t j = 0; j < cs.size(); ++j) {
        if (i < off + cs[j].leaf_count()) return {j, i - off};
        off += cs[j].leaf_count();
    }
    throw IndexOutOfRange("leaf index out of range");
}

}  // namespace

PlanarTree face(const PlanarTree& t, int i) {
    if (t.degree() < 1) throw IndexOutOfRange("face: tree must have degree >= 1");
    if (i < 0 || i > t.degree()) throw IndexOutOfRange("face: leaf index out of range");
    auto [j, sub_i] = locate(t, i);
    std::vector<PlanarTree> cs = t.children();
    if (cs[j].is_leaf())
        cs.erase(cs.begin() + static_cast<std::ptrdiff_t>(j));
    else
        cs[j] = face(cs[j], sub_i);
    if (cs.size() == 1) return cs[0];
    return PlanarTree::graft(std::move(cs));
}

PlanarTree degeneracy(const PlanarTree& t, int i) {
    if (i < 0 || i > t.degree()) throw IndexOutOfRange("degeneracy: leaf index out of range");
    if (t.is_leaf())
        return PlanarTree::graft({PlanarTree::leaf(), PlanarTree::leaf()});
    auto [j, sub_i] = locate(t, i);
    std::vector<PlanarTree> cs = t.children();
    if (cs[j].is_leaf())
        cs.insert(cs.begin() + static_cast<std::ptrdiff_t>(j), PlanarTree::leaf());
    else
        cs[j] = degeneracy(cs[j], sub_i);
    return PlanarTree::graft(std::move(cs));
}

LeafOrientation leaf_orientation(const PlanarTree& t, int i) {
    if (i < 0 || i > t.degree())
        throw IndexOutOfRange("leaf_orientation: leaf index out of range");
    if (t.is_leaf()) return LeafOrientation::Middle;
    auto [j, sub_i] = locate(t, i);
    if (t.children()[j].is_leaf()) {
        if (j == 0) return LeafOrientation::Left;
        if (j + 1 == t.children().size()) return LeafOrientation::Right;
        return LeafOrientation::Middle;
    }
    return leaf_orientation(t.children()[j], sub_i);
}

std::pair<int, std::size_t> index_of(const PlanarTree& t) {
    const auto& all = enumerate_trees(t.degree());
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] == t) return {t.degree(), i};
    throw std::logic_error("index_of: tree missing from enumeration");
}

std::string to_string(const PlanarTree& t) {
    if (t.is_leaf()) return "*";
    std::string s = "(";
    const auto& cs = t.children();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) s += ' ';
        s += to_string(cs[i]);
    }
    return s + ")";
}

namespace {

PlanarTree parse_at(const std::string& s, std::size_t& pos) {
    auto skip_ws = [&] {
        while (pos < s.size() && s[pos] == ' ') ++pos;
    };
    skip_ws();
    if (pos >= s.size()) throw ParseError("unexpected end of tree text");
    if (s[pos] == '*') {
        ++pos;
        return PlanarTree::leaf();
    }
    if (s[pos] != '(') throw ParseError("expected '*' or '(' at position " + std::to_string(pos));
    ++pos;
    std::vector<PlanarTree> children;
    while (true) {
        skip_ws();
        if (pos >= s.size()) throw ParseError("unterminated '(' in tree text");
        if (s[pos] == ')') {
            ++pos;
            break;
        }
        children.push_back(parse_at(s, pos));
    }
    if (children.size() < 2)
        throw ParseError("internal vertex needs at least 2 children");
    return PlanarTree::graft(std::move(children));
}

}  // namespace

PlanarTree parse_tree(const std::string& s) {
    std::size_t pos = 0;
    PlanarTree t = parse_at(s, pos);
    while (pos < s.size() && s[pos] == ' ') ++pos;
    if (pos != s.size()) throw ParseError("trailing text after tree");
    return t;
}

}  // namespace trias
