#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "partition.hpp"

namespace wheelfree {

inline constexpr int kCanonicalHardCap = 32;

/// graph6 text of the canonically relabeled graph. Equal forms <=> isomorphic graphs.
struct CanonicalForm {
    std::string graph6;

    bool operator==(const CanonicalForm&) const = default;
    auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalLabeling {
    std::vector<Vertex> position;  // position[v] = index of v in the canonical graph
    CanonicalForm form;
};

namespace detail {

/// Individualization-refinement search. Every leaf of the search tree is a
/// discrete equitable partition, read as a vertex ordering; the canonical
/// ordering is the leaf whose column-major upper triangle is lexicographically
/// smallest. Leaves that tie with the incumbent yield automorphisms, which
/// prune sibling branches lying in the same orbit of the prefix stabiliser.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
        words_ = (n_ * (n_ - 1) / 2 + 63) / 64;
        if (words_ == 0) words_ = 1;
    }

    std::vector<Vertex> run() {
        auto root = refine_equitable(g_, {g_.vertices()});
        std::vector<Vertex> prefix;
        descend(root, prefix);
        return best_lab_;
    }

private:
    void descend(const std::vector<VertexSet>& cells, std::vector<Vertex>& prefix) {
        if (static_cast<int>(cells.size()) == n_) {
            leaf(cells);
            return;
        }
        std::size_t target = 0;
        int target_size = n_ + 1;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const int s = cells[i].size();
            if (s > 1 && s < target_size) {
                target = i;
                target_size = s;
            }
        }
        std::vector<Vertex> explored;
        for (Vertex w : cells[target].to_vector()) {
            if (!explored.empty() && equivalent_to_explored(w, explored, prefix)) continue;
            std::vector<VertexSet> next = cells;
            VertexSet rest = next[target];
            rest.erase(w);
            next[target] = VertexSet::single(w);
            next.insert(next.begin() + static_cast<std::ptrdiff_t>(target) + 1, rest);
            prefix.push_back(w);
            descend(refine_equitable(g_, std::move(next)), prefix);
            prefix.pop_back();
            explored.push_back(w);
        }
    }

    bool equivalent_to_explored(Vertex w, const std::vector<Vertex>& explored, const std::vector<Vertex>& prefix) {
        std::vector<int> root(n_);
        std::iota(root.begin(), root.end(), 0);
        auto find = [&](int x) {
            while (root[x] != x) x = root[x] = root[root[x]];
            return x;
        };
        bool any = false;
        for (const auto& gamma : automorphisms_) {
            bool fixes = true;
            for (Vertex p : prefix)
                if (gamma[p] != p) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            any = true;
            for (int v = 0; v < n_; ++v) root[find(v)] = find(gamma[v]);
        }
        if (!any) return false;
        for (Vertex e : explored)
            if (find(e) == find(w)) return true;
        return false;
    }

    void leaf(const std::vector<VertexSet>& cells) {
        std::vector<Vertex> lab(n_);
        for (int i = 0; i < n_; ++i) lab[i] = cells[i].min();
        std::vector<std::uint64_t> key(words_, 0);
        int t = 0;
        for (int j = 1; j < n_; ++j) {
            const auto row = g_.row(lab[j]);
            for (int i = 0; i < j; ++i, ++t)
                if ((row >> lab[i]) & 1U) key[t / 64] |= std::uint64_t{1} << (63 - t % 64);
        }
        if (best_lab_.empty() || key < best_key_) {
            best_key_ = std::move(key);
            best_lab_ = std::move(lab);
        } else if (key == best_key_ && automorphisms_.size() < 256) {
            std::vector<Vertex> gamma(n_);
            for (int i = 0; i < n_; ++i) gamma[lab[i]] = best_lab_[i];
            automorphisms_.push_back(std::move(gamma));
        }
    }

    const Graph& g_;
    int n_;
    int words_;
    std::vector<std::uint64_t> best_key_;
    std::vector<Vertex> best_lab_;
    std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace detail

inline CanonicalLabeling canonical_labeling(const Graph& g) {
    if (g.order() > kCanonicalHardCap)
        throw std::invalid_argument("canonical form supports order <= " + std::to_string(kCanonicalHardCap));
    const auto lab = detail::CanonicalSearch(g).run();
    std::vector<Vertex> position(g.order());
    for (int i = 0; i < g.order(); ++i) position[lab[i]] = i;
    return {position, CanonicalForm{to_graph6(permute(g, position))}};
}

inline CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

inline Graph canonical_graph(const Graph& g) { return from_graph6(canonical_form(g).graph6); }

inline bool isomorphic(const Graph& g, const Graph& h) {
    return g.order() == h.order() && g.edge_count() == h.edge_count() && canonical_form(g) == canonical_form(h);
}

}  // namespace wheelfree
