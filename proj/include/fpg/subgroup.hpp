// Stallings folding for finitely generated subgroups of free groups.

#ifndef FPG_SUBGROUP_HPP_
#define FPG_SUBGROUP_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fpg/word.hpp"

namespace fpg {

  struct Edge {
    std::size_t     from = 0;
    generator_index label = 0;
    std::size_t     to   = 0;

    friend bool operator==(Edge const&, Edge const&) = default;
    friend auto operator<=>(Edge const&, Edge const&) = default;
  };

  // A folded, connected, labelled graph with a base vertex. Edges are stored
  // sorted; `out`/`in` give the unique neighbour along a label, if any.
  class SubgroupGraph {
   public:
    SubgroupGraph(std::size_t       alphabet_size,
                  std::size_t       vertex_count,
                  std::vector<Edge> edges,
                  std::size_t       base);

    [[nodiscard]] std::size_t alphabet_size() const noexcept {
      return alphabet_size_;
    }
    [[nodiscard]] std::size_t vertex_count() const noexcept {
      return vertex_count_;
    }
    [[nodiscard]] std::span<Edge const> edges() const noexcept {
      return edges_;
    }
    [[nodiscard]] std::size_t base() const noexcept {
      return base_;
    }

    // Target of the edge leaving v along the signed letter, if present.
    [[nodiscard]] std::optional<std::size_t> follow(std::size_t v,
                                                    Letter      l) const;

    // The subgraph obtained by repeatedly deleting non-base vertices of
    // degree one.
    [[nodiscard]] SubgroupGraph core() const;

    friend bool operator==(SubgroupGraph const&, SubgroupGraph const&)
        = default;

   private:
    std::size_t       alphabet_size_;
    std::size_t       vertex_count_;
    std::vector<Edge> edges_;
    std::size_t       base_;
    // adjacency_[v * 2 * alphabet + code] = neighbour + 1, 0 if absent
    std::vector<std::size_t> adjacency_;
  };

  // Folded graph of the subgroup generated by `words`. Merges keep the
  // smaller vertex index; surviving vertices are renumbered in order.
  [[nodiscard]] SubgroupGraph fold(std::size_t           alphabet_size,
                                   std::span<Word const> words);

  [[nodiscard]] bool contains(SubgroupGraph const& g, Word const& w);

  // Rank of the subgroup: edges - vertices + 1.
  [[nodiscard]] std::size_t rank(SubgroupGraph const& g);

  // True iff the words form a free basis of the subgroup they generate.
  [[nodiscard]] bool is_basis(std::size_t alphabet_size,
                              std::span<Word const> words);

}  // namespace fpg

#endif  // FPG_SUBGROUP_HPP_
