#include "fpg/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace fpg {

  SubgroupGraph::SubgroupGraph(std::size_t       alphabet_size,
                               std::size_t       vertex_count,
                               std::vector<Edge> edges,
                               std::size_t       base)
      : alphabet_size_(alphabet_size),
        vertex_count_(vertex_count),
        edges_(std::move(edges)),
        base_(base),
        adjacency_(vertex_count * 2 * alphabet_size, 0) {
    if (base_ >= vertex_count_) {
      throw std::invalid_argument("base vertex out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    auto slot = [&](std::size_t v, Letter l) -> std::size_t& {
      return adjacency_[v * 2 * alphabet_size_ + l.code()];
    };
    for (auto const& e : edges_) {
      if (e.from >= vertex_count_ || e.to >= vertex_count_
          || e.label >= alphabet_size_) {
        throw std::invalid_argument("edge out of range");
      }
      auto& fwd = slot(e.from, Letter{e.label, 1});
      auto& bwd = slot(e.to, Letter{e.label, -1});
      if (fwd != 0 || bwd != 0) {
        throw std::invalid_argument("graph is not folded");
      }
      fwd = e.to + 1;
      bwd = e.from + 1;
    }
  }

  std::optional<std::size_t> SubgroupGraph::follow(std::size_t v,
                                                   Letter      l) const {
    if (l.gen >= alphabet_size_) {
      return std::nullopt;
    }
    auto t = adjacency_[v * 2 * alphabet_size_ + l.code()];
    if (t == 0) {
      return std::nullopt;
    }
    return t - 1;
  }

  SubgroupGraph SubgroupGraph::core() const {
    std::vector<std::size_t> degree(vertex_count_, 0);
    for (auto const& e : edges_) {
      ++degree[e.from];
      ++degree[e.to];
    }
    std::vector<bool>        removed_edge(edges_.size(), false);
    std::vector<bool>        removed_vertex(vertex_count_, false);
    std::deque<std::size_t>  queue;
    for (std::size_t v = 0; v < vertex_count_; ++v) {
      if (v != base_ && degree[v] == 1) {
        queue.push_back(v);
      }
    }
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop_front();
      if (removed_vertex[v] || degree[v] != 1) {
        continue;
      }
      removed_vertex[v] = true;
      for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto const& e = edges_[i];
        if (removed_edge[i] || (e.from != v && e.to != v)) {
          continue;
        }
        removed_edge[i] = true;
        std::size_t other = e.from == v ? e.to : e.from;
        --degree[v];
        --degree[other];
        if (other != base_ && degree[other] == 1) {
          queue.push_back(other);
        }
      }
    }
    std::vector<std::size_t> renumber(vertex_count_, 0);
    std::size_t              next = 0;
    for (std::size_t v = 0; v < vertex_count_; ++v) {
      if (!removed_vertex[v]) {
        renumber[v] = next++;
      }
    }
    std::vector<Edge> kept;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (!removed_edge[i]) {
        kept.push_back(
            {renumber[edges_[i].from], edges_[i].label, renumber[edges_[i].to]});
      }
    }
    return SubgroupGraph(alphabet_size_, next, std::move(kept), renumber[base_]);
  }

  namespace {

    // Worklist folding over a union-find of vertices. Each vertex keeps a
    // map from signed-letter code to a (possibly stale) neighbour.
    class Folder {
     public:
      explicit Folder(std::size_t alphabet) : alphabet_(alphabet) {
        new_vertex();
      }

      std::size_t new_vertex() {
        parent_.push_back(parent_.size());
        adjacency_.emplace_back();
        return parent_.size() - 1;
      }

      void add_loop(Word const& w) {
        if (w.empty()) {
          return;
        }
        std::size_t v = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
          std::size_t u = i + 1 == w.size() ? 0 : new_vertex();
          add_edge(v, w[i], u);
          v = u;
        }
        drain();
      }

      SubgroupGraph finish() {
        std::vector<std::size_t> renumber(parent_.size(), 0);
        std::size_t              next = 0;
        for (std::size_t v = 0; v < parent_.size(); ++v) {
          if (find(v) == v) {
            renumber[v] = next++;
          }
        }
        std::vector<Edge> edges;
        for (std::size_t v = 0; v < parent_.size(); ++v) {
          if (find(v) != v) {
            continue;
          }
          for (auto const& [code, target] : adjacency_[v]) {
            Letter l = Letter::from_code(code);
            if (l.sign > 0) {
              edges.push_back({renumber[v], l.gen, renumber[find(target)]});
            }
          }
        }
        return SubgroupGraph(alphabet_, next, std::move(edges), renumber[find(0)]);
      }

     private:
      std::size_t find(std::size_t v) {
        while (parent_[v] != v) {
          parent_[v] = parent_[parent_[v]];
          v          = parent_[v];
        }
        return v;
      }

      void add_edge(std::size_t u, Letter l, std::size_t v) {
        set(u, l.code(), v);
        set(v, l.inverse().code(), u);
      }

      void set(std::size_t u, std::size_t code, std::size_t v) {
        u       = find(u);
        auto it = adjacency_[u].find(code);
        if (it == adjacency_[u].end()) {
          adjacency_[u].emplace(code, v);
        } else if (find(it->second) != find(v)) {
          pending_.emplace_back(it->second, v);
        }
      }

      void drain() {
        while (!pending_.empty()) {
          auto [a, b] = pending_.front();
          pending_.pop_front();
          merge(a, b);
        }
      }

      void merge(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return;
        }
        std::size_t keep = std::min(a, b);
        std::size_t gone = std::max(a, b);
        parent_[gone]    = keep;
        auto moved       = std::move(adjacency_[gone]);
        adjacency_[gone].clear();
        for (auto const& [code, target] : moved) {
          set(keep, code, target);
        }
      }

      std::size_t                                      alphabet_;
      std::vector<std::size_t>                         parent_;
      std::vector<std::map<std::size_t, std::size_t>> adjacency_;
      std::deque<std::pair<std::size_t, std::size_t>> pending_;
    };

  }  // namespace

  SubgroupGraph fold(std::size_t alphabet_size, std::span<Word const> words) {
    Folder folder(alphabet_size);
    for (auto const& w : words) {
      if (w.alphabet_bound() > alphabet_size) {
        throw std::invalid_argument("word uses a letter outside the alphabet");
      }
      folder.add_loop(w);
    }
    return folder.finish();
  }

  bool contains(SubgroupGraph const& g, Word const& w) {
    std::size_t v = g.base();
    for (Letter l : w) {
      auto next = g.follow(v, l);
      if (!next) {
        return false;
      }
      v = *next;
    }
    return v == g.base();
  }

  std::size_t rank(SubgroupGraph const& g) {
    return g.edges().size() + 1 - g.vertex_count();
  }

  bool is_basis(std::size_t alphabet_size, std::span<Word const> words) {
    if (std::any_of(words.begin(), words.end(),
                    [](Word const& w) { return w.empty(); })) {
      return false;
    }
    return rank(fold(alphabet_size, words)) == words.size();
  }

}  // namespace fpg
