#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace ordalg::detail {

  class UnionFind {
   public:
    explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
      std::iota(parent_.begin(), parent_.end(), 0);
    }

    std::size_t find(std::size_t x) {
      while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x          = parent_[x];
      }
      return x;
    }

    bool unite(std::size_t x, std::size_t y) {
      x = find(x);
      y = find(y);
      if (x == y) {
        return false;
      }
      if (rank_[x] < rank_[y]) {
        std::swap(x, y);
      }
      parent_[y] = x;
      if (rank_[x] == rank_[y]) {
        ++rank_[x];
      }
      return true;
    }

    // Blocks ordered by least member.
    std::vector<std::vector<std::size_t>> blocks() {
      std::size_t const                     n = parent_.size();
      std::vector<std::size_t>              block_of(n, n);
      std::vector<std::vector<std::size_t>> out;
      for (std::size_t x = 0; x < n; ++x) {
        auto r = find(x);
        if (block_of[r] == n) {
          block_of[r] = out.size();
          out.emplace_back();
        }
        out[block_of[r]].push_back(x);
      }
      return out;
    }

   private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> rank_;
  };

}  // namespace ordalg::detail
