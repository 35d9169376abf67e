#include "ghlab/gh_exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ghlab {
namespace {

class Search {
 public:
  Search(const FiniteMetricSpace& x, const FiniteMetricSpace& y, std::uint64_t budget)
      : x_(x), y_(y), nx_(x.size()), ny_(y.size()), budget_(budget) {
    placed_.reserve(static_cast<std::size_t>(nx_ + ny_));
  }

  void seed_incumbent() {
    // Greedy assignment in search order; each point takes its cheapest partner.
    for (Index level = 0; level < nx_ + ny_; ++level) {
      double best_cost = std::numeric_limits<double>::infinity();
      IndexPair best_pair;
      for (Index v = 0; v < partner_count(level); ++v) {
        const IndexPair p = pair_at(level, v);
        const double cost = added_cost(p);
        if (cost < best_cost) {
          best_cost = cost;
          best_pair = p;
        }
      }
      placed_.push_back(best_pair);
    }
    consider_leaf(relation_cost(placed_));
    placed_.clear();
  }

  void run() { descend(0, 0.0); }

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }
  double best_cost() const { return best_cost_; }
  const std::vector<IndexPair>& best_pairs() const { return best_pairs_; }

 private:
  Index partner_count(Index level) const { return level < nx_ ? ny_ : nx_; }

  IndexPair pair_at(Index level, Index v) const {
    return level < nx_ ? IndexPair{level, v} : IndexPair{v, level - nx_};
  }

  double added_cost(const IndexPair& p) const {
    double worst = 0.0;
    for (const auto& q : placed_)
      worst = std::max(worst, std::abs(x_(p.first, q.first) - y_(p.second, q.second)));
    return worst;
  }

  double relation_cost(const std::vector<IndexPair>& pairs) const {
    double worst = 0.0;
    for (std::size_t a = 0; a < pairs.size(); ++a)
      for (std::size_t b = a + 1; b < pairs.size(); ++b)
        worst = std::max(worst, std::abs(x_(pairs[a].first, pairs[b].first) - y_(pairs[a].second, pairs[b].second)));
    return worst;
  }

  void consider_leaf(double cost) {
    std::vector<IndexPair> pairs = placed_;
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    if (cost < best_cost_ || (cost == best_cost_ && pairs < best_pairs_)) {
      best_cost_ = cost;
      best_pairs_ = std::move(pairs);
    }
  }

  void descend(Index level, double cost) {
    if (exhausted_) return;
    if (level == nx_ + ny_) {
      consider_leaf(cost);
      return;
    }
    for (Index v = 0; v < partner_count(level); ++v) {
      if (nodes_ >= budget_) {
        exhausted_ = true;
        return;
      }
      ++nodes_;
      const IndexPair p = pair_at(level, v);
      const double next = std::max(cost, added_cost(p));
      // Ties are kept so the lexicographic minimum among optima is reachable.
      if (next > best_cost_) continue;
      placed_.push_back(p);
      descend(level + 1, next);
      placed_.pop_back();
      if (exhausted_) return;
    }
  }

  const FiniteMetricSpace& x_;
  const FiniteMetricSpace& y_;
  Index nx_;
  Index ny_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<IndexPair> placed_;
  double best_cost_ = std::numeric_limits<double>::infinity();
  std::vector<IndexPair> best_pairs_;
};

}  // namespace

GHResult gh_exact(const FiniteMetricSpace& x, const FiniteMetricSpace& y, std::uint64_t node_budget) {
  Search search(x, y, node_budget);
  search.seed_incumbent();
  search.run();
  return GHResult{
      .distance = search.best_cost() / 2.0,
      .optimal = Correspondence(search.best_pairs(), x.size(), y.size()),
      .nodes_explored = search.nodes(),
      .exact = !search.exhausted(),
  };
}

}  // namespace ghlab
