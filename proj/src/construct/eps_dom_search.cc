// Copyright 2026 The Portfolio Abstraction Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "portfolio/dominance.h"
#include "portfolio/eps_dom.h"
#include "portfolio/errors.h"

namespace portfolio::construct {
namespace {

constexpr double kTieTolerance = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

void CheckK(const MatrixGame& game, int k) {
  if (k < 1 || k > game.cols()) {
    throw ParameterError("portfolio size " + std::to_string(k) + " outside [1, " +
                         std::to_string(game.cols()) + "]");
  }
}

// Depth-first search over k-subsets in lexicographic order. At a node the
// columns before `pos` are decided; every completion S lies inside
// included + {pos..n-1}, so the dominance eps of each excluded column against
// that superset is a lower bound.
class PureSearch {
 public:
  PureSearch(const MatrixGame& game, int k, std::int64_t budget,
             std::optional<double> target)
      : g_(game), n_(game.cols()), k_(k), budget_(budget), target_(target) {}

  void Seed(std::vector<int> columns, double eps) {
    best_set_ = std::move(columns);
    best_ = eps;
  }

  void Run() {
    std::vector<int> included;
    std::vector<std::pair<int, double>> excluded;
    Dfs(0, included, excluded, 0.0);
  }

  double Epsilon(const std::vector<int>& s, double cutoff,
                 const std::vector<std::pair<int, double>>& hints) {
    std::vector<bool> in(n_, false);
    for (int c : s) in[c] = true;
    // Columns most likely to be expensive first.
    std::vector<std::pair<double, int>> order;
    std::vector<bool> hinted(n_, false);
    for (const auto& [c, v] : hints) {
      order.emplace_back(-v, c);
      hinted[c] = true;
    }
    std::sort(order.begin(), order.end());
    for (int c = 0; c < n_; ++c) {
      if (!in[c] && !hinted[c]) order.emplace_back(0.0, c);
    }
    double eps = 0.0;
    for (const auto& [unused, c] : order) {
      if (in[c]) continue;
      eps = std::max(eps, Individual(c, s));
      if (eps > cutoff + kTieTolerance) break;
    }
    return eps;
  }

  const std::vector<int>& best_set() const { return best_set_; }
  double best() const { return best_; }
  SearchStats stats() const { return stats_; }
  bool found() const { return !best_set_.empty(); }

 private:
  double Individual(int c, const std::vector<int>& allowed) {
    ++stats_.lps;
    return equilibrium::IndividualEpsilon(g_, c, allowed).epsilon;
  }

  double Cutoff() const { return target_ ? *target_ : best_; }

  bool Prune(double bound, const std::vector<int>& lex_min) const {
    if (target_) return bound > *target_ + kTieTolerance;
    if (bound > best_ + kTieTolerance) return true;
    return bound >= best_ - kTieTolerance && found() && !(lex_min < best_set_);
  }

  void Leaf(const std::vector<int>& s, const std::vector<std::pair<int, double>>& hints) {
    const double eps = Epsilon(s, Cutoff(), hints);
    if (target_) {
      if (eps <= *target_ + kTieTolerance) {
        best_set_ = s;
        best_ = eps;
        done_ = true;
      }
      return;
    }
    if (eps < best_ - kTieTolerance ||
        (eps <= best_ + kTieTolerance && (!found() || s < best_set_))) {
      best_set_ = s;
      best_ = eps;
    }
  }

  void Dfs(int pos, std::vector<int>& included,
           std::vector<std::pair<int, double>>& excluded, double bound) {
    if (done_) return;
    if (++stats_.nodes > budget_) {
      stats_.proven_optimal = false;
      done_ = true;
      return;
    }
    const int need = k_ - static_cast<int>(included.size());
    std::vector<int> lex_min = included;
    for (int c = pos; c < pos + need; ++c) lex_min.push_back(c);
    if (Prune(bound, lex_min)) return;
    if (need == 0 || need == n_ - pos) {
      Leaf(lex_min, excluded);
      return;
    }

    included.push_back(pos);
    Dfs(pos + 1, included, excluded, bound);
    included.pop_back();
    if (done_) return;

    // Exclude pos: refresh every excluded column against the smaller superset.
    std::vector<int> superset = included;
    for (int c = pos + 1; c < n_; ++c) superset.push_back(c);
    std::vector<int> next_lex = included;
    for (int c = pos + 1; c < pos + 1 + need; ++c) next_lex.push_back(c);
    std::vector<std::pair<int, double>> child = excluded;
    child.emplace_back(pos, 0.0);
    double child_bound = 0.0;
    for (auto& [c, v] : child) {
      v = Individual(c, superset);
      child_bound = std::max(child_bound, v);
      if (Prune(child_bound, next_lex)) return;
    }
    Dfs(pos + 1, included, child, child_bound);
  }

  const MatrixGame& g_;
  const int n_;
  const int k_;
  const std::int64_t budget_;
  const std::optional<double> target_;
  std::vector<int> best_set_;
  double best_ = kInf;
  bool done_ = false;
  SearchStats stats_;
};

// Greedy start: keep the k columns that are hardest to dominate.
std::vector<int> GreedySeed(const MatrixGame& game, int k) {
  const int n = game.cols();
  std::vector<std::pair<double, int>> scored;
  for (int j = 0; j < n; ++j) {
    std::vector<int> others;
    for (int h = 0; h < n; ++h) {
      if (h != j) others.push_back(h);
    }
    double e = others.empty() ? 0.0 : equilibrium::IndividualEpsilon(game, j, others).epsilon;
    scored.emplace_back(e, j);
  }
  std::stable_sort(scored.begin(), scored.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<int> keep;
  for (int t = 0; t < k; ++t) keep.push_back(scored[t].second);
  std::sort(keep.begin(), keep.end());
  return keep;
}

// Columns that another column matches or beats for the column player in
// every row join that column's group at no cost, so only the remaining
// representatives are searched. cover[j] is the representative for j.
std::vector<int> Representatives(const MatrixGame& game, std::vector<int>& cover) {
  const int n = game.cols();
  const int m = game.rows();
  auto below = [&](int a, int b) {  // U[., a] <= U[., b]
    for (int i = 0; i < m; ++i) {
      if (game(i, a) > game(i, b)) return false;
    }
    return true;
  };
  cover.assign(n, -1);
  std::vector<int> reps;
  for (int j = 0; j < n; ++j) {
    bool covered = false;
    for (int h = 0; h < n && !covered; ++h) {
      if (h == j || !below(h, j)) continue;
      // Duplicates keep the lowest index.
      covered = !below(j, h) || h < j;
    }
    if (!covered) reps.push_back(j);
  }
  for (int j = 0; j < n; ++j) {
    for (int r : reps) {
      if (below(r, j)) {
        cover[j] = r;
        break;
      }
    }
  }
  return reps;
}

// Cost for e_a to cover column b.
double PureGap(const MatrixGame& game, int a, int b) {
  double gap = 0.0;
  for (int i = 0; i < game.rows(); ++i) gap = std::max(gap, game(i, a) - game(i, b));
  return gap;
}

// Farthest-first order so that early columns open well separated groups.
std::vector<int> SpreadOrder(const MatrixGame& game, const std::vector<int>& cols) {
  const int r = static_cast<int>(cols.size());
  std::vector<int> order;
  std::vector<double> dist(r, kInf);
  std::vector<bool> used(r, false);
  int next = 0;
  for (int t = 0; t < r; ++t) {
    used[next] = true;
    order.push_back(cols[next]);
    int arg = -1;
    for (int u = 0; u < r; ++u) {
      if (used[u]) continue;
      const double d = std::max(PureGap(game, cols[next], cols[u]),
                                PureGap(game, cols[u], cols[next]));
      dist[u] = std::min(dist[u], d);
      if (arg < 0 || dist[u] > dist[arg]) arg = u;
    }
    next = arg;
  }
  return order;
}

// Depth-first assignment of columns to at most k groups. Groups are opened in
// order to avoid symmetric duplicates, and every partition uses exactly
// min(k, columns) groups since splitting a group never raises its cost.
class MixedSearch {
 public:
  MixedSearch(const MatrixGame& game, int k, std::int64_t budget)
      : g_(game), n_(game.cols()), m_(game.rows()), budget_(budget) {
    all_.resize(n_);
    std::iota(all_.begin(), all_.end(), 0);
    std::vector<int> reps = Representatives(game, cover_);
    order_ = SpreadOrder(game, reps);
    k_ = std::min<int>(k, static_cast<int>(order_.size()));
  }

  void Run() { Dfs(0); }

  MixedSearchResult Result() const {
    MixedSearchResult out;
    out.groups = best_groups_;
    out.mixtures = best_mixtures_;
    out.epsilon = best_;
    out.stats = stats_;
    // Attach covered columns to their representative's group.
    for (int j = 0; j < n_; ++j) {
      if (cover_[j] == j) continue;
      for (auto& group : out.groups) {
        if (std::find(group.begin(), group.end(), cover_[j]) != group.end()) {
          group.push_back(j);
          break;
        }
      }
    }
    for (auto& group : out.groups) std::sort(group.begin(), group.end());
    return out;
  }

 private:
  struct Group {
    std::vector<int> members;
    std::vector<double> mixture;
    // Mixture payoff against every row.
    std::vector<double> row_value;
    double eps = 0.0;
  };

  double Slack(const Group& group, int j) const {
    double slack = -kInf;
    for (int i = 0; i < m_; ++i) slack = std::max(slack, group.row_value[i] - g_(i, j));
    return slack;
  }

  // Cost of `group` after adding column j; reuses the current mixture when it
  // already covers j.
  Group Extend(const Group& group, int j) {
    if (Slack(group, j) <= group.eps) {
      Group out = group;
      out.members.push_back(j);
      return out;
    }
    Group out;
    out.members = group.members;
    out.members.push_back(j);
    ++stats_.lps;
    equilibrium::DominanceResult d = equilibrium::CoverEpsilon(g_, out.members, all_);
    out.mixture = std::move(d.mixture.probabilities);
    out.row_value = RowPayoffs(g_, out.mixture);
    out.eps = d.epsilon;
    return out;
  }

  Group Singleton(int j) const {
    Group out;
    out.members = {j};
    out.mixture = MixedStrategy::Pure(n_, j, Player::kColumn).probabilities;
    out.row_value = RowPayoffs(g_, out.mixture);
    out.eps = 0.0;
    return out;
  }

  double Current() const {
    double e = 0.0;
    for (const Group& gr : groups_) e = std::max(e, gr.eps);
    return e;
  }

  // With every group open, each unassigned column must land somewhere; the
  // cheapest placement of the worst column bounds the subtree.
  bool LookaheadPrunes(int pos, double cur) {
    if (static_cast<int>(groups_.size()) < k_) return false;
    for (int p = pos; p < static_cast<int>(order_.size()); ++p) {
      const int j = order_[p];
      double cheapest = kInf;
      for (const Group& gr : groups_) {
        if (Slack(gr, j) <= std::max(gr.eps, cur)) {
          cheapest = cur;
          break;
        }
      }
      if (cheapest <= cur) continue;
      for (const Group& gr : groups_) {
        Group ext = Extend(gr, j);
        cheapest = std::min(cheapest, ext.eps);
        if (cheapest < best_ - kTieTolerance) break;
      }
      if (cheapest >= best_ - kTieTolerance) return true;
    }
    return false;
  }

  void Record(double cur) {
    best_ = cur;
    best_groups_.clear();
    best_mixtures_.clear();
    for (const Group& gr : groups_) {
      best_groups_.push_back(gr.members);
      best_mixtures_.push_back(gr.mixture);
    }
  }

  void Dfs(int pos) {
    if (done_) return;
    if (++stats_.nodes > budget_) {
      stats_.proven_optimal = false;
      done_ = true;
      return;
    }
    const double cur = Current();
    if (cur >= best_ - kTieTolerance) return;
    const int r = static_cast<int>(order_.size());
    if (pos == r) {
      Record(cur);
      return;
    }
    if (LookaheadPrunes(pos, cur)) return;
    const int j = order_[pos];
    const int opened = static_cast<int>(groups_.size());
    const bool must_open = r - pos == k_ - opened;

    struct Child {
      double eps;
      int z;  // -1 opens a new group
      Group group;
    };
    std::vector<Child> children;
    if (!must_open) {
      for (int z = 0; z < opened; ++z) {
        Group ext = Extend(groups_[z], j);
        const double e = std::max(cur, ext.eps);
        if (e < best_ - kTieTolerance) children.push_back({e, z, std::move(ext)});
      }
    }
    if (opened < k_) children.push_back({cur, -1, Singleton(j)});
    std::stable_sort(children.begin(), children.end(),
                     [](const Child& a, const Child& b) { return a.eps < b.eps; });

    for (Child& child : children) {
      if (child.eps >= best_ - kTieTolerance) break;
      if (child.z < 0) {
        groups_.push_back(std::move(child.group));
        Dfs(pos + 1);
        groups_.pop_back();
      } else {
        std::swap(groups_[child.z], child.group);
        Dfs(pos + 1);
        std::swap(groups_[child.z], child.group);
      }
      if (done_) return;
    }
  }

  const MatrixGame& g_;
  const int n_;
  const int m_;
  int k_ = 1;
  const std::int64_t budget_;
  std::vector<int> all_;
  std::vector<int> cover_;
  std::vector<int> order_;
  std::vector<Group> groups_;
  std::vector<std::vector<int>> best_groups_;
  std::vector<std::vector<double>> best_mixtures_;
  double best_ = kInf;
  bool done_ = false;
  SearchStats stats_;
};

}  // namespace

double PurePortfolioEpsilon(const MatrixGame& game, const std::vector<int>& columns) {
  PureSearch search(game, static_cast<int>(columns.size()), 0, std::nullopt);
  std::vector<int> sorted = columns;
  std::sort(sorted.begin(), sorted.end());
  return search.Epsilon(sorted, kInf, {});
}

PureSearchResult SearchPurePortfolio(const MatrixGame& game, int k,
                                     std::int64_t node_budget) {
  CheckK(game, k);
  PureSearch search(game, k, node_budget, std::nullopt);
  std::vector<int> seed = GreedySeed(game, k);
  search.Seed(seed, PurePortfolioEpsilon(game, seed));
  search.Run();
  PureSearchResult out;
  out.columns = search.best_set();
  out.epsilon = search.best();
  out.stats = search.stats();
  return out;
}

std::optional<PureSearchResult> FindPurePortfolioWithin(const MatrixGame& game, int k,
                                                        double epsilon,
                                                        std::int64_t node_budget) {
  CheckK(game, k);
  PureSearch search(game, k, node_budget, epsilon);
  search.Run();
  if (!search.found()) {
    if (!search.stats().proven_optimal) {
      throw ResourceError("node budget exhausted deciding size " + std::to_string(k));
    }
    return std::nullopt;
  }
  PureSearchResult out;
  out.columns = search.best_set();
  out.epsilon = search.best();
  out.stats = search.stats();
  return out;
}

MixedSearchResult SearchMixedPortfolio(const MatrixGame& game, int k,
                                       std::int64_t node_budget) {
  CheckK(game, k);
  MixedSearch search(game, k, node_budget);
  search.Run();
  return search.Result();
}

}  // namespace portfolio::construct
