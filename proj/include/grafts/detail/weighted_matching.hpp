// Copyright 2026 The Grafts Authors.
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

// Maximum-weight matching in general graphs (Edmonds' blossom algorithm with
// the Galil primal-dual bookkeeping, O(n^3)). Integer weights only; all dual
// variables are kept doubled so arithmetic stays integral.
//
// The layout follows the classic array formulation: edge k has endpoints
// 2k and 2k+1; vertices are 0..n-1 and blossoms n..2n-1.

#ifndef GRAFTS_DETAIL_WEIGHTED_MATCHING_HPP_
#define GRAFTS_DETAIL_WEIGHTED_MATCHING_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace grafts::detail {

struct WeightedEdge {
  int u;
  int v;
  std::int64_t weight;
};

class MaxWeightMatcher {
 public:
  MaxWeightMatcher(int vertex_count, std::vector<WeightedEdge> edges, bool max_cardinality)
      : n_(vertex_count), edges_(std::move(edges)), max_cardinality_(max_cardinality) {}

  // mate[v] is the matched partner of v, or -1.
  std::vector<int> solve() {
    if (edges_.empty() || n_ == 0) return std::vector<int>(n_, -1);
    init();
    for (int stage = 0; stage < n_; ++stage) {
      std::fill(label_.begin(), label_.end(), 0);
      std::fill(best_edge_.begin(), best_edge_.end(), -1);
      for (int b = n_; b < 2 * n_; ++b) blossom_best_edges_[b].clear(), has_best_list_[b] = 0;
      std::fill(allow_edge_.begin(), allow_edge_.end(), 0);
      queue_.clear();
      for (int v = 0; v < n_; ++v) {
        if (mate_[v] == -1 && label_[in_blossom_[v]] == 0) assign_label(v, 1, -1);
      }
      bool augmented = false;
      while (true) {
        while (!queue_.empty() && !augmented) {
          int v = queue_.back();
          queue_.pop_back();
          for (int p : neighbor_ends_[v]) {
            int k = p / 2;
            int w = endpoint_[p];
            if (in_blossom_[v] == in_blossom_[w]) continue;
            std::int64_t kslack = 0;
            if (!allow_edge_[k]) {
              kslack = slack(k);
              if (kslack <= 0) allow_edge_[k] = 1;
            }
            if (allow_edge_[k]) {
              if (label_[in_blossom_[w]] == 0) {
                assign_label(w, 2, p ^ 1);
              } else if (label_[in_blossom_[w]] == 1) {
                int base = scan_blossom(v, w);
                if (base >= 0) {
                  add_blossom(base, k);
                } else {
                  augment_matching(k);
                  augmented = true;
                  break;
                }
              } else if (label_[w] == 0) {
                label_[w] = 2;
                label_end_[w] = p ^ 1;
              }
            } else if (label_[in_blossom_[w]] == 1) {
              int b = in_blossom_[v];
              if (best_edge_[b] == -1 || kslack < slack(best_edge_[b])) best_edge_[b] = k;
            } else if (label_[w] == 0) {
              if (best_edge_[w] == -1 || kslack < slack(best_edge_[w])) best_edge_[w] = k;
            }
          }
        }
        if (augmented) break;

        int delta_type = -1;
        std::int64_t delta = 0;
        int delta_edge = -1;
        int delta_blossom = -1;
        if (!max_cardinality_) {
          delta_type = 1;
          delta = *std::min_element(dual_.begin(), dual_.begin() + n_);
        }
        for (int v = 0; v < n_; ++v) {
          if (label_[in_blossom_[v]] == 0 && best_edge_[v] != -1) {
            std::int64_t d = slack(best_edge_[v]);
            if (delta_type == -1 || d < delta) {
              delta = d;
              delta_type = 2;
              delta_edge = best_edge_[v];
            }
          }
        }
        for (int b = 0; b < 2 * n_; ++b) {
          if (blossom_parent_[b] == -1 && label_[b] == 1 && best_edge_[b] != -1) {
            std::int64_t s = slack(best_edge_[b]);
            if (s % 2 != 0) throw std::logic_error("odd slack between S-blossoms");
            std::int64_t d = s / 2;
            if (delta_type == -1 || d < delta) {
              delta = d;
              delta_type = 3;
              delta_edge = best_edge_[b];
            }
          }
        }
        for (int b = n_; b < 2 * n_; ++b) {
          if (blossom_base_[b] >= 0 && blossom_parent_[b] == -1 && label_[b] == 2 &&
              (delta_type == -1 || dual_[b] < delta)) {
            delta = dual_[b];
            delta_type = 4;
            delta_blossom = b;
          }
        }
        if (delta_type == -1) {
          delta_type = 1;
          delta = std::max<std::int64_t>(0, *std::min_element(dual_.begin(), dual_.begin() + n_));
        }
        for (int v = 0; v < n_; ++v) {
          if (label_[in_blossom_[v]] == 1) {
            dual_[v] -= delta;
          } else if (label_[in_blossom_[v]] == 2) {
            dual_[v] += delta;
          }
        }
        for (int b = n_; b < 2 * n_; ++b) {
          if (blossom_base_[b] >= 0 && blossom_parent_[b] == -1) {
            if (label_[b] == 1) {
              dual_[b] += delta;
            } else if (label_[b] == 2) {
              dual_[b] -= delta;
            }
          }
        }
        if (delta_type == 1) break;
        if (delta_type == 2) {
          allow_edge_[delta_edge] = 1;
          int i = edges_[delta_edge].u;
          int j = edges_[delta_edge].v;
          if (label_[in_blossom_[i]] == 0) std::swap(i, j);
          queue_.push_back(i);
        } else if (delta_type == 3) {
          allow_edge_[delta_edge] = 1;
          queue_.push_back(edges_[delta_edge].u);
        } else {
          expand_blossom(delta_blossom, false);
        }
      }
      if (!augmented) break;
      for (int b = n_; b < 2 * n_; ++b) {
        if (blossom_parent_[b] == -1 && blossom_base_[b] >= 0 && label_[b] == 1 && dual_[b] == 0) {
          expand_blossom(b, true);
        }
      }
    }
    std::vector<int> mate(n_, -1);
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] >= 0) mate[v] = endpoint_[mate_[v]];
    }
    return mate;
  }

 private:
  void init() {
    const int m = static_cast<int>(edges_.size());
    std::int64_t max_weight = 0;
    for (const WeightedEdge& e : edges_) max_weight = std::max(max_weight, e.weight);
    endpoint_.resize(2 * m);
    neighbor_ends_.assign(n_, {});
    for (int k = 0; k < m; ++k) {
      endpoint_[2 * k] = edges_[k].u;
      endpoint_[2 * k + 1] = edges_[k].v;
      neighbor_ends_[edges_[k].u].push_back(2 * k + 1);
      neighbor_ends_[edges_[k].v].push_back(2 * k);
    }
    mate_.assign(n_, -1);
    label_.assign(2 * n_, 0);
    label_end_.assign(2 * n_, -1);
    in_blossom_.resize(n_);
    for (int v = 0; v < n_; ++v) in_blossom_[v] = v;
    blossom_parent_.assign(2 * n_, -1);
    blossom_children_.assign(2 * n_, {});
    blossom_base_.assign(2 * n_, -1);
    for (int v = 0; v < n_; ++v) blossom_base_[v] = v;
    blossom_ends_.assign(2 * n_, {});
    best_edge_.assign(2 * n_, -1);
    blossom_best_edges_.assign(2 * n_, {});
    has_best_list_.assign(2 * n_, 0);
    unused_blossoms_.clear();
    for (int b = n_; b < 2 * n_; ++b) unused_blossoms_.push_back(b);
    dual_.assign(2 * n_, 0);
    for (int v = 0; v < n_; ++v) dual_[v] = max_weight;
    allow_edge_.assign(m, 0);
  }

  std::int64_t slack(int k) const {
    const WeightedEdge& e = edges_[k];
    return dual_[e.u] + dual_[e.v] - 2 * e.weight;
  }

  void leaves(int b, std::vector<int>& out) const {
    if (b < n_) {
      out.push_back(b);
      return;
    }
    for (int t : blossom_children_[b]) leaves(t, out);
  }

  std::vector<int> leaves(int b) const {
    std::vector<int> out;
    leaves(b, out);
    return out;
  }

  void assign_label(int w, int t, int p) {
    int b = in_blossom_[w];
    label_[w] = label_[b] = t;
    label_end_[w] = label_end_[b] = p;
    best_edge_[w] = best_edge_[b] = -1;
    if (t == 1) {
      leaves(b, queue_);
    } else if (t == 2) {
      int base = blossom_base_[b];
      assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
    }
  }

  // Trace back from v and w to find either a new blossom base or an
  // augmenting path (returns -1).
  int scan_blossom(int v, int w) {
    std::vector<int> path;
    int base = -1;
    while (v != -1 || w != -1) {
      int b = in_blossom_[v];
      if (label_[b] & 4) {
        base = blossom_base_[b];
        break;
      }
      path.push_back(b);
      label_[b] = 5;
      if (label_end_[b] == -1) {
        v = -1;
      } else {
        v = endpoint_[label_end_[b]];
        b = in_blossom_[v];
        v = endpoint_[label_end_[b]];
      }
      if (w != -1) std::swap(v, w);
    }
    for (int b : path) label_[b] = 1;
    return base;
  }

  void add_blossom(int base, int k) {
    int v = edges_[k].u;
    int w = edges_[k].v;
    int bb = in_blossom_[base];
    int bv = in_blossom_[v];
    int bw = in_blossom_[w];
    int b = unused_blossoms_.back();
    unused_blossoms_.pop_back();
    blossom_base_[b] = base;
    blossom_parent_[b] = -1;
    blossom_parent_[bb] = b;
    std::vector<int>& path = blossom_children_[b];
    std::vector<int>& ends = blossom_ends_[b];
    path.clear();
    ends.clear();
    while (bv != bb) {
      blossom_parent_[bv] = b;
      path.push_back(bv);
      ends.push_back(label_end_[bv]);
      v = endpoint_[label_end_[bv]];
      bv = in_blossom_[v];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(ends.begin(), ends.end());
    ends.push_back(2 * k);
    while (bw != bb) {
      blossom_parent_[bw] = b;
      path.push_back(bw);
      ends.push_back(label_end_[bw] ^ 1);
      w = endpoint_[label_end_[bw]];
      bw = in_blossom_[w];
    }
    label_[b] = 1;
    label_end_[b] = label_end_[bb];
    dual_[b] = 0;
    for (int leaf : leaves(b)) {
      if (label_[in_blossom_[leaf]] == 2) queue_.push_back(leaf);
      in_blossom_[leaf] = b;
    }
    std::vector<int> best_to(2 * n_, -1);
    for (int child : path) {
      std::vector<int> candidates;
      if (!has_best_list_[child]) {
        for (int leaf : leaves(child)) {
          for (int p : neighbor_ends_[leaf]) candidates.push_back(p / 2);
        }
      } else {
        candidates = blossom_best_edges_[child];
      }
      for (int kk : candidates) {
        int i = edges_[kk].u;
        int j = edges_[kk].v;
        if (in_blossom_[j] == b) std::swap(i, j);
        int bj = in_blossom_[j];
        if (bj != b && label_[bj] == 1 && (best_to[bj] == -1 || slack(kk) < slack(best_to[bj]))) {
          best_to[bj] = kk;
        }
      }
      blossom_best_edges_[child].clear();
      has_best_list_[child] = 0;
      best_edge_[child] = -1;
    }
    blossom_best_edges_[b].clear();
    for (int kk : best_to) {
      if (kk != -1) blossom_best_edges_[b].push_back(kk);
    }
    has_best_list_[b] = 1;
    best_edge_[b] = -1;
    for (int kk : blossom_best_edges_[b]) {
      if (best_edge_[b] == -1 || slack(kk) < slack(best_edge_[b])) best_edge_[b] = kk;
    }
  }

  void expand_blossom(int b, bool end_stage) {
    for (int s : blossom_children_[b]) {
      blossom_parent_[s] = -1;
      if (s < n_) {
        in_blossom_[s] = s;
      } else if (end_stage && dual_[s] == 0) {
        expand_blossom(s, end_stage);
      } else {
        for (int leaf : leaves(s)) in_blossom_[leaf] = s;
      }
    }
    if (!end_stage && label_[b] == 2) {
      std::vector<int>& children = blossom_children_[b];
      std::vector<int>& ends = blossom_ends_[b];
      const int size = static_cast<int>(children.size());
      int entry_child = in_blossom_[endpoint_[label_end_[b] ^ 1]];
      int j = static_cast<int>(std::find(children.begin(), children.end(), entry_child) - children.begin());
      int j_step;
      int endptrick;
      if (j & 1) {
        j -= size;
        j_step = 1;
        endptrick = 0;
      } else {
        j_step = -1;
        endptrick = 1;
      }
      auto at = [size](const std::vector<int>& list, int index) {
        return list[((index % size) + size) % size];
      };
      int p = label_end_[b];
      while (j != 0) {
        label_[endpoint_[p ^ 1]] = 0;
        label_[endpoint_[at(ends, j - endptrick) ^ endptrick ^ 1]] = 0;
        assign_label(endpoint_[p ^ 1], 2, p);
        allow_edge_[at(ends, j - endptrick) / 2] = 1;
        j += j_step;
        p = at(ends, j - endptrick) ^ endptrick;
        allow_edge_[p / 2] = 1;
        j += j_step;
      }
      int bv = at(children, j);
      label_[endpoint_[p ^ 1]] = label_[bv] = 2;
      label_end_[endpoint_[p ^ 1]] = label_end_[bv] = p;
      best_edge_[bv] = -1;
      j += j_step;
      while (at(children, j) != entry_child) {
        bv = at(children, j);
        if (label_[bv] == 1) {
          j += j_step;
          continue;
        }
        int found = -1;
        for (int leaf : leaves(bv)) {
          if (label_[leaf] != 0) {
            found = leaf;
            break;
          }
        }
        if (found != -1) {
          label_[found] = 0;
          label_[endpoint_[mate_[blossom_base_[bv]]]] = 0;
          assign_label(found, 2, label_end_[found]);
        }
        j += j_step;
      }
    }
    label_[b] = label_end_[b] = -1;
    blossom_children_[b].clear();
    blossom_ends_[b].clear();
    blossom_base_[b] = -1;
    blossom_best_edges_[b].clear();
    has_best_list_[b] = 0;
    best_edge_[b] = -1;
    unused_blossoms_.push_back(b);
  }

  void augment_blossom(int b, int v) {
    int t = v;
    while (blossom_parent_[t] != b) t = blossom_parent_[t];
    if (t >= n_) augment_blossom(t, v);
    std::vector<int>& children = blossom_children_[b];
    std::vector<int>& ends = blossom_ends_[b];
    const int size = static_cast<int>(children.size());
    int i = static_cast<int>(std::find(children.begin(), children.end(), t) - children.begin());
    int j = i;
    int j_step;
    int endptrick;
    if (i & 1) {
      j -= size;
      j_step = 1;
      endptrick = 0;
    } else {
      j_step = -1;
      endptrick = 1;
    }
    auto at = [size](const std::vector<int>& list, int index) {
      return list[((index % size) + size) % size];
    };
    while (j != 0) {
      j += j_step;
      t = at(children, j);
      int p = at(ends, j - endptrick) ^ endptrick;
      if (t >= n_) augment_blossom(t, endpoint_[p]);
      j += j_step;
      t = at(children, j);
      if (t >= n_) augment_blossom(t, endpoint_[p ^ 1]);
      mate_[endpoint_[p]] = p ^ 1;
      mate_[endpoint_[p ^ 1]] = p;
    }
    std::rotate(children.begin(), children.begin() + i, children.end());
    std::rotate(ends.begin(), ends.begin() + i, ends.end());
    blossom_base_[b] = blossom_base_[children[0]];
  }

  void augment_matching(int k) {
    int v = edges_[k].u;
    int w = edges_[k].v;
    const int starts[2][2] = {{v, 2 * k + 1}, {w, 2 * k}};
    for (const auto& start : starts) {
      int s = start[0];
      int p = start[1];
      while (true) {
        int bs = in_blossom_[s];
        if (bs >= n_) augment_blossom(bs, s);
        mate_[s] = p;
        if (label_end_[bs] == -1) break;
        int t = endpoint_[label_end_[bs]];
        int bt = in_blossom_[t];
        s = endpoint_[label_end_[bt]];
        int j = endpoint_[label_end_[bt] ^ 1];
        if (bt >= n_) augment_blossom(bt, j);
        mate_[j] = label_end_[bt];
        p = label_end_[bt] ^ 1;
      }
    }
  }

  int n_;
  std::vector<WeightedEdge> edges_;
  bool max_cardinality_;

  std::vector<int> endpoint_;
  std::vector<std::vector<int>> neighbor_ends_;
  std::vector<int> mate_;
  std::vector<int> label_;
  std::vector<int> label_end_;
  std::vector<int> in_blossom_;
  std::vector<int> blossom_parent_;
  std::vector<std::vector<int>> blossom_children_;
  std::vector<int> blossom_base_;
  std::vector<std::vector<int>> blossom_ends_;
  std::vector<int> best_edge_;
  std::vector<std::vector<int>> blossom_best_edges_;
  std::vector<char> has_best_list_;
  std::vector<int> unused_blossoms_;
  std::vector<std::int64_t> dual_;
  std::vector<char> allow_edge_;
  std::vector<int> queue_;
};

// Minimum-weight perfect matching on the complete graph over n (even)
// points with the given symmetric non-negative cost matrix. Returns mate.
inline std::vector<int> min_weight_perfect_matching(const std::vector<std::vector<std::int64_t>>& cost) {
  const int n = static_cast<int>(cost.size());
  if (n == 0) return {};
  std::int64_t top = 0;
  for (const auto& row : cost) {
    for (std::int64_t c : row) top = std::max(top, c);
  }
  std::vector<WeightedEdge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j, top + 1 - cost[i][j]});
  }
  std::vector<int> mate = MaxWeightMatcher(n, std::move(edges), true).solve();
  for (int v : mate) {
    if (v < 0) throw std::logic_error("matcher returned a non-perfect matching");
  }
  return mate;
}

}  // namespace grafts::detail

#endif  // GRAFTS_DETAIL_WEIGHTED_MATCHING_HPP_
