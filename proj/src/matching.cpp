#include "hamdec/matching.hpp"

#include <limits>
#include <queue>

namespace hamdec {

namespace {

struct HopcroftKarp {
  int nl, nr;
  const std::vector<std::vector<int>>& adj;
  std::vector<int> ml, mr, dist, it;

  HopcroftKarp(int l, int r, const std::vector<std::vector<int>>& a)
      : nl(l), nr(r), adj(a), ml(l, -1), mr(r, -1), dist(l), it(l) {}

  bool bfs() {
    std::queue<int> q;
    bool found = false;
    for (int u = 0; u < nl; ++u) {
      dist[u] = ml[u] < 0 ? 0 : std::numeric_limits<int>::max();
      if (ml[u] < 0) q.push(u);
    }
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        const int w = mr[v];
        if (w < 0) {
          found = true;
        } else if (dist[w] == std::numeric_limits<int>::max()) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(int u) {
    for (int& i = it[u]; i < static_cast<int>(adj[u].size()); ++i) {
      const int v = adj[u][i];
      const int w = mr[v];
      if (w < 0 || (dist[w] == dist[u] + 1 && dfs(w))) {
        ml[u] = v;
        mr[v] = u;
        return true;
      }
    }
    dist[u] = std::numeric_limits<int>::max();
    return false;
  }

  void run() {
    while (bfs()) {
      std::fill(it.begin(), it.end(), 0);
      for (int u = 0; u < nl; ++u)
        if (ml[u] < 0) dfs(u);
    }
  }
};

}  // namespace

std::vector<int> max_matching(int n_left, int n_right, const std::vector<std::vector<int>>& adj) {
  HopcroftKarp hk(n_left, n_right, adj);
  hk.run();
  return hk.ml;
}

}  // namespace hamdec
