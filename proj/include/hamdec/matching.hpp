#pragma once

#include <cstdint>
#include <vector>

namespace hamdec {

// Maximum bipartite matching (Hopcroft-Karp). adj[u] lists right vertices of
// left vertex u in the order they are tried. Returns match[u] or -1.
std::vector<int> max_matching(int n_left, int n_right, const std::vector<std::vector<int>>& adj);

}  // namespace hamdec
