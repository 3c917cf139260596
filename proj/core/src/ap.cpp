#include "mdap/ap.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "mdap/error.hpp"

namespace mdap {

CostMatrix::CostMatrix(int size)
    : size_(size), costs_(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0) {
  if (size < 1) throw FormatError("cost matrix size must be positive");
}

CostMatrix::CostMatrix(int size, std::vector<Cost> costs) : size_(size), costs_(std::move(costs)) {
  if (size < 1) throw FormatError("cost matrix size must be positive");
  if (costs_.size() != static_cast<std::size_t>(size) * static_cast<std::size_t>(size)) {
    throw FormatError("cost matrix is not square");
  }
  if (std::any_of(costs_.begin(), costs_.end(), [](Cost c) { return c < 0; })) {
    throw FormatError("cost matrix has a negative entry");
  }
}

bool Permutation::is_bijection() const {
  std::vector<char> seen(map.size(), 0);
  for (int v : map) {
    if (v < 0 || static_cast<std::size_t>(v) >= map.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Cost permutation_cost(const CostMatrix& m, const Permutation& p) {
  Cost total = 0;
  for (int i = 0; i < m.size(); ++i) total += m(i, p.map[i]);
  return total;
}

ApSolution solve_ap(const CostMatrix& m) {
  // Shortest augmenting paths with potentials u (rows) and v (columns).
  // Column 0 is a virtual source; row_of[j] is the 1-based row matched to
  // column j. Within one augmentation, dist[j] is the reduced-cost distance
  // to column j and potentials are settled only once the path is found.
  const int n = m.size();
  constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;
  const Cost* costs = m.values().data();
  std::vector<Cost> u(n + 1, 0), v(n + 1, 0), dist(n + 1);
  std::vector<int> row_of(n + 1, 0), way(n + 1, 0), scanned;
  std::vector<char> visited(n + 1);
  scanned.reserve(static_cast<std::size_t>(n) + 1);

  for (int i = 1; i <= n; ++i) {
    row_of[0] = i;
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(visited.begin(), visited.end(), 0);
    scanned.clear();
    int j0 = 0;
    dist[0] = 0;
    do {
      visited[j0] = 1;
      scanned.push_back(j0);
      const int i0 = row_of[j0];
      const Cost base = dist[j0] - u[i0];
      const Cost* row = costs + static_cast<std::size_t>(i0 - 1) * static_cast<std::size_t>(n) - 1;
      Cost best = kInf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (visited[j]) continue;
        const Cost cur = base + row[j] - v[j];
        if (cur < dist[j]) {
          dist[j] = cur;
          way[j] = j0;
        }
        if (dist[j] < best) {
          best = dist[j];
          j1 = j;
        }
      }
      j0 = j1;
    } while (row_of[j0] != 0);
    const Cost total = dist[j0];
    for (int j : scanned) {
      const Cost shift = total - dist[j];
      u[row_of[j]] += shift;
      v[j] -= shift;
    }
    do {
      const int j1 = way[j0];
      row_of[j0] = row_of[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  ApSolution sol;
  sol.permutation.map.assign(static_cast<std::size_t>(n), -1);
  for (int j = 1; j <= n; ++j) sol.permutation.map[row_of[j] - 1] = j - 1;
  sol.cost = permutation_cost(m, sol.permutation);
  return sol;
}

ApSolution solve_ap_bruteforce(const CostMatrix& m) {
  const int n = m.size();
  if (n > 9) throw SizeError("brute-force AP limited to n <= 9, got " + std::to_string(n));
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  ApSolution best;
  best.cost = std::numeric_limits<Cost>::max();
  do {
    Cost c = 0;
    for (int i = 0; i < n; ++i) c += m(i, perm[i]);
    if (c < best.cost) {
      best.cost = c;
      best.permutation.map = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace mdap
