#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "mdap/assignment.hpp"
#include "mdap/instance.hpp"

namespace mdap {

// Instance i (1-based) of an (s, n) experiment is drawn from seed s + n + i.
struct Seed {
  int num_dims;
  int dim_size;
  int index;

  std::uint64_t value() const noexcept {
    return static_cast<std::uint64_t>(num_dims) + static_cast<std::uint64_t>(dim_size) +
           static_cast<std::uint64_t>(index);
  }
};

inline constexpr Weight kRandomMinWeight = 1;
inline constexpr Weight kRandomMaxWeight = 100;

// Per-edge weight matrices d^1..d^s of a Composite / CS instance. matrix(k)
// is 0-based: for k < s-1 it weighs the pair (e_k, e_{k+1}); the last one
// weighs (e_1, e_s).
class EdgeMatrices {
 public:
  EdgeMatrices(int count, int dim_size);

  int count() const noexcept { return static_cast<int>(matrices_.size()); }
  int dim_size() const noexcept { return dim_size_; }
  Weight operator()(int k, int i, int j) const noexcept { return matrices_[k][index(i, j)]; }
  Weight& operator()(int k, int i, int j) noexcept { return matrices_[k][index(i, j)]; }

 private:
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_size_) + static_cast<std::size_t>(j);
  }

  int dim_size_;
  std::vector<std::vector<Weight>> matrices_;
};

// Uniform integer weights in [1, 100], drawn in row-major order.
Instance gen_random(int num_dims, int dim_size, int index);

struct CompositeInstance {
  Instance instance;
  EdgeMatrices edges;
};

// w(e) = d^1[e1][e2] + ... + d^{s-1}[e_{s-1}][e_s] + d^s[e1][e_s], all d
// uniform in [1, 100]. Requires s >= 3.
CompositeInstance gen_composite(int num_dims, int dim_size, int index);

// Materializes the cycle formula above for any s = edges.count() >= 3.
Instance materialize_cycle(const EdgeMatrices& edges);
// Direct per-point evaluation of the same formula (0-based coordinates).
std::uint64_t cycle_weight(const EdgeMatrices& edges, std::span<const int> coords0);

// 3-AP from three matrices: w(i1,i2,i3) = d^1[i1][i2] + d^2[i2][i3] + d^3[i1][i3].
Instance load_cs(const EdgeMatrices& edges);

// CS text format: "CS <n> [<optimum>]" followed by three n x n integer
// matrices, row by row.
struct CsData {
  EdgeMatrices edges;
  std::optional<Objective> optimum;
};
CsData read_cs(std::istream& in);
CsData load_cs_file(const std::filesystem::path& path);
void write_cs(std::ostream& out, const EdgeMatrices& edges, std::optional<Objective> optimum = {});

// d^l(i,j) <= d^l(i,k) + d^l(k,j) for every matrix and every i, j, k.
bool satisfies_triangle_inequality(const EdgeMatrices& edges);

struct PlantedInstance {
  Instance instance;
  Assignment planted;
  Objective optimum;
};

// A random assignment gets weight 1 on each of its n vectors; every other
// weight is uniform in [2, 100]. The planted assignment is the unique
// optimum, with value n.
PlantedInstance gen_planted(int num_dims, int dim_size, int index);

}  // namespace mdap
