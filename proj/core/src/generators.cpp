#include "mdap/generators.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "mdap/error.hpp"
#include "mdap/rng.hpp"

namespace mdap {

namespace {

void check_shape(int num_dims, int dim_size) {
  if (num_dims < 2 || dim_size < 1) {
    throw FormatError("generator needs s >= 2 and n >= 1");
  }
}

std::uint64_t parse_u64(const std::string& token, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw FormatError(std::string("invalid ") + what + " '" + token + "'");
  }
  return value;
}

Weight checked_weight(std::uint64_t w) {
  if (w > std::numeric_limits<Weight>::max()) throw FormatError("materialized weight exceeds 32 bits");
  return static_cast<Weight>(w);
}

}  // namespace

EdgeMatrices::EdgeMatrices(int count, int dim_size)
    : dim_size_(dim_size),
      matrices_(static_cast<std::size_t>(count),
                std::vector<Weight>(static_cast<std::size_t>(dim_size) * static_cast<std::size_t>(dim_size), 0)) {
  if (count < 1 || dim_size < 1) throw FormatError("edge matrices need count >= 1 and n >= 1");
}

Instance gen_random(int num_dims, int dim_size, int index) {
  check_shape(num_dims, dim_size);
  SplitMix64 rng(Seed{num_dims, dim_size, index}.value());
  std::vector<Weight> weights(tensor_volume(num_dims, dim_size));
  for (auto& w : weights) w = static_cast<Weight>(rng.uniform(kRandomMinWeight, kRandomMaxWeight));
  return Instance(num_dims, dim_size, std::move(weights));
}

std::uint64_t cycle_weight(const EdgeMatrices& edges, std::span<const int> coords0) {
  const int s = edges.count();
  std::uint64_t w = 0;
  for (int k = 0; k + 1 < s; ++k) w += edges(k, coords0[k], coords0[k + 1]);
  w += edges(s - 1, coords0[0], coords0[s - 1]);
  return w;
}

Instance materialize_cycle(const EdgeMatrices& edges) {
  const int s = edges.count();
  const int n = edges.dim_size();
  if (s < 3) throw UnsupportedFamilyError("cycle weights need at least 3 dimensions");
  std::vector<Weight> weights(tensor_volume(s, n));

  // Walk the tensor one run (fixed prefix) at a time; only the last two
  // terms depend on the last coordinate.
  std::vector<int> prefix(static_cast<std::size_t>(s - 1), 0);
  std::size_t base = 0;
  while (base < weights.size()) {
    std::uint64_t fixed = 0;
    for (int k = 0; k + 2 < s; ++k) fixed += edges(k, prefix[k], prefix[k + 1]);
    for (int v = 0; v < n; ++v) {
      weights[base + static_cast<std::size_t>(v)] =
          checked_weight(fixed + edges(s - 2, prefix[s - 2], v) + edges(s - 1, prefix[0], v));
    }
    base += static_cast<std::size_t>(n);
    for (int k = s - 2; k >= 0; --k) {
      if (++prefix[k] < n) break;
      prefix[k] = 0;
    }
  }
  return Instance(s, n, std::move(weights));
}

CompositeInstance gen_composite(int num_dims, int dim_size, int index) {
  if (num_dims < 3) {
    throw UnsupportedFamilyError("composite family needs s >= 3, got " + std::to_string(num_dims));
  }
  check_shape(num_dims, dim_size);
  SplitMix64 rng(Seed{num_dims, dim_size, index}.value());
  EdgeMatrices edges(num_dims, dim_size);
  for (int k = 0; k < num_dims; ++k) {
    for (int i = 0; i < dim_size; ++i) {
      for (int j = 0; j < dim_size; ++j) {
        edges(k, i, j) = static_cast<Weight>(rng.uniform(kRandomMinWeight, kRandomMaxWeight));
      }
    }
  }
  Instance inst = materialize_cycle(edges);
  return CompositeInstance{std::move(inst), std::move(edges)};
}

Instance load_cs(const EdgeMatrices& edges) {
  if (edges.count() != 3) {
    throw FormatError("CS instances need exactly three matrices, got " + std::to_string(edges.count()));
  }
  // For s = 3 the cycle formula is exactly d^1(i1,i2) + d^2(i2,i3) + d^3(i1,i3).
  return materialize_cycle(edges);
}

CsData read_cs(std::istream& in) {
  std::string line;
  while (std::getline(in, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
  }
  std::istringstream header(line);
  std::string tag, n_token, opt_token, extra;
  if (!(header >> tag >> n_token) || tag != "CS") throw FormatError("CS file must start with 'CS <n>'");
  const std::uint64_t n = parse_u64(n_token, "CS size");
  if (n < 1 || n > 1u << 15) throw FormatError("CS size out of range");
  std::optional<Objective> optimum;
  if (header >> opt_token) optimum = parse_u64(opt_token, "CS optimum");
  if (header >> extra) throw FormatError("unexpected token '" + extra + "' in CS header");

  const int size = static_cast<int>(n);
  CsData data{EdgeMatrices(3, size), optimum};
  std::string token;
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j < size; ++j) {
        if (!(in >> token)) throw FormatError("CS file truncated: matrices must be " + n_token + " x " + n_token);
        const std::uint64_t v = parse_u64(token, "CS entry");
        data.edges(k, i, j) = checked_weight(v);
      }
    }
  }
  if (in >> token) throw FormatError("trailing data after CS matrices");
  return data;
}

CsData load_cs_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_cs(in);
}

void write_cs(std::ostream& out, const EdgeMatrices& edges, std::optional<Objective> optimum) {
  out << "CS " << edges.dim_size();
  if (optimum) out << ' ' << *optimum;
  out << '\n';
  for (int k = 0; k < edges.count(); ++k) {
    for (int i = 0; i < edges.dim_size(); ++i) {
      for (int j = 0; j < edges.dim_size(); ++j) {
        out << edges(k, i, j) << (j + 1 == edges.dim_size() ? '\n' : ' ');
      }
    }
  }
}

bool satisfies_triangle_inequality(const EdgeMatrices& edges) {
  const int n = edges.dim_size();
  for (int l = 0; l < edges.count(); ++l) {
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        const std::uint64_t ik = edges(l, i, k);
        for (int j = 0; j < n; ++j) {
          if (edges(l, i, j) > ik + edges(l, k, j)) return false;
        }
      }
    }
  }
  return true;
}

PlantedInstance gen_planted(int num_dims, int dim_size, int index) {
  check_shape(num_dims, dim_size);
  SplitMix64 rng(Seed{num_dims, dim_size, index}.value());
  const int s = num_dims;
  const int n = dim_size;

  // One Fisher-Yates shuffle per dimension; row r of the planted assignment
  // is (perm_1[r], ..., perm_s[r]).
  std::vector<std::vector<int>> perms(static_cast<std::size_t>(s), std::vector<int>(static_cast<std::size_t>(n)));
  for (auto& perm : perms) {
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) {
      const auto j = static_cast<int>(rng.uniform(0, static_cast<std::uint64_t>(i)));
      std::swap(perm[i], perm[j]);
    }
  }

  std::vector<Weight> weights(tensor_volume(s, n), 0);
  std::vector<char> planted(weights.size(), 0);
  PartialAssignment rows(s, n);
  std::vector<int> coords(static_cast<std::size_t>(s));
  std::vector<std::size_t> strides(static_cast<std::size_t>(s), 1);
  for (int d = s - 2; d >= 0; --d) strides[d] = strides[d + 1] * static_cast<std::size_t>(n);
  for (int r = 0; r < n; ++r) {
    std::size_t idx = 0;
    for (int d = 0; d < s; ++d) {
      coords[d] = perms[d][r];
      idx += static_cast<std::size_t>(coords[d]) * strides[d];
    }
    planted[idx] = 1;
    rows.try_add0(coords);
  }
  for (std::size_t i = 0; i < weights.size(); ++i) {
    weights[i] = planted[i] ? Weight{1} : static_cast<Weight>(rng.uniform(2, kRandomMaxWeight));
  }
  return PlantedInstance{Instance(s, n, std::move(weights)), Assignment(std::move(rows)),
                         static_cast<Objective>(n)};
}

}  // namespace mdap
