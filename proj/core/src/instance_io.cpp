#include "mdap/instance_io.hpp"

#include <array>
#include <charconv>
#include <cstring>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

#include "mdap/error.hpp"

namespace mdap {

namespace {

constexpr std::array<char, 8> kBinaryMagic = {'M', 'A', 'P', 'B', 'I', 'N', '0', '1'};

std::uint64_t parse_unsigned(const std::string& token, const char* what) {
  std::uint64_t value = 0;
  const char* first = token.data();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw FormatError(std::string("invalid ") + what + " '" + token + "'");
  }
  return value;
}

void put_u32(std::ostream& out, std::uint32_t v) {
  const char bytes[4] = {static_cast<char>(v & 0xFF), static_cast<char>((v >> 8) & 0xFF),
                         static_cast<char>((v >> 16) & 0xFF), static_cast<char>((v >> 24) & 0xFF)};
  out.write(bytes, 4);
}

std::uint32_t get_u32(std::istream& in) {
  unsigned char bytes[4];
  if (!in.read(reinterpret_cast<char*>(bytes), 4)) throw FormatError("truncated binary instance");
  return static_cast<std::uint32_t>(bytes[0]) | (static_cast<std::uint32_t>(bytes[1]) << 8) |
         (static_cast<std::uint32_t>(bytes[2]) << 16) | (static_cast<std::uint32_t>(bytes[3]) << 24);
}

int checked_dim(std::uint64_t v, const char* what) {
  if (v > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
    throw FormatError(std::string(what) + " too large");
  }
  return static_cast<int>(v);
}

}  // namespace

void write_instance(std::ostream& out, const Instance& inst, InstanceFormat format) {
  if (format == InstanceFormat::text) {
    out << "MAP " << inst.num_dims() << ' ' << inst.dim_size() << '\n';
    const auto row = static_cast<std::size_t>(inst.dim_size());
    const auto weights = inst.weights();
    for (std::size_t i = 0; i < weights.size(); ++i) {
      out << weights[i] << ((i + 1) % row == 0 ? '\n' : ' ');
    }
  } else {
    out.write(kBinaryMagic.data(), kBinaryMagic.size());
    put_u32(out, static_cast<std::uint32_t>(inst.num_dims()));
    put_u32(out, static_cast<std::uint32_t>(inst.dim_size()));
    for (Weight w : inst.weights()) put_u32(out, w);
  }
  if (!out) throw IoError("failed to write instance");
}

Instance read_instance_text(std::istream& in) {
  std::string tag, s_token, n_token;
  if (!(in >> tag >> s_token >> n_token) || tag != "MAP") {
    throw FormatError("text instance must start with 'MAP <s> <n>'");
  }
  const int s = checked_dim(parse_unsigned(s_token, "dimension count"), "dimension count");
  const int n = checked_dim(parse_unsigned(n_token, "dimension size"), "dimension size");
  if (s < 2 || n < 1) throw FormatError("instance needs s >= 2 and n >= 1");
  const std::size_t volume = tensor_volume(s, n);
  std::vector<Weight> weights;
  weights.reserve(volume);
  std::string token;
  while (weights.size() < volume && in >> token) {
    const std::uint64_t w = parse_unsigned(token, "weight");
    if (w > std::numeric_limits<Weight>::max()) throw FormatError("weight exceeds 32 bits");
    weights.push_back(static_cast<Weight>(w));
  }
  if (weights.size() != volume) {
    throw FormatError("expected " + std::to_string(volume) + " weights, found " +
                      std::to_string(weights.size()));
  }
  if (in >> token) throw FormatError("trailing data after weights");
  return Instance(s, n, std::move(weights));
}

Instance read_instance_binary(std::istream& in) {
  std::array<char, 8> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kBinaryMagic) {
    throw FormatError("missing MAPBIN01 magic");
  }
  const int s = checked_dim(get_u32(in), "dimension count");
  const int n = checked_dim(get_u32(in), "dimension size");
  if (s < 2 || n < 1) throw FormatError("instance needs s >= 2 and n >= 1");
  const std::size_t volume = tensor_volume(s, n);
  std::vector<Weight> weights(volume);
  for (auto& w : weights) w = get_u32(in);
  if (in.peek() != std::char_traits<char>::eof()) throw FormatError("trailing data after weights");
  return Instance(s, n, std::move(weights));
}

Instance read_instance(std::istream& in) {
  const int first = in.peek();
  if (first == 'M') {
    // Both formats start with 'M'; look further.
    std::array<char, 4> head{};
    in.read(head.data(), head.size());
    const bool binary = in.gcount() == 4 && std::memcmp(head.data(), "MAPB", 4) == 0;
    in.clear();
    in.seekg(-static_cast<std::streamoff>(in.gcount()), std::ios::cur);
    return binary ? read_instance_binary(in) : read_instance_text(in);
  }
  return read_instance_text(in);
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_instance(in);
}

void save_instance(const std::filesystem::path& path, const Instance& inst, InstanceFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot create " + path.string());
  write_instance(out, inst, format);
}

}  // namespace mdap
