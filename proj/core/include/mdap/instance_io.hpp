#pragma once

#include <filesystem>
#include <iosfwd>

#include "mdap/instance.hpp"

namespace mdap {

enum class InstanceFormat { text, binary };

// Text:   "MAP <s> <n>" then n^s whitespace-separated weights, row-major.
// Binary: magic "MAPBIN01", little-endian u32 s, u32 n, n^s u32 weights.
void write_instance(std::ostream& out, const Instance& inst, InstanceFormat format);
Instance read_instance_text(std::istream& in);
Instance read_instance_binary(std::istream& in);

// Detects the format from the first bytes.
Instance read_instance(std::istream& in);

Instance load_instance(const std::filesystem::path& path);
void save_instance(const std::filesystem::path& path, const Instance& inst, InstanceFormat format);

}  // namespace mdap
