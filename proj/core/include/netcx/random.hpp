#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace netcx {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Child seed for an independent stream, a pure function of the master seed
/// and the stream coordinates (e.g. {k index, trial index, purpose}).
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) noexcept;

/// Purpose tags for derive_seed paths.
namespace stream {
inline constexpr std::uint64_t graph = 1;
inline constexpr std::uint64_t partition = 2;
inline constexpr std::uint64_t weights = 3;
inline constexpr std::uint64_t poles = 4;
}  // namespace stream

}  // namespace netcx
