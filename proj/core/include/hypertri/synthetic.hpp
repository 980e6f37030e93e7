#ifndef HYPERTRI_SYNTHETIC_HPP
#define HYPERTRI_SYNTHETIC_HPP

#include <cstdint>
#include <vector>

#include "hypertri/types.hpp"

namespace hypertri {

// Deterministic synthetic streams for the statistical harness.

// Edge sizes uniform in [min_size, max_size], vertices uniform over
// [0, universe).
std::vector<Hyperedge> uniform_stream(std::size_t n_edges,
                                      std::uint32_t universe,
                                      std::uint32_t min_size,
                                      std::uint32_t max_size,
                                      std::uint64_t seed);

// Heavy-tailed edge sizes: P(size = k) proportional to k^(-exponent) over
// [min_size, max_size], vertices uniform over [0, universe).
std::vector<Hyperedge> zipf_stream(std::size_t n_edges, std::uint32_t universe,
                                   std::uint32_t min_size,
                                   std::uint32_t max_size, double exponent,
                                   std::uint64_t seed);

}  // namespace hypertri

#endif  // HYPERTRI_SYNTHETIC_HPP
