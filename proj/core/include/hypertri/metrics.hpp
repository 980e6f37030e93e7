#ifndef HYPERTRI_METRICS_HPP
#define HYPERTRI_METRICS_HPP

#include <cstdint>
#include <optional>

namespace hypertri {

// |exact - estimate| / exact. Undefined (nullopt) when exact is zero; a
// missing denominator is reported as not-applicable, never as zero error.
std::optional<double> relative_error(double estimate, double exact);

// Fraction of the vertex-slot budget currently occupied.
double memory_utilization(std::uint64_t used_slots, std::uint64_t budget);

// Raw input bytes per second, in KB/s.
double throughput_kbps(std::uint64_t bytes_processed, double elapsed_seconds);

// Closed-form variance bounds evaluated at end-of-stream m and |G_s|:
// (2c^2 - c) * ratio - c^2, with the pair ratio m(m-1)/(s(s-1)) for hybrid
// and the triple ratio for outer and the hyper-edge classes.
double variance_bound_hybrid(double c, std::uint64_t m, std::uint64_t sample_size);
double variance_bound_outer(double c, std::uint64_t m, std::uint64_t sample_size);

// Partitioned bound at the worst per-subset ratio Phi.
double variance_bound_partitioned(double c, double phi);

}  // namespace hypertri

#endif  // HYPERTRI_METRICS_HPP
