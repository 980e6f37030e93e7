#include "hypertri/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace hypertri {

std::optional<double> relative_error(double estimate, double exact) {
    if (exact == 0.0) return std::nullopt;
    return std::abs(exact - estimate) / exact;
}

double memory_utilization(std::uint64_t used_slots, std::uint64_t budget) {
    if (budget == 0)
        throw std::invalid_argument("memory_utilization: budget must be > 0");
    return static_cast<double>(used_slots) / static_cast<double>(budget);
}

double throughput_kbps(std::uint64_t bytes_processed, double elapsed_seconds) {
    if (elapsed_seconds <= 0.0)
        throw std::invalid_argument("throughput: elapsed time must be > 0");
    return (static_cast<double>(bytes_processed) / 1024.0) / elapsed_seconds;
}

double variance_bound_hybrid(double c, std::uint64_t m,
                             std::uint64_t sample_size) {
    if (sample_size < 2)
        throw std::invalid_argument("variance_bound_hybrid: sample_size < 2");
    const double ratio = static_cast<double>(m) * static_cast<double>(m - 1) /
                         (static_cast<double>(sample_size) *
                          static_cast<double>(sample_size - 1));
    return (2.0 * c * c - c) * ratio - c * c;
}

double variance_bound_outer(double c, std::uint64_t m,
                            std::uint64_t sample_size) {
    if (sample_size < 3)
        throw std::invalid_argument("variance_bound_outer: sample_size < 3");
    const double ratio = static_cast<double>(m) * static_cast<double>(m - 1) *
                         static_cast<double>(m - 2) /
                         (static_cast<double>(sample_size) *
                          static_cast<double>(sample_size - 1) *
                          static_cast<double>(sample_size - 2));
    return (2.0 * c * c - c) * ratio - c * c;
}

double variance_bound_partitioned(double c, double phi) {
    return (2.0 * c * c - c) * phi - c * c;
}

}  // namespace hypertri
