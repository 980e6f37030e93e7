#include "hypertri/synthetic.hpp"

#include <cmath>
#include <stdexcept>

#include "hypertri/rng.hpp"

namespace hypertri {

namespace {

Hyperedge random_edge(std::uint64_t arrival, std::uint32_t universe,
                      std::uint32_t size, Rng& rng) {
    std::vector<VertexId> verts;
    verts.reserve(size);
    while (verts.size() < size) {
        const VertexId v = static_cast<VertexId>(rng.uniform_index(universe));
        bool seen = false;
        for (VertexId u : verts)
            if (u == v) {
                seen = true;
                break;
            }
        if (!seen) verts.push_back(v);
    }
    return make_hyperedge(arrival, std::move(verts));
}

void check_sizes(std::uint32_t universe, std::uint32_t min_size,
                 std::uint32_t max_size) {
    if (min_size == 0 || min_size > max_size || max_size > universe)
        throw std::invalid_argument("synthetic stream: bad size range");
}

}  // namespace

std::vector<Hyperedge> uniform_stream(std::size_t n_edges,
                                      std::uint32_t universe,
                                      std::uint32_t min_size,
                                      std::uint32_t max_size,
                                      std::uint64_t seed) {
    check_sizes(universe, min_size, max_size);
    Rng rng(seed);
    std::vector<Hyperedge> stream;
    stream.reserve(n_edges);
    for (std::size_t i = 0; i < n_edges; ++i) {
        const std::uint32_t size =
            min_size +
            static_cast<std::uint32_t>(rng.uniform_index(max_size - min_size + 1));
        stream.push_back(random_edge(i + 1, universe, size, rng));
    }
    return stream;
}

std::vector<Hyperedge> zipf_stream(std::size_t n_edges, std::uint32_t universe,
                                   std::uint32_t min_size,
                                   std::uint32_t max_size, double exponent,
                                   std::uint64_t seed) {
    check_sizes(universe, min_size, max_size);
    // Cumulative size distribution, inverted per draw.
    std::vector<double> cdf;
    cdf.reserve(max_size - min_size + 1);
    double total = 0.0;
    for (std::uint32_t k = min_size; k <= max_size; ++k) {
        total += std::pow(static_cast<double>(k), -exponent);
        cdf.push_back(total);
    }
    Rng rng(seed);
    std::vector<Hyperedge> stream;
    stream.reserve(n_edges);
    for (std::size_t i = 0; i < n_edges; ++i) {
        const double u = rng.uniform_double() * total;
        std::uint32_t size = max_size;
        for (std::size_t j = 0; j < cdf.size(); ++j) {
            if (u < cdf[j]) {
                size = min_size + static_cast<std::uint32_t>(j);
                break;
            }
        }
        stream.push_back(random_edge(i + 1, universe, size, rng));
    }
    return stream;
}

}  // namespace hypertri
