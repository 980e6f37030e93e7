#ifndef HYPERTRI_ENGINE_HPP
#define HYPERTRI_ENGINE_HPP

#include <cstdint>
#include <vector>

#include "hypertri/types.hpp"

namespace hypertri {

// One entry of the sample view handed to update_triangles: a currently
// sampled hyperedge and the index of the sample subset holding it
// (always 0 for the single-reservoir sampler).
struct SampleRef {
    const Hyperedge* edge;
    int subset = 0;
};

// Hybrid-triangle weight of an edge pair: choose 2 of the shared vertices
// and 1 vertex exclusive to either edge.
// (|e_i| + |e_j| - 2*I_ij) * I_ij * (I_ij - 1) / 2.
inline std::uint64_t hybrid_contribution(std::size_t size_i, std::size_t size_j,
                                         std::uint32_t i_ij) {
    if (i_ij < 2) return 0;
    const std::uint64_t exclusive =
        static_cast<std::uint64_t>(size_i + size_j) - 2ull * i_ij;
    const std::uint64_t shared_pairs =
        static_cast<std::uint64_t>(i_ij) * (i_ij - 1) / 2;
    return exclusive * shared_pairs;
}

// Outer-triangle weight of an edge triple: one vertex from each
// pairwise-exclusive region. (I_ij - I)(I_ik - I)(I_jk - I).
inline std::uint64_t outer_contribution(std::uint32_t i_ij, std::uint32_t i_ik,
                                        std::uint32_t i_jk,
                                        std::uint32_t i_triple) {
    return static_cast<std::uint64_t>(i_ij - i_triple) * (i_ik - i_triple) *
           (i_jk - i_triple);
}

// The shared update loop: pairs and triples formed between a newly sampled
// hyperedge `e` and the current sample view, weighted by caller-supplied
// correction factors. `view` must not contain `e` itself.
//
// `Corrections` provides
//   double pair_factor(int subset_e, int subset_j)
//   double triple_factor(int subset_e, int subset_j, int subset_k)
// both finite and >= 1. Factors are queried lazily, only for pairs/triples
// that actually intersect.
//
// A triple is classified into CCC/TCC/TTC/TTT (by its number of inclusion
// pairs) whenever all three pairwise intersections are non-empty, even when
// its outer weight is zero. The class increment uses the same factor as the
// outer increment.
template <typename Corrections>
void update_triangles(const Hyperedge& e, int e_subset,
                      const std::vector<SampleRef>& view, Corrections&& corr,
                      TriangleEstimates& est) {
    const std::size_t n = view.size();
    // I_e,j for every view member, so the triple loop reuses I_ik.
    std::vector<std::uint32_t> inter(n);
    for (std::size_t j = 0; j < n; ++j)
        inter[j] = intersection_size(e, *view[j].edge);

    for (std::size_t j = 0; j < n; ++j) {
        const std::uint32_t i_ij = inter[j];
        if (i_ij == 0) continue;
        const Hyperedge& ej = *view[j].edge;

        const std::uint64_t hyb = hybrid_contribution(e.size(), ej.size(), i_ij);
        if (hyb > 0)
            est.hybrid += static_cast<double>(hyb) *
                          corr.pair_factor(e_subset, view[j].subset);

        for (std::size_t k = j + 1; k < n; ++k) {
            const std::uint32_t i_ik = inter[k];
            if (i_ik == 0) continue;
            const Hyperedge& ek = *view[k].edge;
            const std::uint32_t i_jk = intersection_size(ej, ek);
            if (i_jk == 0) continue;

            const std::uint32_t i3 = triple_intersection_size(e, ej, ek);
            const double gamma =
                corr.triple_factor(e_subset, view[j].subset, view[k].subset);
            est.outer +=
                static_cast<double>(outer_contribution(i_ij, i_ik, i_jk, i3)) *
                gamma;

            int inclusions = 0;
            if (classify_sizes(i_ij, e.size(), ej.size()) == PairKind::Inclusion)
                ++inclusions;
            if (classify_sizes(i_ik, e.size(), ek.size()) == PairKind::Inclusion)
                ++inclusions;
            if (classify_sizes(i_jk, ej.size(), ek.size()) == PairKind::Inclusion)
                ++inclusions;
            switch (inclusions) {
                case 3: est.ccc += gamma; break;
                case 2: est.tcc += gamma; break;
                case 1: est.ttc += gamma; break;
                default: est.ttt += gamma; break;
            }
        }
    }
}

// Unit correction factors: with unlimited memory every configuration is
// counted exactly once, when its last edge arrives.
struct UnitCorrections {
    double pair_factor(int, int) const { return 1.0; }
    double triple_factor(int, int, int) const { return 1.0; }
};

// Constant per-call factors, used by the single-reservoir sampler.
struct ConstantCorrections {
    double theta = 1.0;
    double gamma = 1.0;
    double pair_factor(int, int) const { return theta; }
    double triple_factor(int, int, int) const { return gamma; }
};

}  // namespace hypertri

#endif  // HYPERTRI_ENGINE_HPP
