#include "hypertri/oracle.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hypertri {

ExactCounts exact_count(const Hypergraph& h, std::size_t edge_cap) {
    const std::size_t n = h.edges.size();
    if (n > edge_cap)
        throw std::invalid_argument("exact_count: " + std::to_string(n) +
                                    " edges exceeds cap of " +
                                    std::to_string(edge_cap));

    ExactCounts counts;
    for (const Hyperedge& e : h.edges)
        counts.inner += binom3(e.size());

    // One intersection row at a time; I_jk is recomputed inside the triple
    // loop to keep memory linear in the edge count.
    std::vector<std::uint32_t> row(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Hyperedge& ei = h.edges[i];
        for (std::size_t j = i + 1; j < n; ++j)
            row[j] = intersection_size(ei, h.edges[j]);

        for (std::size_t j = i + 1; j < n; ++j) {
            const std::uint32_t i_ij = row[j];
            if (i_ij == 0) continue;
            const Hyperedge& ej = h.edges[j];

            if (i_ij >= 2) {
                const std::uint64_t exclusive =
                    ei.size() + ej.size() - 2ull * i_ij;
                counts.hybrid += exclusive * (static_cast<std::uint64_t>(i_ij) *
                                              (i_ij - 1) / 2);
            }

            for (std::size_t k = j + 1; k < n; ++k) {
                const std::uint32_t i_ik = row[k];
                if (i_ik == 0) continue;
                const Hyperedge& ek = h.edges[k];
                const std::uint32_t i_jk = intersection_size(ej, ek);
                if (i_jk == 0) continue;
                const std::uint32_t i3 = triple_intersection_size(ei, ej, ek);
                counts.outer += static_cast<std::uint64_t>(i_ij - i3) *
                                (i_ik - i3) * (i_jk - i3);

                int inclusions = 0;
                if (classify_sizes(i_ij, ei.size(), ej.size()) ==
                    PairKind::Inclusion)
                    ++inclusions;
                if (classify_sizes(i_ik, ei.size(), ek.size()) ==
                    PairKind::Inclusion)
                    ++inclusions;
                if (classify_sizes(i_jk, ej.size(), ek.size()) ==
                    PairKind::Inclusion)
                    ++inclusions;
                switch (inclusions) {
                    case 3: ++counts.ccc; break;
                    case 2: ++counts.tcc; break;
                    case 1: ++counts.ttc; break;
                    default: ++counts.ttt; break;
                }
            }
        }
    }
    return counts;
}

}  // namespace hypertri
