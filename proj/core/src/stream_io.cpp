#include "hypertri/stream_io.hpp"

#include <charconv>

namespace hypertri {

void for_each_hyperedge(std::istream& in,
                        const std::function<void(Hyperedge&&)>& sink,
                        ParseStats& stats) {
    std::string line;
    std::vector<VertexId> verts;
    while (std::getline(in, line)) {
        ++stats.line_number;
        stats.bytes_read += line.size() + 1;  // getline consumed the '\n'
        if (!line.empty() && line.back() == '\r') line.pop_back();

        std::size_t pos = 0;
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t'))
            ++pos;
        if (pos == line.size() || line[pos] == '#') continue;

        verts.clear();
        while (pos < line.size()) {
            const std::size_t start = pos;
            while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t')
                ++pos;
            std::uint64_t value = 0;
            const auto [ptr, ec] = std::from_chars(
                line.data() + start, line.data() + pos, value);
            if (ec != std::errc{} || ptr != line.data() + pos ||
                value > UINT32_MAX)
                throw ParseError(stats.line_number,
                                 "malformed vertex id '" +
                                     line.substr(start, pos - start) + "'");
            verts.push_back(static_cast<VertexId>(value));
            while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t'))
                ++pos;
        }

        std::size_t dropped = 0;
        Hyperedge e = make_hyperedge(stats.edges + 1, verts, &dropped);
        stats.duplicate_vertices += dropped;
        ++stats.edges;
        sink(std::move(e));
    }
}

std::vector<Hyperedge> parse_stream(std::istream& in, ParseStats* stats) {
    ParseStats local;
    ParseStats& s = stats ? *stats : local;
    std::vector<Hyperedge> edges;
    for_each_hyperedge(
        in, [&](Hyperedge&& e) { edges.push_back(std::move(e)); }, s);
    return edges;
}

}  // namespace hypertri
