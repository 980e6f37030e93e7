#ifndef HYPERTRI_STREAM_IO_HPP
#define HYPERTRI_STREAM_IO_HPP

#include <cstdint>
#include <functional>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypertri/types.hpp"

namespace hypertri {

// Text stream format: one hyperedge per non-empty line, decimal vertex ids
// separated by spaces or tabs, '#' starts a comment line. Duplicate ids
// within a line are dropped (counted in ParseStats). Line order defines
// arrival order, 1-based.

struct ParseStats {
    std::uint64_t bytes_read = 0;
    std::uint64_t line_number = 0;
    std::uint64_t edges = 0;
    std::uint64_t duplicate_vertices = 0;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::uint64_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}
    std::uint64_t line() const { return line_; }

private:
    std::uint64_t line_;
};

// Streaming reader: memory bounded by the longest line. Invokes `sink` for
// each parsed hyperedge in arrival order. Throws ParseError on malformed
// input.
void for_each_hyperedge(std::istream& in,
                        const std::function<void(Hyperedge&&)>& sink,
                        ParseStats& stats);

// Convenience wrapper that materializes the whole stream.
std::vector<Hyperedge> parse_stream(std::istream& in,
                                    ParseStats* stats = nullptr);

}  // namespace hypertri

#endif  // HYPERTRI_STREAM_IO_HPP
