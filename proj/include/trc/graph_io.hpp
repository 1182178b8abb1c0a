#pragma once

#include "trc/graph.hpp"

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>

namespace trc {

/// Malformed textual graph input. `position()` is a byte offset for graph6
/// and a 1-based line number for edge lists.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string & what, std::size_t position) :
        std::runtime_error(what), position_(position)
    {
    }

    [[nodiscard]] auto position() const -> std::size_t { return position_; }

private:
    std::size_t position_;
};

/// Decodes one graph6 line. An optional ">>graph6<<" header and trailing
/// whitespace are accepted.
auto parse_graph6(std::string_view text) -> Graph;

/// Encodes g in graph6 without header or newline.
auto encode_graph6(const Graph & g) -> std::string;

/// Reads the "n m" header followed by m "u v" lines.
auto parse_edge_list(std::istream & in) -> Graph;

} // namespace trc
