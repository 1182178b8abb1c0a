#include "trc/graph_io.hpp"

#include <sstream>
#include <vector>

namespace trc {

namespace {
    constexpr std::string_view graph6_header = ">>graph6<<";
    constexpr int graph6_bias = 63;

    auto sextet(std::string_view text, std::size_t offset) -> int
    {
        if (offset >= text.size())
            throw ParseError("graph6 input truncated", offset);
        auto c = static_cast<unsigned char>(text[offset]);
        if (c < 63 || c > 126)
            throw ParseError("graph6 byte " + std::to_string(c) + " outside printable range 63..126", offset);
        return c - graph6_bias;
    }
}

auto parse_graph6(std::string_view text) -> Graph
{
    std::size_t base = 0;
    if (text.starts_with(graph6_header))
        base = graph6_header.size();
    while (! text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' || text.back() == '\t'))
        text.remove_suffix(1);

    std::size_t pos = base;
    long long n = sextet(text, pos++);
    if (n == 63) {
        n = 0;
        int words = 3;
        if (pos < text.size() && text[pos] == '~') {
            ++pos;
            words = 6;
        }
        for (int i = 0; i < words; ++i)
            n = (n << 6) | sextet(text, pos++);
    }
    if (n < 1 || n > max_order)
        throw ParseError("graph6 order " + std::to_string(n) + " unsupported (need 1.." + std::to_string(max_order) + ")", base);

    const auto order = static_cast<int>(n);
    const std::size_t bit_count = static_cast<std::size_t>(order) * static_cast<std::size_t>(order - 1) / 2;
    const std::size_t byte_count = (bit_count + 5) / 6;
    const std::size_t data_start = pos;

    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (int j = 1; j < order; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int value = sextet(text, data_start + bit / 6);
            if ((value >> (5 - bit % 6)) & 1)
                edges.emplace_back(i, j);
        }
    if (text.size() != data_start + byte_count)
        throw ParseError("graph6 input has " + std::to_string(text.size() - data_start) + " data bytes, expected "
                + std::to_string(byte_count), data_start + byte_count);

    return Graph::from_edge_list(order, edges);
}

auto encode_graph6(const Graph & g) -> std::string
{
    const int n = g.order();
    std::string out;
    if (n <= 62)
        out += static_cast<char>(n + graph6_bias);
    else {
        out += '~';
        for (int shift = 12; shift >= 0; shift -= 6)
            out += static_cast<char>(((n >> shift) & 0x3f) + graph6_bias);
    }

    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(acc + graph6_bias);
                acc = filled = 0;
            }
        }
    if (filled != 0)
        out += static_cast<char>((acc << (6 - filled)) + graph6_bias);
    return out;
}

auto parse_edge_list(std::istream & in) -> Graph
{
    std::string line;
    std::size_t line_no = 0;

    auto next_content_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                return true;
        }
        return false;
    };

    if (! next_content_line())
        throw ParseError("edge list is empty", 1);
    int n = 0, m = 0;
    {
        std::istringstream header(line);
        std::string rest;
        if (! (header >> n >> m) || (header >> rest) || m < 0)
            throw ParseError("expected header \"n m\"", line_no);
    }

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        if (! next_content_line())
            throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(k), line_no + 1);
        std::istringstream row(line);
        int u = 0, v = 0;
        std::string rest;
        if (! (row >> u >> v) || (row >> rest))
            throw ParseError("expected edge \"u v\"", line_no);
        if (u < 0 || u >= n || v < 0 || v >= n || u == v)
            throw ParseError("invalid edge (" + std::to_string(u) + ", " + std::to_string(v) + ")", line_no);
        edges.emplace_back(u, v);
    }
    if (next_content_line())
        throw ParseError("unexpected content after " + std::to_string(m) + " edges", line_no);

    try {
        return Graph::from_edge_list(n, edges);
    }
    catch (const GraphError & e) {
        throw ParseError(e.what(), line_no);
    }
}

} // namespace trc
