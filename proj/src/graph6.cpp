#include "symfix/graph6.hpp"

#include <utility>
#include <vector>

namespace symfix {

namespace {
constexpr std::string_view kHeader = ">>graph6<<";
}

Graph parse_graph6(std::string_view line) {
    if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) throw ParseError("empty graph6 string");

    const unsigned char size_byte = static_cast<unsigned char>(line[0]);
    if (size_byte == 126) throw CapError("multi-byte graph6 size fields (n > 62) are not supported");
    if (size_byte < 63 || size_byte > 126) throw ParseError("graph6 size byte out of range");
    const int n = size_byte - 63;
    if (n < 1) throw ParseError("graph6 strings of order 0 are not supported");

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t body = (bits + 5) / 6;
    if (line.size() != 1 + body) throw ParseError("graph6 string has wrong length for its order");

    std::vector<std::pair<int, int>> edges;
    std::size_t bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            const unsigned char c = static_cast<unsigned char>(line[1 + bit / 6]);
            if (c < 63 || c > 126) throw ParseError("graph6 data byte out of range");
            if ((c - 63) >> (5 - bit % 6) & 1) edges.emplace_back(u, v);
        }
    }
    for (std::size_t pad = bit; pad < body * 6; ++pad) {
        const unsigned char c = static_cast<unsigned char>(line[1 + pad / 6]);
        if (c < 63 || c > 126) throw ParseError("graph6 data byte out of range");
        if ((c - 63) >> (5 - pad % 6) & 1) throw ParseError("graph6 padding bits must be zero");
    }
    return Graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = acc << 1 | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

}  // namespace symfix
