#include "packlab/graph6.hpp"

namespace packlab {

namespace {

[[noreturn]] void malformed(std::size_t offset, const std::string& what) {
    fail(Errc::malformed_graph6, "malformed graph6 at byte " + std::to_string(offset) + ": " + what);
}

} // namespace

std::string graph6_encode(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        // 63 <= n <= 64 in this library; three 6-bit groups after '~'.
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int bits = 0, chunk = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            chunk = chunk << 1 | (g.has_edge(row, col) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                bits = 0;
                chunk = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((chunk << (6 - bits)) + 63));
    return out;
}

Graph graph6_decode(std::string_view line) {
    if (line.empty()) malformed(0, "empty input");
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= line.size()) malformed(line.size(), "unexpected end of input");
        unsigned char c = static_cast<unsigned char>(line[pos]);
        if (c < 63 || c > 126) malformed(pos, "byte outside printable graph6 range");
        ++pos;
        return c - 63;
    };

    long long n;
    if (line[0] != '~') {
        n = next();
    } else {
        ++pos;
        if (pos < line.size() && line[pos] == '~') malformed(pos, "order beyond supported range");
        n = 0;
        for (int i = 0; i < 3; ++i) n = n << 6 | next();
    }
    if (n > Graph::max_order) malformed(0, "order exceeds supported maximum of 64");

    Graph g(static_cast<int>(n));
    int bits = 0, chunk = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (bits == 0) {
                chunk = next();
                bits = 6;
            }
            --bits;
            if (chunk >> bits & 1) g.add_edge(row, col);
        }
    }
    if (bits > 0 && (chunk & ((1 << bits) - 1)) != 0) malformed(pos - 1, "non-zero padding bits");
    if (pos != line.size()) malformed(pos, "trailing bytes after adjacency data");
    return g;
}

} // namespace packlab
