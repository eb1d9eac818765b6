#include "qpath/graph6.hpp"

#include <cstdint>

namespace qpath {

namespace {

constexpr int kOffset = 63;
constexpr long long kMaxOrder = 68719476735LL; // 2^36 - 1

void append_sextets(std::string& out, unsigned long long value, int count) {
    for (int i = count - 1; i >= 0; --i)
        out.push_back(static_cast<char>(((value >> (6 * i)) & 63) + kOffset));
}

int sextet_at(std::string_view s, std::size_t pos) {
    unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < kOffset || c > 126)
        throw Graph6Error("graph6: byte " + std::to_string(pos) + " out of range");
    return c - kOffset;
}

} // namespace

std::string to_graph6(const Graph& g) {
    long long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kOffset));
    } else if (n <= 258047) {
        out.push_back('~');
        append_sextets(out, static_cast<unsigned long long>(n), 3);
    } else {
        out.push_back('~');
        out.push_back('~');
        append_sextets(out, static_cast<unsigned long long>(n), 6);
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kOffset));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
    return out;
}

Graph from_graph6(std::string_view record) {
    if (record.empty()) throw Graph6Error("graph6: empty record");

    std::size_t pos = 0;
    long long n;
    if (record[0] != '~') {
        n = sextet_at(record, 0);
        pos = 1;
    } else if (record.size() >= 2 && record[1] != '~') {
        if (record.size() < 4) throw Graph6Error("graph6: truncated order field");
        n = 0;
        for (pos = 1; pos < 4; ++pos) n = (n << 6) | sextet_at(record, pos);
        if (n < 63) throw Graph6Error("graph6: non-canonical order field");
    } else {
        if (record.size() < 8) throw Graph6Error("graph6: truncated order field");
        n = 0;
        for (pos = 2; pos < 8; ++pos) n = (n << 6) | sextet_at(record, pos);
        if (n < 258048) throw Graph6Error("graph6: non-canonical order field");
    }
    if (n > kMaxOrder) throw Graph6Error("graph6: order out of range");

    long long pairs = n * (n - 1) / 2;
    std::size_t body = static_cast<std::size_t>((pairs + 5) / 6);
    if (record.size() != pos + body)
        throw Graph6Error("graph6: record length " + std::to_string(record.size()) +
                          ", expected " + std::to_string(pos + body) + " for order " +
                          std::to_string(n));

    Graph g(static_cast<int>(n));
    int acc = 0, avail = 0;
    std::size_t at = pos;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (avail == 0) {
                acc = sextet_at(record, at++);
                avail = 6;
            }
            if (acc & (1 << (avail - 1))) g.add_edge(i, j);
            --avail;
        }
    }
    if (avail > 0 && (acc & ((1 << avail) - 1)) != 0)
        throw Graph6Error("graph6: nonzero padding bits");
    return g;
}

} // namespace qpath
