#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "graph.hpp"

namespace leafcon {

inline constexpr int kGraph6DecodeLimit = 4096;

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

// Printable 6-bit encoding of the upper adjacency triangle, column by
// column: bit sequence x(0,1), x(0,2), x(1,2), x(0,3), ..., packed MSB
// first into bytes 63..126.
inline std::string graph6_encode(const Graph& g) {
    const int n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw capability_error("graph6_encode: order above 258047 unsupported");
    }
    int bits = 0, group = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(group + 63));
                bits = 0;
                group = 0;
            }
        }
    if (bits > 0) out.push_back(static_cast<char>((group << (6 - bits)) + 63));
    return out;
}

inline Graph graph6_decode(const std::string& text) {
    if (text.empty()) throw parse_error("graph6: empty input", 0);
    for (size_t i = 0; i < text.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw parse_error("graph6: byte out of range 63..126", i);
    }
    size_t pos = 0;
    long long n;
    if (text[0] != 126) {
        n = static_cast<unsigned char>(text[0]) - 63;
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == 126)
            throw capability_error("graph6_decode: 8-byte order form unsupported");
        if (text.size() < 4) throw parse_error("graph6: truncated order field", text.size());
        n = 0;
        for (size_t i = 1; i < 4; ++i)
            n = (n << 6) | (static_cast<unsigned char>(text[i]) - 63);
        if (n <= 62) throw parse_error("graph6: non-canonical long order field", 0);
        pos = 4;
    }
    if (n > kGraph6DecodeLimit)
        throw capability_error("graph6_decode: order " + std::to_string(n) + " above limit " +
                               std::to_string(kGraph6DecodeLimit));

    const long long bit_count = n * (n - 1) / 2;
    const size_t need = static_cast<size_t>((bit_count + 5) / 6);
    if (text.size() - pos < need) throw parse_error("graph6: truncated edge bits", text.size());
    if (text.size() - pos > need) throw parse_error("graph6: trailing data", pos + need);

    GraphBuilder b(static_cast<int>(n));
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            const size_t byte = pos + static_cast<size_t>(bit / 6);
            const int shift = 5 - static_cast<int>(bit % 6);
            if ((static_cast<unsigned char>(text[byte]) - 63) >> shift & 1) b.add_edge(i, j);
        }
    for (long long pad = bit_count; pad < static_cast<long long>(need) * 6; ++pad) {
        const size_t byte = pos + static_cast<size_t>(pad / 6);
        const int shift = 5 - static_cast<int>(pad % 6);
        if ((static_cast<unsigned char>(text[byte]) - 63) >> shift & 1)
            throw parse_error("graph6: nonzero padding bit", byte);
    }
    return std::move(b).take();
}

}  // namespace leafcon
