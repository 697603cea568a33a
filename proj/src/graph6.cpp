#include "oddcut/graph6.hpp"

#include <string>
#include <utility>
#include <vector>

#include "oddcut/errors.hpp"

namespace oddcut {

namespace {

constexpr int kBias = 63;
constexpr unsigned long long kMaxN = 258047;  // largest n of the 4-byte count form

[[noreturn]] void bad(const std::string& msg) {
    raise(errc::malformed_graph6, msg);
}

}  // namespace

CubicGraph parse_graph6(std::string_view text) {
    if (text.empty()) bad("empty input");
    for (char ch : text) {
        unsigned char b = static_cast<unsigned char>(ch);
        if (b < 63 || b > 126) bad("byte outside graph6 range [63,126]");
    }

    size_t pos = 0;
    unsigned long long n = 0;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~')
            bad("vertex counts above " + std::to_string(kMaxN) + " are not supported");
        if (text.size() < 4) bad("truncated long vertex count");
        for (int i = 1; i <= 3; ++i)
            n = (n << 6) | static_cast<unsigned long long>(text[i] - kBias);
        if (n < 63) bad("long vertex-count form used for n < 63");
        pos = 4;
    } else {
        n = static_cast<unsigned long long>(text[0] - kBias);
        pos = 1;
    }

    unsigned long long nbits = n * (n - 1) / 2;
    unsigned long long nbytes = (nbits + 5) / 6;
    if (text.size() - pos != nbytes)
        bad("payload is " + std::to_string(text.size() - pos) + " bytes, expected " +
            std::to_string(nbytes) + " for n=" + std::to_string(n));

    // upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
    std::vector<std::pair<int, int>> edges;
    int row = 0, col = 1;
    unsigned long long bit = 0;
    for (size_t i = pos; i < text.size(); ++i) {
        int six = text[i] - kBias;
        for (int k = 5; k >= 0; --k, ++bit) {
            int val = (six >> k) & 1;
            if (bit < nbits) {
                if (val) edges.emplace_back(row, col);
                if (++row == col) {
                    row = 0;
                    ++col;
                }
            } else if (val) {
                bad("nonzero padding bits");
            }
        }
    }

    return CubicGraph::from_edges(static_cast<int>(n), edges);
}

std::string to_graph6(const CubicGraph& g) {
    int n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kBias + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(kBias + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(kBias + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(kBias + (n & 63)));
    }
    int acc = 0, filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(kBias + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>(kBias + (acc << (6 - filled))));
    return out;
}

}  // namespace oddcut
