#include "acr/graph_io.hpp"

#include <cctype>
#include <charconv>

#include "acr/error.hpp"

namespace acr {

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
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

namespace {

int sextet(std::string_view s, std::size_t i, std::size_t base) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside '?'..'~'", base + i);
    return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t base = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header)) {
        text.remove_prefix(header.size());
        base = header.size();
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw ParseError("graph6: empty input", base);

    std::size_t pos = 0;
    long n = 0;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~') throw CapacityError("graph6: order exceeds 64 vertices");
        if (text.size() < 4) throw ParseError("graph6: truncated order field", base + text.size());
        n = (static_cast<long>(sextet(text, 1, base)) << 12) | (sextet(text, 2, base) << 6) | sextet(text, 3, base);
        pos = 4;
    } else {
        n = sextet(text, 0, base);
        pos = 1;
    }
    if (n > kMaxVertices) throw CapacityError("graph6: order " + std::to_string(n) + " exceeds 64 vertices");

    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes) {
        throw ParseError("graph6: expected " + std::to_string(bytes) + " data bytes, found " +
                             std::to_string(text.size() - pos),
                         base + std::min(text.size(), pos + bytes));
    }
    Graph g(static_cast<int>(n));
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int value = sextet(text, pos + k / 6, base);
            if ((value >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    if (bits % 6 != 0) {
        const int last = sextet(text, pos + bytes - 1, base);
        if (last & ((1 << (6 - bits % 6)) - 1)) {
            throw ParseError("graph6: nonzero padding bits", base + pos + bytes - 1);
        }
    }
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + ";";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        out += first ? " " : ", ";
        out += std::to_string(u) + "-" + std::to_string(v);
        first = false;
    }
    return out;
}

namespace {

class EdgeListReader {
public:
    explicit EdgeListReader(std::string_view s) : s_(s) {}

    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_space();
        return pos_ >= s_.size();
    }
    bool accept(char c) {
        skip_space();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("edge list: expected '") + c + "'", pos_);
    }
    int integer() {
        skip_space();
        int value = 0;
        auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), value);
        if (ec != std::errc{}) throw ParseError("edge list: expected an integer", pos_);
        pos_ = static_cast<std::size_t>(ptr - s_.data());
        return value;
    }
    std::size_t pos() const { return pos_; }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Graph parse_edge_list(std::string_view text) {
    EdgeListReader r(text);
    const int n = r.integer();
    if (n < 0) throw ParseError("edge list: negative order", 0);
    if (n > kMaxVertices) throw CapacityError("edge list: order exceeds 64 vertices");
    r.expect(';');
    Graph g(n);
    if (r.done()) return g;
    do {
        const std::size_t at = r.pos();
        const int u = r.integer();
        r.expect('-');
        const int v = r.integer();
        if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
            throw ParseError("edge list: invalid edge " + std::to_string(u) + "-" + std::to_string(v), at);
        }
        g.add_edge(u, v);
    } while (r.accept(','));
    if (!r.done()) throw ParseError("edge list: trailing characters", r.pos());
    return g;
}

}  // namespace acr
