#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mqsolve/quadratic.hpp"

namespace mqsolve {

// Error raised on malformed `.anf` input; message carries the line number.
class AnfParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Text format for systems of reduced quadratic polynomials:
//   p <n> <m>
// followed by m lines, each a '+'-separated list of monomial tokens
// `1`, `x<i>` or `x<i>*x<j>` with 1 <= i < j <= n, in descending grevlex.
// A zero polynomial is written as the single token `0`. ASCII, LF endings.

inline std::string serialize_poly(const QuadraticPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    auto append = [&](const std::string& tok) {
        if (!out.empty()) out += '+';
        out += tok;
    };
    std::size_t qc = p.quad_count();
    for (std::size_t idx = 0; idx < qc; ++idx) {
        if (!p.coeffs().get(idx)) continue;
        unsigned i, j;
        QuadraticPoly::decode_pair(idx, i, j);
        append("x" + std::to_string(i + 1) + "*x" + std::to_string(j + 1));
    }
    for (unsigned i = 0; i < p.n(); ++i)
        if (p.linear(i)) append("x" + std::to_string(i + 1));
    if (p.constant()) append("1");
    return out;
}

inline std::string serialize(const QuadraticSystem& s) {
    std::string out = "p " + std::to_string(s.n) + " " + std::to_string(s.m()) + "\n";
    for (const auto& p : s.polys) {
        out += serialize_poly(p);
        out += '\n';
    }
    return out;
}

namespace detail {

inline unsigned parse_var(std::string_view tok, std::size_t& pos, unsigned n, int line) {
    if (pos >= tok.size() || tok[pos] != 'x')
        throw AnfParseError("line " + std::to_string(line) + ": malformed token '" + std::string(tok) + "'");
    ++pos;
    std::size_t start = pos;
    while (pos < tok.size() && tok[pos] >= '0' && tok[pos] <= '9') ++pos;
    if (pos == start || tok[start] == '0')
        throw AnfParseError("line " + std::to_string(line) + ": malformed variable in '" + std::string(tok) + "'");
    unsigned long v = 0;
    for (std::size_t q = start; q < pos; ++q) {
        v = v * 10 + static_cast<unsigned long>(tok[q] - '0');
        if (v > n)
            throw AnfParseError("line " + std::to_string(line) + ": variable index out of range in '" +
                                std::string(tok) + "'");
    }
    return static_cast<unsigned>(v);
}

} // namespace detail

inline QuadraticPoly parse_poly_line(std::string_view text, unsigned n, int line) {
    QuadraticPoly p(n);
    if (text == "0") return p;
    if (text.empty()) throw AnfParseError("line " + std::to_string(line) + ": empty polynomial");
    std::size_t pos = 0;
    while (true) {
        std::size_t plus = text.find('+', pos);
        std::string_view tok = text.substr(pos, plus == std::string_view::npos ? plus : plus - pos);
        if (tok.empty()) throw AnfParseError("line " + std::to_string(line) + ": empty monomial token");
        std::size_t idx;
        if (tok == "1") {
            idx = p.constant_index();
        } else {
            std::size_t tp = 0;
            unsigned i = detail::parse_var(tok, tp, n, line);
            if (tp == tok.size()) {
                idx = p.linear_index(i - 1);
            } else {
                if (tok[tp] != '*')
                    throw AnfParseError("line " + std::to_string(line) + ": malformed token '" + std::string(tok) +
                                        "'");
                ++tp;
                unsigned j = detail::parse_var(tok, tp, n, line);
                if (tp != tok.size())
                    throw AnfParseError("line " + std::to_string(line) + ": trailing characters in '" +
                                        std::string(tok) + "'");
                if (i >= j)
                    throw AnfParseError("line " + std::to_string(line) +
                                        ": monomial indices must be ascending in '" + std::string(tok) + "'");
                idx = p.quad_index(i - 1, j - 1);
            }
        }
        if (p.coeffs().get(idx))
            throw AnfParseError("line " + std::to_string(line) + ": duplicate monomial '" + std::string(tok) + "'");
        p.coeffs().set(idx, true);
        if (plus == std::string_view::npos) break;
        pos = plus + 1;
    }
    return p;
}

inline QuadraticSystem parse(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw AnfParseError("line 1: missing header");
    std::istringstream hs(header);
    std::string tag;
    long long n = 0, m = 0;
    if (!(hs >> tag >> n >> m) || tag != "p" || n < 1 || m < 1 || n > (1 << 20) || !(hs >> std::ws).eof())
        throw AnfParseError("line 1: expected header 'p <n> <m>'");
    std::vector<QuadraticPoly> polys;
    polys.reserve(static_cast<std::size_t>(m));
    for (long long j = 0; j < m; ++j) {
        std::string line;
        if (!std::getline(in, line))
            throw AnfParseError("line " + std::to_string(j + 2) + ": expected " + std::to_string(m) +
                                " polynomials, got " + std::to_string(j));
        polys.push_back(parse_poly_line(line, static_cast<unsigned>(n), static_cast<int>(j + 2)));
    }
    return QuadraticSystem(static_cast<unsigned>(n), std::move(polys));
}

inline QuadraticSystem parse(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

} // namespace mqsolve
