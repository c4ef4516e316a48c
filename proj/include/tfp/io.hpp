#pragma once

#include <charconv>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bracket.hpp"
#include "error.hpp"
#include "tournament.hpp"

namespace tfp {

// Instance file, canonical form:
//
//   tfp 1
//   n=<players>
//   v=<favorite>
//   <n rows of n '0'/'1' characters; row i column j is 1 iff i beats j>
//
// Lines starting with '#' are ignored anywhere after the first line.

inline constexpr std::string_view kInstanceHeader = "tfp 1";

namespace detail {

struct Line {
    std::size_t number = 0;
    std::string_view text;
};

inline std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 1;
    while (!text.empty()) {
        const std::size_t end = text.find('\n');
        std::string_view line = text.substr(0, end);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back({number++, line});
        if (end == std::string_view::npos) break;
        text.remove_prefix(end + 1);
    }
    return lines;
}

inline bool skippable(std::string_view line) { return line.empty() || line.front() == '#'; }

inline int parse_int(const Line& line, std::string_view digits, std::size_t column) {
    int value = 0;
    const auto* first = digits.data();
    const auto* last = digits.data() + digits.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (digits.empty() || ec != std::errc() || ptr != last)
        throw ParseError(line.number, column, "expected an integer, got '" + std::string(digits) + "'");
    return value;
}

inline int parse_field(const Line& line, std::string_view key) {
    if (line.text.substr(0, key.size()) != key)
        throw ParseError(line.number, 1, "expected '" + std::string(key) + "<int>'");
    return parse_int(line, line.text.substr(key.size()), key.size() + 1);
}

} // namespace detail

inline Tournament parse_instance(std::string_view text) {
    const auto lines = detail::split_lines(text);
    if (lines.empty() || lines.front().text != kInstanceHeader)
        throw ParseError(1, 1, "missing header 'tfp 1'");

    std::vector<detail::Line> body;
    for (std::size_t i = 1; i < lines.size(); ++i)
        if (!detail::skippable(lines[i].text)) body.push_back(lines[i]);
    const std::size_t last_line = lines.back().number;
    if (body.size() < 2) throw ParseError(last_line, 1, "missing n= or v= line");

    const int n = detail::parse_field(body[0], "n=");
    if (n < 1 || n > PlayerSet::kCapacity)
        throw ParseError(body[0].number, 3, "player count " + std::to_string(n) + " outside [1, " +
                                                std::to_string(PlayerSet::kCapacity) + "]");
    const int favorite = detail::parse_field(body[1], "v=");
    if (body.size() != static_cast<std::size_t>(n) + 2)
        throw ParseError(body.back().number, 1,
                         "expected " + std::to_string(n) + " matrix rows, found " + std::to_string(body.size() - 2));

    std::vector<std::vector<bool>> rows(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        const detail::Line& line = body[static_cast<std::size_t>(i) + 2];
        if (line.text.size() != static_cast<std::size_t>(n))
            throw ParseError(line.number, std::min(line.text.size(), static_cast<std::size_t>(n)) + 1,
                             "row has " + std::to_string(line.text.size()) + " characters, expected " +
                                 std::to_string(n));
        for (int j = 0; j < n; ++j) {
            const char c = line.text[static_cast<std::size_t>(j)];
            if (c != '0' && c != '1')
                throw ParseError(line.number, static_cast<std::size_t>(j) + 1, std::string("unexpected '") + c + "'");
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c == '1';
        }
    }
    return Tournament::from_matrix(rows, favorite);
}

inline std::string render_instance(const Tournament& d) {
    std::string s;
    s += kInstanceHeader;
    s += "\nn=" + std::to_string(d.size()) + "\nv=" + std::to_string(d.favorite()) + "\n";
    for (Player u = 0; u < d.size(); ++u) {
        for (Player v = 0; v < d.size(); ++v) s += d.beats(u, v) ? '1' : '0';
        s += '\n';
    }
    return s;
}

/// Bracket text: one line of space-separated leaf indices.
inline std::string render_bracket(const Bracket& b) {
    std::string s;
    for (std::size_t i = 0; i < b.leaves.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(b.leaves[i]);
    }
    return s;
}

/// Reads the first non-comment line as a bracket.
inline Bracket parse_bracket(std::string_view text) {
    for (const auto& line : detail::split_lines(text)) {
        if (detail::skippable(line.text)) continue;
        Bracket b;
        std::size_t pos = 0;
        while (pos < line.text.size()) {
            if (line.text[pos] == ' ' || line.text[pos] == '\t') {
                ++pos;
                continue;
            }
            std::size_t end = line.text.find_first_of(" \t", pos);
            if (end == std::string_view::npos) end = line.text.size();
            b.leaves.push_back(detail::parse_int(line, line.text.substr(pos, end - pos), pos + 1));
            pos = end;
        }
        return b;
    }
    throw ParseError(1, 1, "no bracket line");
}

/// One line per round; each match written `winner>loser`.
inline std::string render_sequence(const MatchSetSequence& seq) {
    std::string s;
    for (const MatchSet& round : seq) {
        for (std::size_t i = 0; i < round.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(round[i].winner) + ">" + std::to_string(round[i].loser);
        }
        s += '\n';
    }
    return s;
}

inline MatchSetSequence parse_sequence(std::string_view text) {
    MatchSetSequence seq;
    for (const auto& line : detail::split_lines(text)) {
        if (detail::skippable(line.text)) continue;
        MatchSet round;
        std::size_t pos = 0;
        while (pos < line.text.size()) {
            if (line.text[pos] == ' ') {
                ++pos;
                continue;
            }
            std::size_t end = line.text.find(' ', pos);
            if (end == std::string_view::npos) end = line.text.size();
            const std::string_view token = line.text.substr(pos, end - pos);
            const std::size_t gt = token.find('>');
            if (gt == std::string_view::npos) throw ParseError(line.number, pos + 1, "expected winner>loser");
            round.push_back(Match{detail::parse_int(line, token.substr(0, gt), pos + 1),
                                  detail::parse_int(line, token.substr(gt + 1), pos + gt + 2)});
            pos = end;
        }
        seq.push_back(std::move(round));
    }
    return seq;
}

} // namespace tfp
