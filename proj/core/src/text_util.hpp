// Copyright 2026 The vbsq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Shared helpers for the line-oriented text formats. Internal to the library.

#pragma once

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "vbsq/error.hpp"

namespace vbsq::detail {

struct Line {
    int number;  // 1-based
    std::vector<std::string_view> tokens;
};

/// Splits text into non-empty lines of whitespace-separated tokens, dropping
/// `#` comments. The views point into `text`.
inline std::vector<Line> tokenize_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++number;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        Line parsed{number, {}};
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
            if (j > i) parsed.tokens.push_back(line.substr(i, j - i));
            i = j;
        }
        if (!parsed.tokens.empty()) out.push_back(std::move(parsed));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

[[noreturn]] inline void parse_fail(int line, const std::string &what) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what, line);
}

inline std::size_t parse_index(std::string_view tok, int line) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        parse_fail(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
    }
    return value;
}

inline double parse_real(std::string_view tok, int line) {
    double value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        parse_fail(line, "expected a number, got '" + std::string(tok) + "'");
    }
    return value;
}

inline void expect_arity(const Line &line, std::size_t count) {
    if (line.tokens.size() != count) {
        parse_fail(line.number, "'" + std::string(line.tokens[0]) + "' expects " +
                                    std::to_string(count - 1) + " argument(s)");
    }
}

}  // namespace vbsq::detail
