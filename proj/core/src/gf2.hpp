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

// Packed GF(2) rows and Gaussian elimination. Internal to the library.

#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace vbsq::detail {

class BitRow {
   public:
    explicit BitRow(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        words_[i >> 6] = (words_[i >> 6] & ~mask) | (v ? mask : 0);
    }
    BitRow &operator^=(const BitRow &o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
        return *this;
    }

   private:
    std::vector<std::uint64_t> words_;
};

/// In-place reduced row echelon form over the first `cols` columns. Returns
/// the pivot column of each of the first rank() rows.
inline std::vector<std::size_t> row_reduce(std::vector<BitRow> &rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && !rows[p].get(c)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(std::vector<BitRow> rows, std::size_t cols) { return row_reduce(rows, cols).size(); }

}  // namespace vbsq::detail
