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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vbsq {

/// i^phase * P_0 (x) P_1 (x) ... (x) P_{n-1} with P_q in {I, X, Y, Z}.
///
/// Letters are stored as packed (x, z) bit planes: (1,0) = X, (0,1) = Z and
/// (1,1) = Y itself (not XZ). The phase is a power of i.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(std::size_t n);

    /// Parses e.g. "XZI", "+XZ", "-YY", "iXX", "-iZ". Letter k acts on qubit k;
    /// '_' is accepted as identity.
    static PauliString parse(std::string_view text);
    static PauliString single(std::size_t n, std::size_t q, char letter);

    std::size_t num_qubits() const noexcept { return n_; }

    bool x(std::size_t q) const { return (xs_[q >> 6] >> (q & 63)) & 1; }
    bool z(std::size_t q) const { return (zs_[q >> 6] >> (q & 63)) & 1; }
    char letter(std::size_t q) const;
    void set(std::size_t q, char letter);
    void set_bits(std::size_t q, bool x, bool z);

    /// Phase exponent k of i^k, in 0..3.
    int phase() const noexcept { return phase_; }
    void set_phase(int k) noexcept { phase_ = static_cast<std::uint8_t>(k & 3); }
    /// +1 or -1 for Hermitian strings.
    int sign() const noexcept { return phase_ == 2 ? -1 : 1; }
    bool hermitian() const noexcept { return (phase_ & 1) == 0; }
    void negate() noexcept { phase_ ^= 2; }

    std::size_t weight() const;
    bool is_identity() const;
    bool commutes_with(const PauliString &other) const;

    /// this <- this * rhs, tracking the phase.
    PauliString &operator*=(const PauliString &rhs);
    friend PauliString operator*(PauliString lhs, const PauliString &rhs) { return lhs *= rhs; }
    /// Letter-wise XOR ignoring phases; used where only the bit planes matter.
    void xor_bits(const PauliString &rhs);

    // Conjugation P -> G P G^dagger.
    void conjugate_h(std::size_t q);
    void conjugate_s(std::size_t q);
    void conjugate_sdg(std::size_t q);
    void conjugate_x(std::size_t q);
    void conjugate_y(std::size_t q);
    void conjugate_z(std::size_t q);
    void conjugate_cz(std::size_t a, std::size_t b);
    void conjugate_cnot(std::size_t control, std::size_t target);

    /// "+XZI" style; phase prefix one of "+", "-", "+i", "-i".
    std::string str() const;

    const std::vector<std::uint64_t> &x_words() const noexcept { return xs_; }
    const std::vector<std::uint64_t> &z_words() const noexcept { return zs_; }

    friend bool operator==(const PauliString &, const PauliString &) = default;

   private:
    std::size_t n_ = 0;
    std::uint8_t phase_ = 0;
    std::vector<std::uint64_t> xs_;
    std::vector<std::uint64_t> zs_;
};

}  // namespace vbsq
