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

#include "vbsq/pauli.hpp"

#include <bit>

#include "vbsq/error.hpp"

namespace vbsq {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

}  // namespace

PauliString::PauliString(std::size_t n) : n_(n), xs_(words_for(n), 0), zs_(words_for(n), 0) {}

PauliString PauliString::parse(std::string_view text) {
    int phase = 0;
    if (text.starts_with('+')) {
        text.remove_prefix(1);
    } else if (text.starts_with('-')) {
        phase = 2;
        text.remove_prefix(1);
    }
    if (text.starts_with('i')) {
        phase += 1;
        text.remove_prefix(1);
    }
    PauliString p(text.size());
    for (std::size_t q = 0; q < text.size(); ++q) p.set(q, text[q]);
    p.set_phase(phase);
    return p;
}

PauliString PauliString::single(std::size_t n, std::size_t q, char letter) {
    PauliString p(n);
    p.set(q, letter);
    return p;
}

char PauliString::letter(std::size_t q) const {
    bool xb = x(q), zb = z(q);
    if (xb && zb) return 'Y';
    if (xb) return 'X';
    if (zb) return 'Z';
    return 'I';
}

void PauliString::set_bits(std::size_t q, bool xb, bool zb) {
    if (q >= n_) throw Error(ErrorCode::QubitOutOfRange, "Pauli index " + std::to_string(q) + " out of range");
    const std::uint64_t mask = std::uint64_t{1} << (q & 63);
    xs_[q >> 6] = (xs_[q >> 6] & ~mask) | (xb ? mask : 0);
    zs_[q >> 6] = (zs_[q >> 6] & ~mask) | (zb ? mask : 0);
}

void PauliString::set(std::size_t q, char letter) {
    switch (letter) {
        case 'I':
        case '_': set_bits(q, false, false); break;
        case 'X': set_bits(q, true, false); break;
        case 'Y': set_bits(q, true, true); break;
        case 'Z': set_bits(q, false, true); break;
        default: throw Error(ErrorCode::ParseError, std::string("unknown Pauli letter '") + letter + "'");
    }
}

std::size_t PauliString::weight() const {
    std::size_t w = 0;
    for (std::size_t k = 0; k < xs_.size(); ++k) w += static_cast<std::size_t>(std::popcount(xs_[k] | zs_[k]));
    return w;
}

bool PauliString::is_identity() const { return weight() == 0; }

bool PauliString::commutes_with(const PauliString &other) const {
    if (other.n_ != n_) throw Error(ErrorCode::DimensionMismatch, "Pauli strings of different length");
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < xs_.size(); ++k) acc ^= (xs_[k] & other.zs_[k]) ^ (zs_[k] & other.xs_[k]);
    return (std::popcount(acc) & 1) == 0;
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
    if (rhs.n_ != n_) throw Error(ErrorCode::DimensionMismatch, "Pauli strings of different length");
    // Per qubit, a * b = i^g (a xor b) with g = +1 for XY, YZ, ZX and -1 for YX, ZY, XZ.
    int exponent = phase_ + rhs.phase_;
    for (std::size_t k = 0; k < xs_.size(); ++k) {
        const std::uint64_t x1 = xs_[k], z1 = zs_[k], x2 = rhs.xs_[k], z2 = rhs.zs_[k];
        const std::uint64_t a_x = x1 & ~z1, a_y = x1 & z1, a_z = ~x1 & z1;
        const std::uint64_t b_x = x2 & ~z2, b_y = x2 & z2, b_z = ~x2 & z2;
        const std::uint64_t plus = (a_x & b_y) | (a_y & b_z) | (a_z & b_x);
        const std::uint64_t minus = (a_y & b_x) | (a_z & b_y) | (a_x & b_z);
        exponent += std::popcount(plus) - std::popcount(minus);
        xs_[k] = x1 ^ x2;
        zs_[k] = z1 ^ z2;
    }
    set_phase(((exponent % 4) + 4) % 4);
    return *this;
}

void PauliString::xor_bits(const PauliString &rhs) {
    for (std::size_t k = 0; k < xs_.size(); ++k) {
        xs_[k] ^= rhs.xs_[k];
        zs_[k] ^= rhs.zs_[k];
    }
}

void PauliString::conjugate_h(std::size_t q) {
    bool xb = x(q), zb = z(q);
    if (xb && zb) negate();
    set_bits(q, zb, xb);
}

void PauliString::conjugate_s(std::size_t q) {
    bool xb = x(q), zb = z(q);
    if (xb && zb) negate();
    set_bits(q, xb, zb ^ xb);
}

void PauliString::conjugate_sdg(std::size_t q) {
    bool xb = x(q), zb = z(q);
    if (xb && !zb) negate();
    set_bits(q, xb, zb ^ xb);
}

void PauliString::conjugate_x(std::size_t q) {
    if (z(q)) negate();
}

void PauliString::conjugate_y(std::size_t q) {
    if (x(q) != z(q)) negate();
}

void PauliString::conjugate_z(std::size_t q) {
    if (x(q)) negate();
}

void PauliString::conjugate_cz(std::size_t a, std::size_t b) {
    bool xa = x(a), za = z(a), xb = x(b), zb = z(b);
    if (xa && xb && (za != zb)) negate();
    set_bits(a, xa, za ^ xb);
    set_bits(b, xb, zb ^ xa);
}

void PauliString::conjugate_cnot(std::size_t control, std::size_t target) {
    bool xc = x(control), zc = z(control), xt = x(target), zt = z(target);
    if (xc && zt && !(xt ^ zc)) negate();
    set_bits(target, xt ^ xc, zt);
    set_bits(control, xc, zc ^ zt);
}

std::string PauliString::str() const {
    static constexpr const char *kPrefix[4] = {"+", "+i", "-", "-i"};
    std::string out = kPrefix[phase_];
    for (std::size_t q = 0; q < n_; ++q) out += letter(q);
    return out;
}

}  // namespace vbsq
