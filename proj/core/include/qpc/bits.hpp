// Copyright 2026 The qpcsim Authors
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

#ifndef QPC_BITS_HPP
#define QPC_BITS_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace qpc {

// Fixed-length bit string, at most 64 bits. Bit i is the coefficient of 2^i
// in the value (little-endian bit expansion); the hex/binary renderings are
// most-significant-first as usual.
struct BitString {
    uint64_t value = 0;
    uint32_t len = 0;

    BitString() = default;

    /// Throws std::invalid_argument if len > 64 or value has bits above len.
    static BitString of(uint64_t value, uint32_t len);
    static BitString zeros(uint32_t len) { return of(0, len); }

    int bit(uint32_t i) const { return static_cast<int>((value >> i) & 1u); }
    void set_bit(uint32_t i, int b);

    bool all_zero() const { return value == 0; }
    uint32_t count_ones() const { return static_cast<uint32_t>(std::popcount(value)); }

    /// XOR of equal-length strings; throws std::invalid_argument on mismatch.
    BitString operator^(const BitString& other) const;

    /// Same bits, zero-extended at the most significant end.
    BitString zero_extended(uint32_t new_len) const;

    /// ceil(len/4) lowercase hex digits, most significant first ("" for len 0).
    std::string to_hex() const;
    std::string to_binary() const;

    /// Parses exactly the to_hex() rendering for the given length.
    static std::optional<BitString> from_hex(std::string_view hex, uint32_t len);

    bool operator==(const BitString&) const = default;
};

/// Parses "0x..", "0b..", or decimal unsigned literals (CLI input format).
std::optional<uint64_t> parse_uint_literal(std::string_view text);

}  // namespace qpc

#endif
