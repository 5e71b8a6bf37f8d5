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

#include "qpc/bits.hpp"

#include <stdexcept>

namespace qpc {

namespace {

uint64_t mask_for(uint32_t len) {
    return len >= 64 ? ~0ULL : ((1ULL << len) - 1);
}

}  // namespace

BitString BitString::of(uint64_t value, uint32_t len) {
    if (len > 64) throw std::invalid_argument("BitString length exceeds 64 bits");
    if ((value & ~mask_for(len)) != 0) {
        throw std::invalid_argument("BitString value does not fit in " + std::to_string(len) + " bits");
    }
    BitString b;
    b.value = value;
    b.len = len;
    return b;
}

void BitString::set_bit(uint32_t i, int b) {
    if (i >= len) throw std::invalid_argument("BitString bit index out of range");
    if (b) {
        value |= (1ULL << i);
    } else {
        value &= ~(1ULL << i);
    }
}

BitString BitString::operator^(const BitString& other) const {
    if (len != other.len) throw std::invalid_argument("BitString XOR length mismatch");
    return of(value ^ other.value, len);
}

BitString BitString::zero_extended(uint32_t new_len) const {
    if (new_len < len) throw std::invalid_argument("BitString zero_extended cannot shrink");
    return of(value, new_len);
}

std::string BitString::to_hex() const {
    const uint32_t digits = (len + 3) / 4;
    std::string out(digits, '0');
    static const char* kHex = "0123456789abcdef";
    for (uint32_t d = 0; d < digits; ++d) {
        const uint32_t shift = 4 * (digits - 1 - d);
        out[d] = kHex[(value >> shift) & 0xF];
    }
    return out;
}

std::string BitString::to_binary() const {
    std::string out(len, '0');
    for (uint32_t i = 0; i < len; ++i) {
        out[len - 1 - i] = bit(i) ? '1' : '0';
    }
    return out;
}

std::optional<BitString> BitString::from_hex(std::string_view hex, uint32_t len) {
    const uint32_t digits = (len + 3) / 4;
    if (hex.size() != digits || len > 64) return std::nullopt;
    uint64_t v = 0;
    for (char c : hex) {
        uint64_t d;
        if (c >= '0' && c <= '9') {
            d = static_cast<uint64_t>(c - '0');
        } else if (c >= 'a' && c <= 'f') {
            d = static_cast<uint64_t>(c - 'a' + 10);
        } else {
            return std::nullopt;
        }
        v = (v << 4) | d;
    }
    if ((v & ~mask_for(len)) != 0) return std::nullopt;
    return of(v, len);
}

std::optional<uint64_t> parse_uint_literal(std::string_view text) {
    if (text.empty()) return std::nullopt;
    int base = 10;
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        base = 16;
        text.remove_prefix(2);
    } else if (text.size() > 2 && text[0] == '0' && (text[1] == 'b' || text[1] == 'B')) {
        base = 2;
        text.remove_prefix(2);
    }
    uint64_t v = 0;
    for (char c : text) {
        int d;
        if (c >= '0' && c <= '9') {
            d = c - '0';
        } else if (c >= 'a' && c <= 'f') {
            d = c - 'a' + 10;
        } else if (c >= 'A' && c <= 'F') {
            d = c - 'A' + 10;
        } else {
            return std::nullopt;
        }
        if (d >= base) return std::nullopt;
        if (v > (UINT64_MAX - static_cast<uint64_t>(d)) / static_cast<uint64_t>(base)) {
            return std::nullopt;  // overflow
        }
        v = v * static_cast<uint64_t>(base) + static_cast<uint64_t>(d);
    }
    return v;
}

}  // namespace qpc
