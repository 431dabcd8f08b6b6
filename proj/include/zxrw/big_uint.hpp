// Copyright 2026 The zxrw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace zxrw {

/// Unsigned big integer, just enough for exact flop counts (sums of powers
/// of two far beyond 2^64 on wide decompositions).
class BigUint {
public:
    BigUint() = default;
    explicit BigUint(uint64_t v) {
        if (v) limbs_.push_back(v);
    }

    static BigUint pow2(std::size_t k) {
        BigUint b;
        b.limbs_.assign(k / 64 + 1, 0);
        b.limbs_.back() = uint64_t{1} << (k % 64);
        return b;
    }

    [[nodiscard]] bool is_zero() const { return limbs_.empty(); }

    BigUint& operator+=(const BigUint& o) {
        if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
        unsigned __int128 carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            unsigned __int128 s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
            limbs_[i] = static_cast<uint64_t>(s);
            carry = s >> 64;
        }
        if (carry) limbs_.push_back(static_cast<uint64_t>(carry));
        return *this;
    }
    BigUint operator+(const BigUint& o) const {
        BigUint r = *this;
        r += o;
        return r;
    }

    BigUint& add_pow2(std::size_t k) { return *this += pow2(k); }

    [[nodiscard]] BigUint times(uint64_t m) const {
        BigUint r;
        if (m == 0 || is_zero()) return r;
        r.limbs_.assign(limbs_.size() + 1, 0);
        unsigned __int128 carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            unsigned __int128 p = static_cast<unsigned __int128>(limbs_[i]) * m + carry;
            r.limbs_[i] = static_cast<uint64_t>(p);
            carry = p >> 64;
        }
        r.limbs_.back() = static_cast<uint64_t>(carry);
        r.trim();
        return r;
    }

    std::strong_ordering operator<=>(const BigUint& o) const {
        if (limbs_.size() != o.limbs_.size()) return limbs_.size() <=> o.limbs_.size();
        for (std::size_t i = limbs_.size(); i-- > 0;)
            if (limbs_[i] != o.limbs_[i]) return limbs_[i] <=> o.limbs_[i];
        return std::strong_ordering::equal;
    }
    bool operator==(const BigUint& o) const = default;

    [[nodiscard]] double to_double() const {
        double v = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;)
            v = v * std::ldexp(1.0, 64) + static_cast<double>(limbs_[i]);
        return v;
    }

    [[nodiscard]] std::string to_string() const {
        if (is_zero()) return "0";
        std::vector<uint64_t> work = limbs_;
        std::string digits;
        while (!work.empty()) {
            unsigned __int128 rem = 0;
            for (std::size_t i = work.size(); i-- > 0;) {
                unsigned __int128 cur = (rem << 64) | work[i];
                work[i] = static_cast<uint64_t>(cur / 10);
                rem = cur % 10;
            }
            digits.push_back(static_cast<char>('0' + static_cast<int>(rem)));
            while (!work.empty() && work.back() == 0) work.pop_back();
        }
        return {digits.rbegin(), digits.rend()};
    }

    /// Exact value if it fits in 64 bits.
    [[nodiscard]] bool fits_u64() const { return limbs_.size() <= 1; }
    [[nodiscard]] uint64_t as_u64() const { return limbs_.empty() ? 0 : limbs_[0]; }

private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }

    std::vector<uint64_t> limbs_;  // little-endian
};

}  // namespace zxrw
