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
#include <complex>
#include <numbers>
#include <optional>

namespace zxrw {

/// Spider phase. The exact part is an integer multiple of pi/4 kept mod 2*pi;
/// arbitrary angles (e.g. from rz gates) go into the generic part, for which
/// exactness is not guaranteed. A phase is Clifford iff its exact part is an
/// even multiple of pi/4 and no generic part is present.
class Phase {
public:
    Phase() = default;

    static Phase pi4(int numerator) {
        Phase p;
        p.num8_ = ((numerator % 8) + 8) % 8;
        return p;
    }

    static Phase radians(double theta) {
        Phase p;
        p.generic_ = wrap(theta);
        p.snap();
        return p;
    }

    /// Exact numerator of pi/4, in [0, 8).
    [[nodiscard]] int pi4_numerator() const { return num8_; }
    [[nodiscard]] const std::optional<double>& generic() const { return generic_; }

    [[nodiscard]] bool is_exact() const { return !generic_.has_value(); }
    [[nodiscard]] bool is_zero() const { return num8_ == 0 && !generic_; }
    [[nodiscard]] bool is_clifford() const { return !generic_ && num8_ % 2 == 0; }
    [[nodiscard]] bool is_pauli() const { return !generic_ && (num8_ == 0 || num8_ == 4); }
    [[nodiscard]] bool is_proper_clifford() const { return !generic_ && (num8_ == 2 || num8_ == 6); }
    [[nodiscard]] bool is_pi() const { return !generic_ && num8_ == 4; }

    [[nodiscard]] double to_radians() const {
        return num8_ * std::numbers::pi / 4 + (generic_ ? *generic_ : 0.0);
    }

    /// e^{i * phase}; exact eighth roots of unity for exact phases.
    [[nodiscard]] std::complex<double> unit() const {
        static const double s = std::sqrt(0.5);
        static const std::complex<double> roots[8] = {
            {1, 0}, {s, s}, {0, 1}, {-s, s}, {-1, 0}, {-s, -s}, {0, -1}, {s, -s}};
        std::complex<double> u = roots[num8_];
        if (generic_) u *= std::polar(1.0, *generic_);
        return u;
    }

    Phase operator+(const Phase& o) const {
        Phase p;
        p.num8_ = (num8_ + o.num8_) % 8;
        if (generic_ || o.generic_)
            p.generic_ = wrap((generic_ ? *generic_ : 0.0) + (o.generic_ ? *o.generic_ : 0.0));
        p.snap();
        return p;
    }
    Phase& operator+=(const Phase& o) { return *this = *this + o; }

    [[nodiscard]] Phase negated() const {
        Phase p;
        p.num8_ = (8 - num8_) % 8;
        if (generic_) p.generic_ = wrap(-*generic_);
        p.snap();
        return p;
    }

    bool operator==(const Phase& o) const {
        if (num8_ != o.num8_ || generic_.has_value() != o.generic_.has_value()) return false;
        return !generic_ || *generic_ == *o.generic_;
    }

private:
    static double wrap(double t) {
        constexpr double two_pi = 2 * std::numbers::pi;
        t = std::fmod(t, two_pi);
        if (t < 0) t += two_pi;
        return t;
    }

    void snap() {
        constexpr double eps = 1e-12;
        constexpr double two_pi = 2 * std::numbers::pi;
        if (generic_ && (*generic_ < eps || two_pi - *generic_ < eps)) generic_.reset();
    }

    int num8_ = 0;
    std::optional<double> generic_;
};

}  // namespace zxrw
