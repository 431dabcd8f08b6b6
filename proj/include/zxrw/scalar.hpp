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

namespace zxrw {

/// Tracked global factor of a diagram: value * (sqrt 2)^sqrt2_power. All
/// Clifford+T rewrite factors are an eighth root of unity times a power of
/// sqrt 2, so the power is kept as an exact integer and eighth roots are
/// multiplied in as exact Gaussian integers. The value is renormalised into
/// the exponent to stay away from overflow.
struct Scalar {
    std::complex<double> value{1.0, 0.0};
    int sqrt2_power = 0;

    static Scalar one() { return {}; }

    [[nodiscard]] bool is_zero() const { return value == std::complex<double>{0.0, 0.0}; }

    Scalar& mul_complex(std::complex<double> c) {
        value *= c;
        renormalize();
        return *this;
    }

    Scalar& mul_sqrt2_power(int k) {
        sqrt2_power += k;
        return *this;
    }

    /// Multiply by e^{i * k * pi/4}. Odd k is handled exactly as a Gaussian
    /// integer over an extra power of sqrt 2.
    Scalar& mul_phase_pi4(int k) {
        k = ((k % 8) + 8) % 8;
        switch (k) {
            case 0: break;
            case 2: value *= std::complex<double>{0, 1}; break;
            case 4: value = -value; break;
            case 6: value *= std::complex<double>{0, -1}; break;
            case 1: value *= std::complex<double>{1, 1}; sqrt2_power -= 1; break;
            case 3: value *= std::complex<double>{-1, 1}; sqrt2_power -= 1; break;
            case 5: value *= std::complex<double>{-1, -1}; sqrt2_power -= 1; break;
            case 7: value *= std::complex<double>{1, -1}; sqrt2_power -= 1; break;
        }
        renormalize();
        return *this;
    }

    /// Multiply by e^{i * p} for a spider phase p; the exact part stays exact.
    template <typename PhaseT>
    Scalar& mul_phase(const PhaseT& p) {
        mul_phase_pi4(p.pi4_numerator());
        if (p.generic()) mul_complex(std::polar(1.0, *p.generic()));
        return *this;
    }

    Scalar& mul(const Scalar& o) {
        value *= o.value;
        sqrt2_power += o.sqrt2_power;
        renormalize();
        return *this;
    }

    void set_zero() {
        value = {0.0, 0.0};
        sqrt2_power = 0;
    }

    [[nodiscard]] std::complex<double> to_complex() const {
        double mag = std::ldexp(1.0, sqrt2_power / 2);
        if (sqrt2_power % 2 != 0) mag *= (sqrt2_power > 0) ? std::sqrt(2.0) : std::sqrt(0.5);
        return value * mag;
    }

    void renormalize() {
        if (is_zero()) {
            sqrt2_power = 0;
            return;
        }
        double m = std::max(std::abs(value.real()), std::abs(value.imag()));
        while (m >= 4.0) {
            value *= 0.25;
            sqrt2_power += 4;
            m *= 0.25;
        }
        while (m < 0.25 && m > 0.0) {
            value *= 4.0;
            sqrt2_power -= 4;
            m *= 4.0;
        }
    }
};

}  // namespace zxrw
