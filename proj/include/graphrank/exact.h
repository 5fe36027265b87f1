// Copyright 2026 The graphrank Authors
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

#ifndef GRAPHRANK_EXACT_H
#define GRAPHRANK_EXACT_H

#include <complex>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace graphrank {

/// (re, im, k) encodes (re + i*im) * 2^(-k/2). The interchange form used in files.
struct HalfPowerTriple {
    int64_t re = 0;
    int64_t im = 0;
    int64_t halfpow = 0;

    bool operator==(const HalfPowerTriple &) const = default;
};

/// Exact element of Z[i, 1/sqrt(2)].
///
/// Stored as ((a + b*sqrt2) + i*(c + d*sqrt2)) / 2^k with k >= 0 minimal, which makes the
/// representation unique so equality is field-wise. Every graph-state amplitude and every
/// factor used by the constructive decompositions lives here, and unlike the bare
/// (re, im, k) triple form the set is closed under addition.
///
/// Arithmetic throws ResourceError on int64 overflow instead of wrapping.
class ExactAmplitude {
   public:
    constexpr ExactAmplitude() = default;
    /// Exact integer.
    static ExactAmplitude integer(int64_t value);
    static ExactAmplitude from_parts(int64_t a, int64_t b, int64_t c, int64_t d, int64_t k);
    /// Decode the interchange triple. Requires halfpow >= 0.
    static ExactAmplitude from_triple(const HalfPowerTriple &t);
    static ExactAmplitude from_triple(int64_t re, int64_t im, int64_t halfpow) {
        return from_triple(HalfPowerTriple{re, im, halfpow});
    }

    static ExactAmplitude zero() {
        return {};
    }
    static ExactAmplitude one() {
        return integer(1);
    }
    static ExactAmplitude imag_unit();
    static ExactAmplitude inv_sqrt2();
    static ExactAmplitude sqrt2();
    /// e^{i*pi/4} = (1 + i)/sqrt2.
    static ExactAmplitude omega();
    /// 2^{-k/2}.
    static ExactAmplitude inv_sqrt2_pow(int64_t k);

    /// Triple form when the value has one; values like 1 + 1/sqrt2 do not.
    std::optional<HalfPowerTriple> to_triple() const;

    std::complex<double> to_complex() const;
    bool is_zero() const {
        return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0;
    }
    bool is_real() const {
        return c_ == 0 && d_ == 0;
    }

    ExactAmplitude conj() const;
    /// |z|^2, exact and real.
    ExactAmplitude norm2() const;

    ExactAmplitude operator-() const;
    ExactAmplitude operator+(const ExactAmplitude &other) const;
    ExactAmplitude operator-(const ExactAmplitude &other) const;
    ExactAmplitude operator*(const ExactAmplitude &other) const;
    ExactAmplitude &operator+=(const ExactAmplitude &other) {
        return *this = *this + other;
    }
    ExactAmplitude &operator-=(const ExactAmplitude &other) {
        return *this = *this - other;
    }
    ExactAmplitude &operator*=(const ExactAmplitude &other) {
        return *this = *this * other;
    }

    bool operator==(const ExactAmplitude &other) const = default;

    /// Lexicographic order on the canonical fields. Arbitrary but total; used to sort terms.
    bool operator<(const ExactAmplitude &other) const;

    int64_t a() const {
        return a_;
    }
    int64_t b() const {
        return b_;
    }
    int64_t c() const {
        return c_;
    }
    int64_t d() const {
        return d_;
    }
    int64_t k() const {
        return k_;
    }

    std::string str() const;

   private:
    void normalize();

    int64_t a_ = 0;
    int64_t b_ = 0;
    int64_t c_ = 0;
    int64_t d_ = 0;
    int64_t k_ = 0;
};

std::ostream &operator<<(std::ostream &out, const ExactAmplitude &z);

}  // namespace graphrank

#endif
