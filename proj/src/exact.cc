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

#include "graphrank/exact.h"

#include <cmath>
#include <sstream>
#include <tuple>

#include "graphrank/errors.h"

namespace graphrank {

namespace {

using i128 = __int128;

int64_t narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) {
        throw ResourceError("exact amplitude overflowed 64-bit coefficients");
    }
    return static_cast<int64_t>(v);
}

i128 shifted(int64_t v, int64_t shift) {
    if (shift >= 62) {
        throw ResourceError("exact amplitude denominators too far apart");
    }
    return static_cast<i128>(v) << shift;
}

}  // namespace

ExactAmplitude ExactAmplitude::integer(int64_t value) {
    return from_parts(value, 0, 0, 0, 0);
}

ExactAmplitude ExactAmplitude::from_parts(int64_t a, int64_t b, int64_t c, int64_t d, int64_t k) {
    if (k < 0) {
        throw InputError("exact amplitude exponent must be nonnegative");
    }
    ExactAmplitude z;
    z.a_ = a;
    z.b_ = b;
    z.c_ = c;
    z.d_ = d;
    z.k_ = k;
    z.normalize();
    return z;
}

ExactAmplitude ExactAmplitude::from_triple(const HalfPowerTriple &t) {
    if (t.halfpow < 0) {
        throw InputError("half-power exponent must be nonnegative");
    }
    if (t.halfpow % 2 == 0) {
        return from_parts(t.re, 0, t.im, 0, t.halfpow / 2);
    }
    // x / 2^{h/2} = x * sqrt2 / 2^{(h+1)/2}
    return from_parts(0, t.re, 0, t.im, (t.halfpow + 1) / 2);
}

ExactAmplitude ExactAmplitude::imag_unit() {
    return from_parts(0, 0, 1, 0, 0);
}

ExactAmplitude ExactAmplitude::inv_sqrt2() {
    return from_parts(0, 1, 0, 0, 1);
}

ExactAmplitude ExactAmplitude::sqrt2() {
    return from_parts(0, 1, 0, 0, 0);
}

ExactAmplitude ExactAmplitude::omega() {
    return from_parts(0, 1, 0, 1, 1);
}

ExactAmplitude ExactAmplitude::inv_sqrt2_pow(int64_t k) {
    return from_triple(1, 0, k);
}

void ExactAmplitude::normalize() {
    if (is_zero()) {
        k_ = 0;
        return;
    }
    while (k_ > 0 && ((a_ | b_ | c_ | d_) & 1) == 0) {
        a_ /= 2;
        b_ /= 2;
        c_ /= 2;
        d_ /= 2;
        k_--;
    }
}

std::optional<HalfPowerTriple> ExactAmplitude::to_triple() const {
    if (b_ == 0 && d_ == 0) {
        return HalfPowerTriple{a_, c_, 2 * k_};
    }
    if (a_ == 0 && c_ == 0) {
        if (k_ == 0) {
            // sqrt2 * x = 2x / sqrt2
            return HalfPowerTriple{narrow(static_cast<i128>(b_) * 2), narrow(static_cast<i128>(d_) * 2), 1};
        }
        return HalfPowerTriple{b_, d_, 2 * k_ - 1};
    }
    return std::nullopt;
}

std::complex<double> ExactAmplitude::to_complex() const {
    double scale = std::ldexp(1.0, static_cast<int>(-k_));
    double s2 = std::sqrt(2.0);
    return {(static_cast<double>(a_) + s2 * static_cast<double>(b_)) * scale,
            (static_cast<double>(c_) + s2 * static_cast<double>(d_)) * scale};
}

ExactAmplitude ExactAmplitude::conj() const {
    ExactAmplitude z = *this;
    z.c_ = -c_;
    z.d_ = -d_;
    return z;
}

ExactAmplitude ExactAmplitude::norm2() const {
    return *this * conj();
}

ExactAmplitude ExactAmplitude::operator-() const {
    ExactAmplitude z = *this;
    z.a_ = -a_;
    z.b_ = -b_;
    z.c_ = -c_;
    z.d_ = -d_;
    return z;
}

ExactAmplitude ExactAmplitude::operator+(const ExactAmplitude &other) const {
    if (is_zero()) {
        return other;
    }
    if (other.is_zero()) {
        return *this;
    }
    int64_t k = std::max(k_, other.k_);
    int64_t s1 = k - k_;
    int64_t s2 = k - other.k_;
    ExactAmplitude z;
    z.a_ = narrow(shifted(a_, s1) + shifted(other.a_, s2));
    z.b_ = narrow(shifted(b_, s1) + shifted(other.b_, s2));
    z.c_ = narrow(shifted(c_, s1) + shifted(other.c_, s2));
    z.d_ = narrow(shifted(d_, s1) + shifted(other.d_, s2));
    z.k_ = k;
    z.normalize();
    return z;
}

ExactAmplitude ExactAmplitude::operator-(const ExactAmplitude &other) const {
    return *this + (-other);
}

ExactAmplitude ExactAmplitude::operator*(const ExactAmplitude &other) const {
    if (is_zero() || other.is_zero()) {
        return {};
    }
    // (x1 + i y1)(x2 + i y2) with x = p + q*sqrt2 over the integers.
    auto mul = [](i128 p1, i128 q1, i128 p2, i128 q2) {
        return std::pair<i128, i128>{p1 * p2 + 2 * q1 * q2, p1 * q2 + q1 * p2};
    };
    auto [xx_p, xx_q] = mul(a_, b_, other.a_, other.b_);
    auto [yy_p, yy_q] = mul(c_, d_, other.c_, other.d_);
    auto [xy_p, xy_q] = mul(a_, b_, other.c_, other.d_);
    auto [yx_p, yx_q] = mul(c_, d_, other.a_, other.b_);
    ExactAmplitude z;
    z.a_ = narrow(xx_p - yy_p);
    z.b_ = narrow(xx_q - yy_q);
    z.c_ = narrow(xy_p + yx_p);
    z.d_ = narrow(xy_q + yx_q);
    z.k_ = k_ + other.k_;
    z.normalize();
    return z;
}

bool ExactAmplitude::operator<(const ExactAmplitude &other) const {
    return std::tie(k_, a_, b_, c_, d_) < std::tie(other.k_, other.a_, other.b_, other.c_, other.d_);
}

std::string ExactAmplitude::str() const {
    std::stringstream ss;
    ss << *this;
    return ss.str();
}

std::ostream &operator<<(std::ostream &out, const ExactAmplitude &z) {
    if (auto t = z.to_triple()) {
        return out << "(" << t->re << "," << t->im << "," << t->halfpow << ")";
    }
    return out << "((" << z.a() << "+" << z.b() << "r2)+i(" << z.c() << "+" << z.d() << "r2))/2^" << z.k();
}

}  // namespace graphrank
