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


// Hand-transcribed decompositions used as fixtures by the unit and acceptance tests.

#ifndef GRAPHRANK_TESTS_FIXTURES_H
#define GRAPHRANK_TESTS_FIXTURES_H

#include <string>
#include <vector>

#include "graphrank/cpd.h"

namespace graphrank::fixtures {

/// One factor per character: '0', '1', '+', '-', 'i' (plus_i), 'j' (minus_i).
inline std::vector<QubitVector> word(const std::string &w) {
    std::vector<QubitVector> out;
    for (char c : w) {
        switch (c) {
            case '0':
                out.push_back(qubit::zero());
                break;
            case '1':
                out.push_back(qubit::one());
                break;
            case '+':
                out.push_back(qubit::plus());
                break;
            case '-':
                out.push_back(qubit::minus());
                break;
            case 'i':
                out.push_back(qubit::plus_i());
                break;
            case 'j':
                out.push_back(qubit::minus_i());
                break;
            default:
                throw std::invalid_argument("bad fixture letter");
        }
    }
    return out;
}

inline CpTerm term(const ExactAmplitude &w, const std::string &letters) {
    return CpTerm{w, word(letters)};
}

/// |R3> = |++-> + (1/sqrt2)|001> - (1/sqrt2)|110>.
inline CpDecomposition triangle_three_terms() {
    auto r = ExactAmplitude::inv_sqrt2();
    return {3, {term(ExactAmplitude::one(), "++-"), term(r, "001"), term(-r, "110")}};
}

/// |R3> = (e^{-i pi/4} |+i+i+i> + e^{i pi/4} |-i-i-i>) / sqrt2: two terms.
inline CpDecomposition triangle_two_terms() {
    auto w = ExactAmplitude::omega();
    auto r = ExactAmplitude::inv_sqrt2();
    return {3, {term(w.conj() * r, "iii"), term(w * r, "jjj")}};
}

/// The published 12-term decomposition of the 7-qubit ring with Z applied to qubit 6 in
/// the eight line-state terms, as required by CZ = I (x) Z + 2 P0 (x) P1.
inline CpDecomposition ring7_twelve_terms() {
    auto a = ExactAmplitude::inv_sqrt2_pow(3);
    auto b = ExactAmplitude::inv_sqrt2_pow(2);
    CpDecomposition d{7, {}};
    for (const char *w : {"+0+0+0-", "+0+0-1+", "+0-1-0-", "+0-1+1+", "-1-0+0-", "-1-0-1+", "-1+1-0-", "-1+1+1+"}) {
        d.terms.push_back(term(a, w));
    }
    for (const char *w : {"0+0+0-1", "0-1-0-1", "0+0-1+1", "0-1+1+1"}) {
        d.terms.push_back(term(b, w));
    }
    return d;
}

/// The same 12 terms exactly as printed, without the Z on qubit 6. Does not reconstruct the ring.
inline CpDecomposition ring7_twelve_terms_as_printed() {
    auto a = ExactAmplitude::inv_sqrt2_pow(3);
    auto b = ExactAmplitude::inv_sqrt2_pow(2);
    CpDecomposition d{7, {}};
    for (const char *w : {"+0+0+0+", "+0+0-1-", "+0-1-0+", "+0-1+1-", "-1-0+0+", "-1-0-1-", "-1+1-0+", "-1+1+1-"}) {
        d.terms.push_back(term(a, w));
    }
    for (const char *w : {"0+0+0-1", "0-1-0-1", "0+0-1+1", "0-1+1+1"}) {
        d.terms.push_back(term(b, w));
    }
    return d;
}

}  // namespace graphrank::fixtures

#endif
