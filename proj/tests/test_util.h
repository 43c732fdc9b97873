// Copyright 2026 The fockfringe Authors
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

#ifndef FOCKFRINGE_TESTS_TEST_UTIL_H
#define FOCKFRINGE_TESTS_TEST_UTIL_H

#include <string>
#include <vector>

#include "fockfringe/modes.h"

namespace fockfringe::testing {

inline std::string data_path(const std::string &name) {
    return std::string(FOCKFRINGE_TEST_DATA_DIR) + "/" + name;
}

/// u = 0.6 + 0.8i e^{2 pi i x}, w = 0.8 - 0.6i e^{2 pi i x}; orthonormal with a
/// non-constant |u|^2 + |w|^2.
inline ModePair fourier_test_pair() {
    return ModePair::fourier_series({{0.6, 0.0}, {0.0, 0.8}}, {{0.8, 0.0}, {0.0, -0.6}});
}

inline std::vector<ModePair> all_test_pairs() {
    return {ModePair::plane_wave(), ModePair::split_box(), fourier_test_pair()};
}

}  // namespace fockfringe::testing

#endif  // FOCKFRINGE_TESTS_TEST_UTIL_H
