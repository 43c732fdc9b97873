#!/usr/bin/env python3
# Copyright 2026 The fockfringe Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Independent derivation of the values frozen into the C++ tests.

Nothing here shares code with the library:
  * all-particle densities come from a literal sum over all N! permutations,
    divided by n!(N-n)! and C(N, n);
  * d-particle marginals integrate the all-particle density over the
    remaining coordinates with a trapezoid rule that is exact for the
    trigonometric polynomials involved;
  * mixture weights use exact rational arithmetic;
  * stream seeds re-implement SplitMix64 from its published constants.

Run: python3 tests/oracles/derive_frozen_values.py
"""

import cmath
import itertools
import math
from fractions import Fraction

MASK = (1 << 64) - 1


def plane_wave(x):
    u = cmath.exp(1j * math.pi * x)
    return u, u.conjugate()


def split_box(x):
    return (math.sqrt(2), 0.0) if x < 0.5 else (0.0, math.sqrt(2))


def full_density(n, total, xs, modes):
    """Density of detecting all particles of |n, total - n> at xs."""
    vals = [modes(x) for x in xs]
    amp = 0
    for perm in itertools.permutations(range(total)):
        term = 1
        for slot, i in enumerate(perm):
            term *= vals[i][0] if slot < n else vals[i][1]
        amp += term
    amp /= math.factorial(n) * math.factorial(total - n)
    return abs(amp) ** 2 / math.comb(total, n)


def marginal_by_quadrature(n1, n2, xs, modes, nodes=6):
    """Integrates the all-particle density over the undetected coordinates.

    For the plane-wave pair the integrand is a trigonometric polynomial of
    degree <= 2 in each coordinate (frequencies e^{+-2 pi i x}), which the
    periodic trapezoid rule with >= 3 nodes integrates exactly."""
    total = n1 + n2
    rest = total - len(xs)
    grid = [(k + 0.5) / nodes for k in range(nodes)]
    acc = 0.0
    for extra in itertools.product(grid, repeat=rest):
        acc += full_density(n1, total, list(xs) + list(extra), modes)
    return acc / nodes ** rest


def mixture_weights(n, d):
    out = []
    for j in range(d + 1):
        if j > n or d - j > n:
            out.append(Fraction(0))
        else:
            out.append(Fraction(math.comb(2 * n - d, n - d + j) * math.comb(d, j), math.comb(2 * n, n)))
    return out


def splitmix64(z):
    z = (z + 0x9E3779B97F4A7C15) & MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return z ^ (z >> 31)


def derive_stream_seed(seed, stream):
    return splitmix64(splitmix64(seed) ^ ((stream * 0x9E3779B97F4A7C15) & MASK))


def main():
    print("# all-particle densities, literal permutation sum")
    cases = [
        (2, 4, (0.1, 0.3, 0.45, 0.8), plane_wave, "plane-wave"),
        (1, 4, (0.05, 0.3, 0.55, 0.9), plane_wave, "plane-wave"),
        (3, 4, (0.2, 0.25, 0.7, 0.95), plane_wave, "plane-wave"),
        (2, 4, (0.1, 0.2, 0.6, 0.8), split_box, "split-box"),
        (2, 4, (0.1, 0.2, 0.3, 0.8), split_box, "split-box"),
        (3, 5, (0.11, 0.23, 0.47, 0.62, 0.99), plane_wave, "plane-wave"),
    ]
    for n, total, xs, modes, tag in cases:
        print(f"asym j={n} k={total - n} {tag} xs={xs}: {full_density(n, total, xs, modes)!r}")

    print("# marginals of |n1, n2> by quadrature over undetected particles (plane-wave)")
    for n1, n2, xs in [(2, 2, (0.1, 0.6)), (2, 2, (0.13, 0.41, 0.77)), (3, 3, (0.2, 0.45)), (1, 3, (0.3, 0.9))]:
        print(f"marginal n1={n1} n2={n2} xs={xs}: {marginal_by_quadrature(n1, n2, xs, plane_wave)!r}")

    print("# mixture weights")
    for n, d in [(1, 2), (2, 2), (3, 4), (4, 6), (50, 1)]:
        print(f"weights n={n} d={d}: {[str(w) for w in mixture_weights(n, d)]}")

    print("# stream seed derivation: seed stream derived")
    for seed, stream in [(0, 0), (0, 1), (1, 0), (7, 0), (7, 1), (7, 2), (42, 1000),
                         (2**64 - 1, 3), (123456789, 987654321), (2**63, 2**40)]:
        print(seed, stream, derive_stream_seed(seed, stream))


if __name__ == "__main__":
    main()
