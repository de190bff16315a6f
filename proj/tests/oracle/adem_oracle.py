# Copyright 2026 The dlash Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent reference for the Adem tables under tests/unit/data.

Binomial parities come from exact integer binomials (math.comb), with
binom(-m, k) = (-1)^k binom(m + k - 1, k) for negative tops. Regenerate with

    python3 tests/oracle/adem_oracle.py tests/unit/data
"""

import math
import random
import sys
from functools import lru_cache
from pathlib import Path


def binom_parity(top, bottom):
    if bottom < 0:
        return 0
    if top >= 0:
        return math.comb(top, bottom) & 1
    return math.comb(-top + bottom - 1, bottom) & 1


def adem(i, j):
    # Every l with a nonzero binomial lies in [ceil(i/2), i-j-1].
    return [(i + j - l, l) for l in range(-(-i // 2), i - j)
            if binom_parity(l - j - 1, 2 * l - i)]


def stable(word, n):
    d = n
    for q in reversed(word):
        if q < d:
            return False
        d += q
    return True


@lru_cache(maxsize=None)
def reduce_word(word, n):
    if not stable(word, n):
        return frozenset()
    for p in range(len(word) - 1):
        if word[p] > 2 * word[p + 1]:
            out = set()
            for a, b in adem(word[p], word[p + 1]):
                out ^= reduce_word(word[:p] + (a, b) + word[p + 2:], n)
            return frozenset(out)
    return frozenset([word])


def braces(items):
    return "{" + ", ".join(items) + "}"


def main(out_dir):
    out_dir = Path(out_dir)
    rows = []
    for j in range(-3, 8):
        for i in range(2 * j + 1, 16 - j):
            rhs = [braces([str(a), str(b)]) for a, b in adem(i, j)]
            rows.append(f"    {{{i}, {j}, {braces(rhs)}}},")
    (out_dir / "adem_table.inc").write_text("\n".join(rows) + "\n")

    rng = random.Random(11)
    rows = []
    while len(rows) < 40:
        n = rng.randint(0, 3)
        length = rng.randint(2, 3)
        word = tuple(rng.randint(0, 24) for _ in range(length))
        if not stable(word, n):
            continue
        if all(word[k] <= 2 * word[k + 1] for k in range(length - 1)):
            continue
        result = [braces(map(str, w)) for w in sorted(reduce_word(word, n))]
        rows.append(f"    {{{n}, {braces(map(str, word))}, {braces(result)}}},")
    (out_dir / "reduce_table.inc").write_text("\n".join(rows) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else ".")
