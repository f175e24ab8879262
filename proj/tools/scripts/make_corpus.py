#!/usr/bin/env python3
# Copyright 2026 The laurent-duality Authors
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

"""Regenerates the bundled module corpora under data/ (deterministic)."""
import json
import random
from pathlib import Path

import sympy as sp

DATA = Path(__file__).resolve().parents[2] / "data"
z = sp.Symbol("z")


def reduce_cyc(e, n):
    if n <= 2:
        return sp.nsimplify(e)
    phi = sp.cyclotomic_poly(n, z)
    return sp.rem(sp.expand(e), phi, z)


def text(e, n):
    e = sp.expand(reduce_cyc(e, n))
    return str(e).replace("**", "^").replace(" ", "")


def mat_text(m, n):
    return [[text(m[i, j], n) for j in range(m.cols)] for i in range(m.rows)]


def jordan(a, k):
    m = sp.zeros(k, k)
    for i in range(k):
        m[i, i] = a
        if i + 1 < k:
            m[i, i + 1] = 1
    return m


def companion(coeffs):
    # monic x^k + c_{k-1} x^{k-1} + ... + c_0, coefficients low to high
    k = len(coeffs)
    m = sp.zeros(k, k)
    for i in range(1, k):
        m[i, i - 1] = 1
    for i in range(k):
        m[i, k - 1] = -coeffs[i]
    return m


def unimodular(k, rng):
    p = sp.eye(k)
    for _ in range(2 * k):
        i, j = rng.sample(range(k), 2) if k > 1 else (0, 0)
        if i != j:
            e = sp.eye(k)
            e[i, j] = rng.choice([-2, -1, 1, 2])
            p = p * e
    return p


def conj(m, rng):
    p = unimodular(m.rows, rng)
    return p * m * p.inv()


def block(*ms):
    return sp.diag(*ms)


def module(name, ops, n):
    dim = ops[0].rows
    for t in ops:
        assert sp.simplify(reduce_cyc(t.det(), n)) != 0, name
    for a in ops:
        for b in ops:
            assert (a * b - b * a).applyfunc(lambda e: reduce_cyc(e, n)) == sp.zeros(dim, dim), name
    return {"name": name, "dimension": dim, "operators": [mat_text(t, n) for t in ops]}


def write(path, field, rank, modules):
    doc = {"field": field, "rank": rank, "modules": modules}
    path.write_text(json.dumps(doc, indent=1) + "\n")


def rational_d1(rng):
    mods = []
    for a in [3, -1, sp.Rational(1, 2), 5]:
        mods.append(module(f"char-{a}".replace("/", "_"), [sp.Matrix([[a]])], 1))
    for a, k in [(1, 2), (2, 2), (-3, 3), (sp.Rational(2, 3), 4), (1, 6)]:
        mods.append(module(f"jordan-{k}-{a}".replace("/", "_"), [jordan(a, k)], 1))
    for coeffs in [[1, 1], [2, 0, 1], [-1, 0, 0], [3, -2, 0, 1], [1, 1, 1, 1, 1], [-2, 1]]:
        mods.append(module("companion-" + "_".join(map(str, coeffs)), [companion(coeffs)], 1))
    mods.append(module("diag-1-1", [sp.diag(1, 1)], 1))
    mods.append(module("diag-2-3-5", [sp.diag(2, 3, 5)], 1))
    mods.append(module("sum-j2-char", [block(jordan(2, 2), sp.Matrix([[2]]))], 1))
    mods.append(module("sum-j2-j2", [block(jordan(-1, 2), jordan(-1, 2))], 1))
    for i in range(7):
        k = rng.randint(2, 6)
        base = rng.choice([
            lambda: jordan(rng.choice([1, 2, -1, 3]), k),
            lambda: companion([rng.choice([1, -1, 2, 3])] + [rng.randint(-2, 2) for _ in range(k - 1)]),
            lambda: sp.diag(*[rng.choice([1, 2, -2, 4]) for _ in range(k)]),
        ])()
        mods.append(module(f"random-{i}", [conj(base, rng)], 1))
    return mods


def cyclotomic_d1(n):
    w = z
    mods = [module("char-z", [sp.Matrix([[w]])], n),
            module("char-1+z", [sp.Matrix([[1 + w]])], n),
            module("jordan-2-z", [jordan(w, 2)], n),
            module("diag-1-z-z2", [sp.diag(1, w, w**2)], n),
            module("mixed-3", [sp.Matrix([[w, 1, 0], [0, w, 0], [0, 0, 2 - w]])], n),
            module("conj-4", [conj(block(jordan(w, 2), jordan(-w, 2)), random.Random(n))], n)]
    return mods


def d2(rng):
    mods = [module("trivial", [sp.eye(1), sp.eye(1)], 1)]
    for i in range(6):
        k = rng.randint(2, 3)
        c = companion([rng.choice([1, -1, 2])] + [rng.randint(-1, 1) for _ in range(k - 1)])
        while True:
            p1 = [rng.randint(-1, 2) for _ in range(3)]
            p2 = [rng.randint(-1, 2) for _ in range(3)]
            t1 = p1[0] * sp.eye(k) + p1[1] * c + p1[2] * c * c
            t2 = p2[0] * sp.eye(k) + p2[1] * c + p2[2] * c * c
            if t1.det() != 0 and t2.det() != 0:
                break
        p = unimodular(k, rng)
        mods.append(module(f"random-{i}", [p * t1 * p.inv(), p * t2 * p.inv()], 1))
    mods.append(module("jordan-pair", [jordan(2, 2), sp.Matrix([[3, 5], [0, 3]])], 1))
    return mods


def main():
    rng = random.Random(20261019)
    write(DATA / "k_a_d1.mod", "Q", 1, [module("k_3", [sp.Matrix([[3]])], 1)])
    write(DATA / "corpus_d1.mod", "Q", 1, rational_d1(rng))
    write(DATA / "corpus_d1_cyclotomic3.mod", "cyclotomic:3", 1, cyclotomic_d1(3))
    write(DATA / "corpus_d1_cyclotomic4.mod", "cyclotomic:4", 1, cyclotomic_d1(4))
    write(DATA / "corpus_d2.mod", "Q", 2, d2(rng))
    write(DATA / "trivial_d3.mod", "Q", 3, [module("trivial", [sp.eye(1)] * 3, 1)])


if __name__ == "__main__":
    main()
