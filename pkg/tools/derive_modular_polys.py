#!/usr/bin/env python3
"""Regenerate src/squaredisc/data/modular_polynomials.txt.

The classical modular polynomial Phi_N(X, Y) is the symmetric bivariate
polynomial of bidegree N+1 (N prime here) that vanishes identically when
X = j(q) and Y = j(q^N) as Laurent series in q.  This script recomputes
the coefficients from scratch:

  1. expand j(q) = E4(q)^3 / (q * prod_{n>=1} (1 - q^n)^24) exactly over Z,
  2. set up the linear system "series of Phi_N(j(q), j(q^N)) == 0" with the
     normalization coefficient(X^{N+1}) = 1,
  3. solve it exactly over Q and check the overdetermined equations,
  4. cross-check Phi_2 against the long-known textbook coefficients and
     spot-check integrality and symmetry for all N.

Run from the repository root:

    python tools/derive_modular_polys.py
"""

from __future__ import annotations

import os
from fractions import Fraction

LEVELS = (2, 3, 7)
TRUNC = 8          # verify series vanishing up to q^TRUNC
JCOEFF_COUNT = 90  # j-expansion coefficients (exponents -1 .. JCOEFF_COUNT - 2)

OUT_PATH = os.path.join(
    os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
    "src", "squaredisc", "data", "modular_polynomials.txt",
)

# Textbook Phi_2, used as an external cross-check of the whole pipeline.
PHI2_CLASSICAL = {
    (3, 0): 1,
    (2, 2): -1,
    (2, 1): 1488,
    (2, 0): -162000,
    (1, 1): 40773375,
    (1, 0): 8748000000,
    (0, 0): -157464000000000,
}


def sigma3(n: int) -> int:
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d ** 3
            e = n // d
            if e != d:
                total += e ** 3
        d += 1
    return total


def series_mul(a: list[int], b: list[int], nterms: int) -> list[int]:
    out = [0] * nterms
    for i, ai in enumerate(a):
        if ai == 0 or i >= nterms:
            continue
        top = min(len(b), nterms - i)
        for k in range(top):
            bk = b[k]
            if bk:
                out[i + k] += ai * bk
    return out


def j_expansion(nterms: int) -> list[int]:
    """Coefficients c[0..nterms-1] with j(q) = sum c[m] q^(m-1)."""
    e4 = [1] + [240 * sigma3(n) for n in range(1, nterms)]
    # prod (1 - q^n), truncated
    f = [0] * nterms
    f[0] = 1
    for n in range(1, nterms):
        for i in range(nterms - 1, n - 1, -1):
            f[i] -= f[i - n]
    f2 = series_mul(f, f, nterms)
    f4 = series_mul(f2, f2, nterms)
    f8 = series_mul(f4, f4, nterms)
    f16 = series_mul(f8, f8, nterms)
    f24 = series_mul(f16, f8, nterms)
    # invert the unit power series f24
    inv = [0] * nterms
    inv[0] = 1
    for n in range(1, nterms):
        s = 0
        for k in range(1, n + 1):
            if f24[k]:
                s += f24[k] * inv[n - k]
        inv[n] = -s
    e4cubed = series_mul(series_mul(e4, e4, nterms), e4, nterms)
    return series_mul(e4cubed, inv, nterms)


class Laurent:
    """Laurent series with exact coefficients and a validity horizon.

    coeffs[m] is the coefficient of q^(off + m); coefficients are reliable
    only for exponents <= valid, which shrinks under multiplication exactly
    as far as missing tail terms could contaminate the product.
    """

    __slots__ = ("off", "coeffs", "valid")

    def __init__(self, off: int, coeffs: list[int], valid: int):
        self.off = off
        self.coeffs = list(coeffs)
        self.valid = valid

    def __mul__(self, other: "Laurent") -> "Laurent":
        off = self.off + other.off
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ai in enumerate(self.coeffs):
            if ai == 0:
                continue
            for k, bk in enumerate(other.coeffs):
                if bk:
                    out[i + k] += ai * bk
        valid = min(self.valid + other.off, other.valid + self.off)
        return Laurent(off, out, valid)

    def __add__(self, other: "Laurent") -> "Laurent":
        off = min(self.off, other.off)
        n = max(self.off + len(self.coeffs), other.off + len(other.coeffs)) - off
        out = [0] * n
        for i, ai in enumerate(self.coeffs):
            out[self.off + i - off] += ai
        for i, bi in enumerate(other.coeffs):
            out[other.off + i - off] += bi
        return Laurent(off, out, min(self.valid, other.valid))

    def coeff(self, e: int) -> int:
        if e > self.valid:
            raise RuntimeError(f"coefficient of q^{e} beyond validity {self.valid}")
        m = e - self.off
        if 0 <= m < len(self.coeffs):
            return self.coeffs[m]
        return 0

    def powers(self, top: int) -> list["Laurent"]:
        one = Laurent(0, [1], 10 ** 9)
        out = [one]
        for _ in range(top):
            out.append(out[-1] * self)
        return out


def solve_exact(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Gaussian elimination; raises if the system is inconsistent."""
    nrows = len(rows)
    ncols = len(rows[0])
    aug = [row[:] + [rhs[i]] for i, row in enumerate(rows)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for rr in range(r, nrows):
            if aug[rr][c] != 0:
                piv = rr
                break
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = Fraction(1) / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for rr in range(nrows):
            if rr != r and aug[rr][c] != 0:
                factor = aug[rr][c]
                aug[rr] = [v - factor * w for v, w in zip(aug[rr], aug[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    if len(pivots) != ncols:
        raise RuntimeError("underdetermined system")
    for rr in range(r, nrows):
        if aug[rr][ncols] != 0:
            raise RuntimeError("inconsistent system: series does not vanish")
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        sol[c] = aug[i][ncols]
    return sol


def derive(level: int, jc: list[int]) -> dict[tuple[int, int], int]:
    deg = level + 1
    pole = level * deg
    # X^i Y^k products must stay valid through q^TRUNC for i, k <= deg.
    need = TRUNC + pole + deg + 2
    if need + 2 > len(jc):
        raise RuntimeError("increase JCOEFF_COUNT")

    jx = Laurent(-1, jc[: need + 2], need)
    ycoeffs = [0] * (need + level + 1)
    for m, c in enumerate(jc):
        e = level * (m - 1)
        if -level <= e <= need:
            ycoeffs[e + level] = c
    jy = Laurent(-level, ycoeffs, need)

    xp = jx.powers(deg)
    yp = jy.powers(deg)

    unknowns = [(i, k) for k in range(deg) for i in range(k + 1)]
    base = xp[deg] + yp[deg]

    columns = []
    for (i, k) in unknowns:
        term = xp[i] * yp[k]
        if i != k:
            term = term + (xp[k] * yp[i])
        columns.append(term)

    exps = list(range(-pole, TRUNC + 1))
    rows = [[Fraction(col.coeff(e)) for col in columns] for e in exps]
    rhs = [Fraction(-base.coeff(e)) for e in exps]
    sol = solve_exact(rows, rhs)

    coeffs: dict[tuple[int, int], int] = {(deg, 0): 1}
    for (i, k), v in zip(unknowns, sol):
        if v.denominator != 1:
            raise RuntimeError(f"non-integer coefficient at {(i, k)}: {v}")
        if v != 0:
            coeffs[(k, i)] = int(v)  # store with first index >= second

    # Residual check: full series must vanish up to the truncation order.
    total = xp[deg] + yp[deg]
    for (i, k), c in coeffs.items():
        if (i, k) == (deg, 0):
            continue
        cl = Laurent(0, [c], 10 ** 9)
        term = cl * (xp[i] * yp[k])
        if i != k:
            term = term + (cl * (xp[k] * yp[i]))
        total = total + term
    for e in range(-pole, TRUNC + 1):
        if total.coeff(e) != 0:
            raise RuntimeError(f"Phi_{level}: residual at q^{e}")
    return coeffs


def main() -> None:
    jc = j_expansion(JCOEFF_COUNT)
    expected_head = [1, 744, 196884, 21493760, 864299970, 20245856256]
    if jc[: len(expected_head)] != expected_head:
        raise RuntimeError(f"bad j-expansion head: {jc[:6]}")

    all_coeffs = {}
    for level in LEVELS:
        coeffs = derive(level, jc)
        if level == 2 and coeffs != PHI2_CLASSICAL:
            raise RuntimeError(f"Phi_2 mismatch with textbook values: {coeffs}")
        all_coeffs[level] = coeffs
        print(f"Phi_{level}: {len(coeffs)} stored coefficients (i >= k)")

    lines = [
        "# Classical modular polynomials Phi_N(X, Y), symmetric storage.",
        "# Line format: N i k c  ->  coefficient c of X^i Y^k (and of X^k Y^i).",
        "# Regenerate with tools/derive_modular_polys.py (exact q-expansion",
        "# of j plus exact linear elimination; Phi_2 checked against the",
        "# textbook coefficients).",
    ]
    for level in LEVELS:
        for (i, k) in sorted(all_coeffs[level], reverse=True):
            lines.append(f"{level} {i} {k} {all_coeffs[level][(i, k)]}")
    with open(OUT_PATH, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"wrote {OUT_PATH}")


if __name__ == "__main__":
    main()
