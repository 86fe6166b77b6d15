"""Genus bookkeeping and bounded-height rational point search on C_N, X_N.

The search is exact end to end: candidate h values are fractions a/b in
lowest terms with |a| <= H and 0 < b <= H, and squareness of F(h) (and
G(h) for X_N) is decided by integer square roots.  Results come back in a
canonical order (denominator, numerator, then sign of the y and z
coordinates), so the outcome does not depend on how the candidate box is
partitioned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .families import family, load_catalog
from .polynomials import Poly, poly_gcd
from .rationals import sqrt_rational


@dataclass(frozen=True, order=True)
class AffinePointC:
    h: Fraction
    y: Fraction

    def as_tuple(self) -> tuple[Fraction, Fraction]:
        return (self.h, self.y)


@dataclass(frozen=True, order=True)
class AffinePointX:
    h: Fraction
    y: Fraction
    z: Fraction

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.h, self.y, self.z)


def genus_hyperelliptic(f: Poly) -> int:
    """Genus of y^2 = f(h) for squarefree f: floor((deg f - 1) / 2)."""
    if f.is_zero() or f.degree < 1:
        raise ValueError("need a nonconstant polynomial")
    if poly_gcd(f, f.derivative()).degree != 0:
        raise ValueError("model is singular; take squarefree part first")
    return (f.degree - 1) // 2


def _height_box(H: int):
    """All h = a/b in lowest terms with |a| <= H, 0 < b <= H, grouped by b."""
    for b in range(1, H + 1):
        for a in range(-H, H + 1):
            if math.gcd(abs(a), b) == 1:
                yield Fraction(a, b)


def search_C(N: int, H: int, data_dir: Optional[str] = None) -> list[AffinePointC]:
    """All affine points of C_N with height(h) <= H, canonically ordered."""
    F = family(N, data_dir).F
    points = []
    for h in _height_box(H):
        y = sqrt_rational(F(h))
        if y is None:
            continue
        if y == 0:
            points.append(AffinePointC(h, y))
        else:
            points.append(AffinePointC(h, -y))
            points.append(AffinePointC(h, y))
    points.sort(key=lambda p: (p.h.denominator, p.h.numerator, p.y))
    return points


def search_X(N: int, H: int, data_dir: Optional[str] = None) -> list[AffinePointX]:
    """All affine points of X_N with height(h) <= H, canonically ordered."""
    fam = family(N, data_dir)
    points = []
    for h in _height_box(H):
        y = sqrt_rational(fam.F(h))
        if y is None:
            continue
        z = sqrt_rational(fam.G(h))
        if z is None:
            continue
        ys = (y,) if y == 0 else (-y, y)
        zs = (z,) if z == 0 else (-z, z)
        for yy in ys:
            for zz in zs:
                points.append(AffinePointX(h, yy, zz))
    points.sort(key=lambda p: (p.h.denominator, p.h.numerator, p.y, p.z))
    return points


def cusp_check(
    N: int, which: str = "C", data_dir: Optional[str] = None
) -> list[dict]:
    """Every stated point of C_N (or X_N) must sit over a cusp: its h must
    be a pole of j_N (for C) or of j_N or j'_N (for X)."""
    fam = family(N, data_dir)
    out = []
    if which == "C":
        if fam.genus_C < 1:
            raise ValueError(f"C_{N} has genus 0: no finite point table to check")
        for h, y in fam.known_points_C:
            ok = fam.j_map.den(h) == 0
            out.append({"point": f"({h},{y})", "h": str(h), "is_cusp": ok, "ok": ok})
    elif which == "X":
        if fam.genus_X is None or fam.genus_X < 1:
            raise ValueError(f"X_{N} has genus 0: no finite point table to check")
        for h, y, z in fam.known_points_X:
            ok = fam.j_map.den(h) == 0 or fam.jprime_map.den(h) == 0
            out.append({"point": f"({h},{y},{z})", "h": str(h), "is_cusp": ok, "ok": ok})
    else:
        raise ValueError("which must be 'C' or 'X'")
    return out


def table_levels_C(data_dir: Optional[str] = None) -> list[int]:
    """Levels whose C_N has positive genus (finite stated point sets)."""
    cat = load_catalog(data_dir)
    return sorted(n for n, fam in cat.families.items() if fam.genus_C >= 1)


def table_levels_X(data_dir: Optional[str] = None) -> list[int]:
    cat = load_catalog(data_dir)
    return sorted(
        n for n, fam in cat.families.items() if fam.genus_X is not None and fam.genus_X >= 1
    )
