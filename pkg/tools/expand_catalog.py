#!/usr/bin/env python3
"""Regenerate the expanded coefficient lines in data/families.txt.

The catalog stores jmap, jpmap, F and G both as factored expressions and
as expanded coefficient lists; the package loader cross-checks the two at
startup.  This script parses the factored strings and rewrites the
``<key>.num.coeffs`` / ``<key>.den.coeffs`` / ``<key>.coeffs`` lines in
place.  Run it after editing any factored entry:

    python tools/expand_catalog.py
"""

from __future__ import annotations

import os
import re
import sys

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, os.path.join(ROOT, "src"))

from squaredisc.polynomials import parse_poly, parse_rational_function  # noqa: E402

CATALOG = os.path.join(ROOT, "src", "squaredisc", "data", "families.txt")

RF_KEYS = ("jmap", "jpmap")
POLY_KEYS = ("F", "G")


def fmt(coeffs) -> str:
    return " ".join(str(c) for c in coeffs) if coeffs else "0"


def main() -> None:
    with open(CATALOG) as fh:
        lines = fh.read().splitlines()

    out: list[str] = []
    for line in lines:
        if re.match(r"\s*(jmap|jpmap|F|G)\.(num\.|den\.)?coeffs\s*=", line):
            continue  # regenerated below
        out.append(line)
        m = re.match(r"\s*(\w+)\s*=\s*(.+?)\s*$", line)
        if not m:
            continue
        key, value = m.group(1), m.group(2)
        if key in RF_KEYS:
            rf = parse_rational_function(value, "h")
            out.append(f"{key}.num.coeffs = {fmt(rf.num.coeffs)}")
            out.append(f"{key}.den.coeffs = {fmt(rf.den.coeffs)}")
        elif key in POLY_KEYS:
            poly = parse_poly(value, "h")
            out.append(f"{key}.coeffs = {fmt(poly.coeffs)}")

    with open(CATALOG, "w") as fh:
        fh.write("\n".join(out) + "\n")
    print(f"rewrote {CATALOG}")


if __name__ == "__main__":
    main()
