"""
Expected root-orbit table: stabilizer types, f(q)/[h]_q and
gcd([h]_q, sum_i q^(d*_i)) for every irreducible finite Coxeter group.

Entries are stored as recipes in bracket notation, e.g.
``[2]_{q^6}/[2]_{q^2}*[7]_{q^2}``, and expanded with exact polynomial
arithmetic when compared.  Nothing here is computed from root data.
"""

from __future__ import annotations

import re

from .qpoly import ONE, IntPoly, exact_div, q_int, q_int_scaled
from .rootsys import GroupType, canonical_types

_FACTOR = re.compile(r"\[(\d+)\]_(?:q|\{q\^(\d+)\})|(1)")


def expand_recipe(recipe: str) -> IntPoly:
    """Expand a product/quotient of [n]_{q^k} factors.

    Each factor is preceded by ``*`` (multiply) or ``/`` (divide); the
    leading factor multiplies.  The division must be exact.
    """
    num, den = ONE, ONE
    pos = 0
    op = "*"
    text = recipe.replace(" ", "")
    while pos < len(text):
        m = _FACTOR.match(text, pos)
        if not m:
            raise ValueError(f"bad recipe {recipe!r} at {text[pos:]!r}")
        if m.group(3):
            f = ONE
        else:
            n = int(m.group(1))
            f = q_int_scaled(n, int(m.group(2))) if m.group(2) else q_int(n)
        if op == "*":
            num = num * f
        else:
            den = den * f
        pos = m.end()
        if pos < len(text):
            op = text[pos]
            if op not in "*/":
                raise ValueError(f"bad operator {op!r} in recipe {recipe!r}")
            pos += 1
    return exact_div(num, den)


def _qk(n: int, k: int = 1) -> str:
    return f"[{n}]_q" if k == 1 else f"[{n}]_{{q^{k}}}"


def expected_rows(t: GroupType) -> dict:
    """Map orbit label -> {"stabilizer", "quotient"} plus the "gcd" recipe."""
    f, n = t.family, t.n
    A1 = canonical_types("A", 1)
    if f == "A":
        # A_{n-1} with n = rank + 1
        rows = {"all": (canonical_types("A", n - 2), _qk(n))}
        gcd = "1"
    elif f in "BC":
        long_ = (A1 + canonical_types("B", n - 2), _qk(n - 1, 2))
        short = (canonical_types("B", n - 1), "1")
        if f == "C":
            long_, short = short, long_
        rows = {"long": long_, "short": short}
        gcd = _qk(n, 2)
    elif f == "D":
        # (1 + q^(n-2)) [n]_q / [2]_q; reading the first factor as [n-2]_{q^2}
        # agrees only at n = 4 and contradicts f = [h]_q sum q^(d*_i) beyond
        rows = {"all": (A1 + canonical_types("D", n - 2), f"{_qk(2, n - 2)}*{_qk(n)}/{_qk(2)}")}
        gcd = "1"
    elif f == "E":
        rows = {
            6: {"all": ([GroupType("A", 5)], f"{_qk(2, 4)}*{_qk(3, 3)}")},
            7: {"all": (canonical_types("D", 6), f"{_qk(2, 6)}/{_qk(2, 2)}*{_qk(7, 2)}")},
            8: {"all": ([GroupType("E", 7)], f"{_qk(2, 10)}*{_qk(4, 6)}")},
        }[n]
        gcd = "1"
    elif f == "F":
        rows = {
            "long": (canonical_types("B", 3), _qk(2, 4)),
            "short": (canonical_types("B", 3), _qk(2, 4)),
        }
        gcd = _qk(2, 6)
    elif f == "H":
        rows = {
            3: {"all": (A1 + A1, _qk(3, 2))},
            4: {"all": ([GroupType("H", 3)], f"{_qk(2, 6)}*{_qk(2, 10)}")},
        }[n]
        gcd = "1"
    elif f == "I":
        if n % 2 == 0:
            rows = {"long": (A1, "1"), "short": (A1, "1")}
            gcd = "1" if (n // 2) % 2 else _qk(2, 2)
        else:
            rows = {"all": ([], _qk(2))}
            gcd = "1"
    else:
        raise ValueError(f"no table row for {t}")
    out = {
        label: {
            "stabilizer": tuple(sorted(stab, key=GroupType.sort_key)),
            "quotient": recipe,
        }
        for label, (stab, recipe) in rows.items()
    }
    out["gcd"] = gcd
    return out


def orbit_description(t: GroupType, label: str) -> str:
    """Plain-text name of a root orbit as it would appear in a table."""
    f = t.family
    if label == "all":
        return "Phi"
    if f in "BC":
        pair, single = "{+-e_i +- e_j}", ("{+-e_i}" if f == "B" else "{+-2e_i}")
        is_pair = (label == "long") == (f == "B")
        return pair if is_pair else single
    return f"{label} roots"
