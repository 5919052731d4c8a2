"""
Root systems of the irreducible finite Coxeter groups, built from Cartan
data by closing the simple roots under the simple reflections.

Conventions: roots are coefficient vectors over the simple roots, and
s_i(alpha_j) = alpha_j - A[i][j] alpha_i, so reflecting a root with
coefficients c changes only c_i, to c_i - sum_j A[i][j] c_j.  The pairing
<alpha, alpha_i^vee> is sum_j A[i][j] c_j.

Crystallographic types use plain ints.  H3, H4 and I2(m) use Scalars in
Q(2cos(pi/M)), with the symmetric Cartan matrix A[i][j] = -2cos(pi/m_ij).
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm, prod
from typing import Iterable, Optional, Sequence

from .qpoly import IntPoly, from_exponents, poly_prod, q_int
from .scalars import FieldSpec, Scalar, make_field, sign, two_cos

DEFAULT_MAX_M = 60
DEFAULT_BFS_BOUND = 10**6


class StructuralError(RuntimeError):
    """An internal consistency check on a root system failed."""


class OracleUnavailable(RuntimeError):
    """The group is too large for brute-force enumeration under the bound."""


# ---------------------------------------------------------------- types

_FAMILY_ORDER = "ABCDEFHI"


@dataclass(frozen=True, order=True)
class GroupType:
    """An irreducible finite Coxeter type.

    ``n`` is the rank, except for family "I" where it is m in I2(m).  Type C
    is stored as family "C"; it shares everything with B except that its
    long and short orbit labels are swapped.
    """

    family: str
    n: int

    def __post_init__(self):
        f, n = self.family, self.n
        ok = (
            (f == "A" and n >= 1)
            or (f in "BC" and n >= 2 and len(f) == 1)
            or (f == "D" and n >= 4)
            or (f == "E" and n in (6, 7, 8))
            or (f == "F" and n == 4)
            or (f == "H" and n in (3, 4))
            or (f == "I" and n >= 5)
        )
        if not ok:
            raise ValueError(f"no irreducible finite Coxeter group of type {f}{n}")

    @property
    def rank(self) -> int:
        return 2 if self.family == "I" else self.n

    @property
    def label(self) -> str:
        if self.family == "I":
            return f"I2({self.n})"
        return f"{self.family}{self.n}"

    @property
    def base(self) -> "GroupType":
        """The B type underlying a C type; itself otherwise."""
        return GroupType("B", self.n) if self.family == "C" else self

    def sort_key(self) -> tuple:
        return (_FAMILY_ORDER.index(self.family), self.n)

    def __str__(self):
        return self.label


def canonical_types(family: str, n: int) -> list:
    """Irreducible components of a possibly degenerate type name.

    A0 and B0 are empty, B1 is A1, D3 is A3, D2 is A1 x A1, I2(3) is A2 and
    I2(4) is B2.
    """
    if family in "AB" and n <= 0 or family == "D" and n <= 1:
        return []
    if family in "BC" and n == 1:
        return [GroupType("A", 1)]
    if family == "D" and n == 2:
        return [GroupType("A", 1), GroupType("A", 1)]
    if family == "D" and n == 3:
        return [GroupType("A", 3)]
    if family == "I":
        if n == 2:
            return [GroupType("A", 1), GroupType("A", 1)]
        if n == 3:
            return [GroupType("A", 2)]
        if n == 4:
            return [GroupType("B", 2)]
    return [GroupType(family, n)]


_TYPE_RE = re.compile(r"^\s*(?:([ABCDEFH])\s*(\d+)|I\s*2\s*\(\s*(\d+)\s*\)|G\s*2)\s*$", re.I)


def parse_type(spec: str, max_m: int = DEFAULT_MAX_M) -> GroupType:
    """Parse "E8", "a5", "C7", "I2(14)"; I2(3) and I2(4) become A2 and B2."""
    m = _TYPE_RE.match(spec)
    if not m:
        raise ValueError(f"cannot parse type {spec!r}; expected e.g. A5, E8, I2(7)")
    if m.group(3) is not None:
        mm = int(m.group(3))
        if mm < 3:
            raise ValueError(f"I2({mm}) is not irreducible")
        if mm > max_m:
            raise ValueError(f"I2({mm}) exceeds the configured ceiling m <= {max_m}")
        (t,) = canonical_types("I", mm)
        return t
    if m.group(1) is None:
        return GroupType("I", 6)
    return GroupType(m.group(1).upper(), int(m.group(2)))


# ---------------------------------------------------------------- data

def _degrees(t: GroupType) -> tuple:
    f, n = t.family, t.n
    if f == "A":
        return tuple(range(2, n + 2))
    if f in "BC":
        return tuple(range(2, 2 * n + 1, 2))
    if f == "D":
        return tuple(sorted(list(range(2, 2 * n - 1, 2)) + [n]))
    if f == "E":
        return {
            6: (2, 5, 6, 8, 9, 12),
            7: (2, 6, 8, 10, 12, 14, 18),
            8: (2, 8, 12, 14, 18, 20, 24, 30),
        }[n]
    if f == "F":
        return (2, 6, 8, 12)
    if f == "H":
        return {3: (2, 6, 10), 4: (2, 12, 20, 30)}[n]
    return (2, n)


def _diagram(t: GroupType) -> list:
    """Edges (i, j, m_ij) with m_ij >= 3, 0-based, Bourbaki numbering."""
    f, n = t.family, t.n
    if f == "A":
        return [(i, i + 1, 3) for i in range(n - 1)]
    if f in "BC":
        return [(i, i + 1, 3) for i in range(n - 2)] + [(n - 2, n - 1, 4)]
    if f == "D":
        return [(i, i + 1, 3) for i in range(n - 2)] + [(n - 3, n - 1, 3)]
    if f == "E":
        return [(0, 2, 3), (1, 3, 3)] + [(i, i + 1, 3) for i in range(2, n - 1)]
    if f == "F":
        return [(0, 1, 3), (1, 2, 4), (2, 3, 3)]
    if f == "H":
        return [(0, 1, 5)] + [(i, i + 1, 3) for i in range(1, n - 1)]
    return [(0, 1, n)]


def _norms(t: GroupType) -> Optional[tuple]:
    f, n = t.family, t.n
    if f in "BC":
        return (2,) * (n - 1) + (1,)
    if f == "F":
        return (2, 2, 1, 1)
    if f in "ADE":
        return (2,) * n
    return None


@dataclass(frozen=True)
class CoxeterDatum:
    group_type: GroupType
    rank: int
    coxeter_matrix: tuple
    cartan: tuple
    gram: tuple
    simple_norms: Optional[tuple]
    degrees: tuple
    scalar_field: Optional[FieldSpec] = field(repr=False)
    crystallographic: bool
    simply_laced: bool
    doubly_laced_at_most: bool

    @property
    def label(self) -> str:
        return self.group_type.label

    @property
    def exponents(self) -> tuple:
        return tuple(d - 1 for d in self.degrees)

    @property
    def codegrees(self) -> tuple:
        return tuple(d - 2 for d in self.degrees)

    @property
    def h(self) -> int:
        return self.degrees[-1]

    @property
    def order(self) -> int:
        return prod(self.degrees)

    @property
    def num_roots(self) -> int:
        return self.h * self.rank

    def zero(self):
        return self.scalar_field.zero() if self.scalar_field else 0

    def one(self):
        return self.scalar_field.one() if self.scalar_field else 1

    def poincare(self) -> IntPoly:
        """prod_i [d_i]_q."""
        return poly_prod(q_int(d) for d in self.degrees)


def build_datum(t: GroupType, max_m: int = DEFAULT_MAX_M) -> CoxeterDatum:
    if t.family == "I" and t.n > max_m:
        raise ValueError(f"I2({t.n}) exceeds the configured ceiling m <= {max_m}")
    ell = t.rank
    edges = _diagram(t)
    mat = [[1 if i == j else 2 for j in range(ell)] for i in range(ell)]
    for i, j, m in edges:
        mat[i][j] = mat[j][i] = m
    cryst = t.family in "ABCDEF"
    norms = _norms(t)
    if cryst:
        fspec = None
        gram = [[Fraction(0)] * ell for _ in range(ell)]
        for i in range(ell):
            gram[i][i] = Fraction(norms[i])
        for i, j, m in edges:
            # (a_i, a_j) = -sqrt(|a_i|^2 |a_j|^2) cos(pi/m)
            a, b = norms[i], norms[j]
            if m == 3 and a == b:
                g = Fraction(-a, 2)
            elif m == 4 and {a, b} == {1, 2}:
                g = Fraction(-1)
            else:
                raise StructuralError(f"{t}: bond {m} between norms {a}, {b}")
            gram[i][j] = gram[j][i] = g
        cartan = [[0] * ell for _ in range(ell)]
        for i in range(ell):
            for j in range(ell):
                a = 2 * gram[i][j] / gram[i][i]
                if a.denominator != 1:
                    raise StructuralError(f"non-integral Cartan entry in {t}")
                cartan[i][j] = int(a)
    else:
        M = max(max(row) for row in mat)
        fspec = make_field(M)
        cartan = [
            [fspec.from_rational(2) if i == j else -two_cos(fspec, mat[i][j]) for j in range(ell)]
            for i in range(ell)
        ]
        gram = [[a * _HALF for a in row] for row in cartan]
    degrees = _degrees(t)
    datum = CoxeterDatum(
        group_type=t,
        rank=ell,
        coxeter_matrix=tuple(map(tuple, mat)),
        cartan=tuple(map(tuple, cartan)),
        gram=tuple(map(tuple, gram)),
        simple_norms=norms,
        degrees=degrees,
        scalar_field=fspec,
        crystallographic=cryst,
        simply_laced=all(m <= 3 for row in mat for m in row),
        doubly_laced_at_most=all(m <= 4 for row in mat for m in row),
    )
    _validate_datum(datum)
    return datum


_HALF = Fraction(1, 2)


def _validate_datum(d: CoxeterDatum) -> None:
    ell = d.rank
    if len(d.degrees) != ell or list(d.degrees) != sorted(d.degrees):
        raise StructuralError(f"{d.label}: bad degree list {d.degrees}")
    e = d.exponents
    for i in range(ell):
        if d.h - e[i] != e[ell - 1 - i]:
            raise StructuralError(f"{d.label}: exponents {e} fail h - e_i = e_(l+1-i)")
    A = d.cartan
    for i in range(ell):
        for j in range(ell):
            if (A[i][j] == 0) != (A[j][i] == 0):
                raise StructuralError(f"{d.label}: Cartan zero pattern not symmetric")
            if d.coxeter_matrix[i][j] != d.coxeter_matrix[j][i]:
                raise StructuralError(f"{d.label}: Coxeter matrix not symmetric")
    if not d.crystallographic:
        for i in range(ell):
            for j in range(ell):
                if A[i][j] != A[j][i]:
                    raise StructuralError(f"{d.label}: Cartan matrix not symmetric")


# ---------------------------------------------------------------- roots

@dataclass
class Orbit:
    members: tuple
    dominant: int
    label: str
    stabilizer: tuple = ()
    stabilizer_type: tuple = ()
    distances: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.members)


@dataclass
class RootSystem:
    datum: CoxeterDatum
    roots: list
    positive: list
    heights: Optional[list]
    tables: list
    index: dict
    orbits: list = field(default_factory=list)

    @property
    def label(self) -> str:
        return self.datum.label

    def __len__(self):
        return len(self.roots)

    def pairing(self, k: int, i: int):
        """<alpha_k, alpha_i^vee>."""
        row = self.datum.cartan[i]
        c = self.roots[k]
        acc = 0
        for j, a in enumerate(row):
            if a != 0 and c[j] != 0:
                acc = acc + a * c[j]
        return acc

    def orbit_by_label(self, label: str) -> Orbit:
        for o in self.orbits:
            if o.label == label:
                return o
        raise KeyError(label)

    def highest_root(self) -> int:
        if self.heights is None:
            raise ValueError(f"{self.label} is not crystallographic; heights are undefined")
        top = max(self.heights)
        found = [k for k, ht in enumerate(self.heights) if ht == top]
        if len(found) != 1:
            raise StructuralError(f"{self.label}: {len(found)} roots of maximal height")
        return found[0]

    def to_json(self) -> dict:
        d = self.datum

        def enc(x):
            return x.to_json() if isinstance(x, Scalar) else x

        return {
            "type": d.label,
            "rank": d.rank,
            "h": d.h,
            "degrees": list(d.degrees),
            "roots": [
                {
                    "coords": [enc(x) for x in r],
                    "positive": self.positive[k],
                    "height": self.heights[k] if self.heights is not None else None,
                }
                for k, r in enumerate(self.roots)
            ],
            "orbits": [
                {
                    "dominant": o.dominant,
                    "stabilizer": list(o.stabilizer),
                    "stabilizer_type": [t.label for t in o.stabilizer_type],
                    "label": o.label,
                    "distances": [o.distances[k] for k in range(len(self.roots)) if k in o.distances],
                    "members": list(o.members),
                }
                for o in self.orbits
            ],
        }


def _reflect(cartan_rows: list, c: tuple, i: int) -> tuple:
    acc = 0
    for j, a in cartan_rows[i]:
        if c[j] != 0:
            acc = acc + a * c[j]
    if acc == 0:
        return c
    out = list(c)
    out[i] = c[i] - acc
    return tuple(out)


def _sparse_rows(datum: CoxeterDatum) -> list:
    return [[(j, a) for j, a in enumerate(row) if a != 0] for row in datum.cartan]


def _root_sign(c: Sequence) -> int:
    signs = {sign(x) for x in c} - {0}
    if len(signs) != 1:
        raise StructuralError(f"root {c} has coefficients of mixed sign")
    return signs.pop()


def generate_roots(datum: CoxeterDatum) -> RootSystem:
    ell = datum.rank
    zero, one = datum.zero(), datum.one()
    rows = _sparse_rows(datum)
    simple = [tuple(one if j == i else zero for j in range(ell)) for i in range(ell)]
    found = list(simple)
    seen = set(found)
    queue = deque(found)
    while queue:
        c = queue.popleft()
        for i in range(ell):
            s = _reflect(rows, c, i)
            if s not in seen:
                seen.add(s)
                found.append(s)
                queue.append(s)
                if len(found) > 4 * datum.num_roots:
                    raise StructuralError(f"{datum.label}: root closure does not terminate")
    if len(found) != datum.num_roots:
        raise StructuralError(
            f"{datum.label}: closure has {len(found)} roots, expected h*l = {datum.num_roots}"
        )
    pos = [c for c in found if _root_sign(c) > 0]
    roots = pos + [tuple(-x for x in c) for c in pos]
    index = {c: k for k, c in enumerate(roots)}
    if len(index) != len(found) or set(index) != seen:
        raise StructuralError(f"{datum.label}: roots not closed under negation")
    tables = [tuple(index[_reflect(rows, c, i)] for c in roots) for i in range(ell)]
    heights = [sum(c) for c in roots] if datum.crystallographic else None
    rs = RootSystem(
        datum=datum,
        roots=roots,
        positive=[k < len(pos) for k in range(len(roots))],
        heights=heights,
        tables=tables,
        index=index,
    )
    return rs


def squared_length(rs: RootSystem, k: int):
    c = rs.roots[k]
    G = rs.datum.gram
    acc = 0
    for i, a in enumerate(c):
        if a != 0:
            for j, b in enumerate(c):
                if b != 0 and G[i][j] != 0:
                    acc = acc + a * G[i][j] * b
    return acc


def orbit_partition(rs: RootSystem) -> list:
    """Split the roots into W-orbits and pick the dominant member of each."""
    n = len(rs.roots)
    comp = [-1] * n
    groups = []
    for start in range(n):
        if comp[start] >= 0:
            continue
        cid = len(groups)
        comp[start] = cid
        members = [start]
        stack = [start]
        while stack:
            k = stack.pop()
            for t in rs.tables:
                j = t[k]
                if comp[j] < 0:
                    comp[j] = cid
                    members.append(j)
                    stack.append(j)
        groups.append(sorted(members))
    ell = rs.datum.rank
    orbits = []
    for members in groups:
        dom = [k for k in members if all(sign(rs.pairing(k, i)) >= 0 for i in range(ell))]
        if len(dom) != 1:
            raise StructuralError(f"{rs.label}: orbit with {len(dom)} dominant roots")
        orbits.append(Orbit(members=tuple(members), dominant=dom[0], label="all"))
    if len(orbits) == 2:
        if rs.datum.crystallographic:
            lens = [squared_length(rs, o.dominant) for o in orbits]
            if lens[0] == lens[1]:
                raise StructuralError(f"{rs.label}: two orbits of equal length")
            long_first = lens[0] > lens[1]
        else:
            # equal lengths in I2(m); the orbit of alpha_1 is called long
            long_first = 0 in orbits[0].members
        if rs.datum.group_type.family == "C":
            long_first = not long_first
        orbits[0].label, orbits[1].label = ("long", "short") if long_first else ("short", "long")
        orbits.sort(key=lambda o: o.label)
    elif len(orbits) > 2:
        raise StructuralError(f"{rs.label}: {len(orbits)} root orbits")
    return orbits


def stabilizer_simples(rs: RootSystem, orbit: Orbit) -> tuple:
    """Simple reflections fixing the dominant root; checked by orbit-stabilizer."""
    k = orbit.dominant
    J = tuple(i for i in range(rs.datum.rank) if rs.pairing(k, i) == 0)
    sub = classify_parabolic(rs.datum, J)
    wj = prod(prod(_degrees(t)) for t in sub)
    if len(orbit) * wj != rs.datum.order:
        raise StructuralError(
            f"{rs.label}: |orbit| * |W_J| = {len(orbit)} * {wj} != |W| = {rs.datum.order}"
        )
    return J


def classify_parabolic(datum: CoxeterDatum, J: Iterable[int]) -> tuple:
    """Irreducible components of the standard parabolic W_J, sorted."""
    J = sorted(set(J))
    mat = datum.coxeter_matrix
    if any(j < 0 or j >= datum.rank for j in J):
        raise ValueError(f"simple index out of range in {J}")
    left = set(J)
    out = []
    while left:
        start = min(left)
        comp = {start}
        stack = [start]
        while stack:
            a = stack.pop()
            for b in list(left):
                if b not in comp and mat[a][b] >= 3:
                    comp.add(b)
                    stack.append(b)
        left -= comp
        out.extend(_classify_component(sorted(comp), mat))
    return tuple(sorted(out, key=GroupType.sort_key))


def _classify_component(nodes: list, mat) -> list:
    r = len(nodes)
    edges = [(a, b, mat[a][b]) for ia, a in enumerate(nodes) for b in nodes[ia + 1:] if mat[a][b] >= 3]
    if len(edges) != r - 1:
        raise StructuralError(f"parabolic component {nodes} is not a tree")
    if r == 1:
        return canonical_types("A", 1)
    if r == 2:
        return canonical_types("I", edges[0][2])
    deg = {v: 0 for v in nodes}
    for a, b, _ in edges:
        deg[a] += 1
        deg[b] += 1
    branch = [v for v in nodes if deg[v] >= 3]
    big = [e for e in edges if e[2] > 3]
    if not big and not branch:
        return canonical_types("A", r)
    if not big and len(branch) == 1 and deg[branch[0]] == 3:
        arms = sorted(_arm_length(branch[0], nb, edges) for nb in _neighbours(branch[0], edges))
        if arms[0] == 1 and arms[1] == 1:
            return canonical_types("D", r)
        if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
            return [GroupType("E", r)]
    if len(big) == 1 and not branch:
        a, b, m = big[0]
        at_end = deg[a] == 1 or deg[b] == 1
        if m == 4 and at_end:
            return canonical_types("B", r)
        if m == 4 and r == 4:
            return [GroupType("F", 4)]
        if m == 5 and at_end and r in (3, 4):
            return [GroupType("H", r)]
    raise StructuralError(f"unclassifiable parabolic component on nodes {nodes}")


def _neighbours(v: int, edges: list) -> list:
    return [b if a == v else a for a, b, _ in edges if v in (a, b)]


def _arm_length(root: int, first: int, edges: list) -> int:
    prev, cur, n = root, first, 1
    while True:
        nxt = [w for w in _neighbours(cur, edges) if w != prev]
        if not nxt:
            return n
        prev, cur, n = cur, nxt[0], n + 1


def distances(rs: RootSystem, orbit: Orbit) -> dict:
    """Breadth-first distance from the dominant root inside its orbit."""
    dist = {orbit.dominant: 0}
    queue = deque([orbit.dominant])
    while queue:
        k = queue.popleft()
        for t in rs.tables:
            j = t[k]
            if j not in dist:
                dist[j] = dist[k] + 1
                queue.append(j)
    if set(dist) != set(orbit.members):
        raise StructuralError(f"{rs.label}: orbit not connected by simple reflections")
    return dist


def mv_formula(rs: RootSystem, k: int) -> int:
    """Height prediction for d(alpha_0, alpha) in simply-laced types."""
    if not rs.datum.simply_laced:
        raise ValueError(f"{rs.label} is not simply-laced")
    top = rs.heights[rs.highest_root()]
    gap = top - rs.heights[k]
    return gap if rs.positive[k] else gap - 1


def height_poly(rs: RootSystem) -> IntPoly:
    if not rs.datum.crystallographic:
        raise ValueError(f"{rs.label} is not crystallographic; heights are undefined")
    return from_exponents(ht for k, ht in enumerate(rs.heights) if rs.positive[k])


# ---------------------------------------------------------------- Coxeter element

@dataclass(frozen=True)
class CoxPermutation:
    perm: tuple
    order: int
    cycles: tuple

    def power(self, m: int) -> tuple:
        n = len(self.perm)
        out = list(range(n))
        for cyc in self.cycles:
            L = len(cyc)
            for a, k in enumerate(cyc):
                out[k] = cyc[(a + m) % L]
        return tuple(out)

    def fixed_points(self, m: int, subset: Optional[Iterable[int]] = None) -> int:
        """Number of points (of ``subset``, default all) fixed by perm^m."""
        lengths = {}
        for cyc in self.cycles:
            for k in cyc:
                lengths[k] = len(cyc)
        pts = range(len(self.perm)) if subset is None else subset
        return sum(1 for k in pts if m % lengths[k] == 0)


def _cycles(perm: Sequence[int]) -> tuple:
    seen = [False] * len(perm)
    out = []
    for s in range(len(perm)):
        if seen[s]:
            continue
        cyc = []
        k = s
        while not seen[k]:
            seen[k] = True
            cyc.append(k)
            k = perm[k]
        out.append(tuple(cyc))
    return tuple(out)


def coxeter_permutation(rs: RootSystem, order: Optional[Sequence[int]] = None) -> CoxPermutation:
    """Permutation of root indices induced by s_{o1} s_{o2} ... (rightmost acts first)."""
    word = list(range(rs.datum.rank)) if order is None else list(order)
    p = list(range(len(rs.roots)))
    for i in reversed(word):
        t = rs.tables[i]
        p = [t[x] for x in p]
    cycles = _cycles(p)
    ordr = 1
    for c in cycles:
        ordr = lcm(ordr, len(c))
    return CoxPermutation(tuple(p), ordr, cycles)


def coxeter_element(rs: RootSystem) -> CoxPermutation:
    c = coxeter_permutation(rs)
    h = rs.datum.h
    if c.order != h:
        raise StructuralError(f"{rs.label}: Coxeter element has order {c.order}, expected {h}")
    short = [len(cy) for cy in c.cycles if len(cy) != h]
    if short:
        raise StructuralError(f"{rs.label}: Coxeter element has cycles of length {sorted(set(short))}")
    return c


def reflection_matrix(datum: CoxeterDatum, i: int) -> list:
    """Matrix of s_i on the simple-root basis; column j holds s_i(alpha_j)."""
    ell = datum.rank
    M = [[1 if r == j else 0 for j in range(ell)] for r in range(ell)]
    for j in range(ell):
        M[i][j] = M[i][j] - datum.cartan[i][j]
    return M


def mat_mul(X: list, Y: list) -> list:
    n, k, m = len(X), len(Y), len(Y[0])
    out = []
    for r in range(n):
        row = []
        for c in range(m):
            acc = 0
            for t in range(k):
                if X[r][t] != 0 and Y[t][c] != 0:
                    acc = acc + X[r][t] * Y[t][c]
            row.append(acc)
        out.append(row)
    return out


def coxeter_matrix_of(datum: CoxeterDatum) -> list:
    ell = datum.rank
    C = [[1 if r == c else 0 for c in range(ell)] for r in range(ell)]
    for i in range(ell):
        C = mat_mul(C, reflection_matrix(datum, i))
    return C


def coxeter_power_trace(rs_or_datum, m: int):
    """Trace of c^m acting on V, for c = s_1 s_2 ... s_l."""
    datum = rs_or_datum.datum if isinstance(rs_or_datum, RootSystem) else rs_or_datum
    ell = datum.rank
    C = coxeter_matrix_of(datum)
    P = [[1 if r == c else 0 for c in range(ell)] for r in range(ell)]
    for _ in range(m % datum.h):
        P = mat_mul(P, C)
    acc = 0
    for r in range(ell):
        acc = acc + P[r][r]
    return acc


# ---------------------------------------------------------------- Poincare polynomials

def parabolic_poincare(types: Iterable[GroupType]) -> IntPoly:
    """prod over components of prod_i [d_i]_q."""
    return poly_prod(q_int(d) for t in types for d in _degrees(t))


def poincare_bfs(rs_or_datum, J: Optional[Iterable[int]] = None, bound: int = DEFAULT_BFS_BOUND) -> IntPoly:
    """Length generating function of W_J by enumerating the group.

    Elements are tracked through the orbit of a point lambda with
    <lambda, alpha_i^vee> = 1 for i in J and 0 otherwise, which W_J moves
    freely.  Left multiplication by s_i raises the length exactly when the
    i-th pairing of the current point is positive, so breadth-first layers
    are the length classes.
    """
    datum = rs_or_datum.datum if isinstance(rs_or_datum, RootSystem) else rs_or_datum
    ell = datum.rank
    J = tuple(range(ell)) if J is None else tuple(sorted(set(J)))
    size = prod(prod(_degrees(t)) for t in classify_parabolic(datum, J))
    if size > bound:
        raise OracleUnavailable(f"|W_J| = {size} exceeds the enumeration bound {bound}")
    zero, one = datum.zero(), datum.one()
    A = datum.cartan
    # s_i(lambda)_j = lambda_j - lambda_i * A[j][i]
    moves = {i: [(j, A[j][i]) for j in range(ell) if j != i and A[j][i] != 0] for i in J}
    start = tuple(one if i in J else zero for i in range(ell))
    # integer pairings compare directly; the sign() call dominates otherwise
    positive = (lambda x: x > 0) if datum.crystallographic else (lambda x: sign(x) > 0)
    steps = [(i, moves[i]) for i in J]
    counts = []
    layer = {start}
    total = 0
    while layer:
        counts.append(len(layer))
        total += len(layer)
        if total > size:
            raise StructuralError(f"{datum.label}: enumeration overran |W_J| = {size}")
        nxt = set()
        add = nxt.add
        for lam in layer:
            for i, mv in steps:
                li = lam[i]
                if positive(li):
                    new = list(lam)
                    new[i] = -li
                    for j, a in mv:
                        new[j] -= li * a
                    add(tuple(new))
        layer = nxt
    if total != size:
        raise StructuralError(f"{datum.label}: enumerated {total} elements of W_J, expected {size}")
    return IntPoly(counts)


# ---------------------------------------------------------------- assembly

@lru_cache(maxsize=None)
def root_system(t: GroupType, max_m: int = DEFAULT_MAX_M) -> RootSystem:
    """Fully populated root system: roots, orbits, stabilizers, distances."""
    rs = generate_roots(build_datum(t, max_m=max_m))
    for o in orbit_partition(rs):
        o.stabilizer = stabilizer_simples(rs, o)
        o.stabilizer_type = classify_parabolic(rs.datum, o.stabilizer)
        o.distances = distances(rs, o)
        rs.orbits.append(o)
    return rs
