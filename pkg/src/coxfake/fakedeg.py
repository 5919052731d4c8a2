"""
Fake degrees of the permutation action of W on unions of root orbits, and
the checks built on them.

Two independent routes compute the same polynomial: summing q^d(alpha_0,
alpha) over breadth-first distances in the root graph, and dividing the
Poincare polynomial prod [d_i]_q of W by that of the stabilizer of the
dominant root.  When the group is small enough a third route enumerates
W and W_J outright.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .qpoly import (
    ONE,
    Q,
    ZERO,
    DivisibilityError,
    IntPoly,
    divides,
    eval_at_root_of_unity,
    exact_div,
    format_poly,
    from_exponents,
    gcd_primitive,
    poly_sum,
    q_int,
)
from .rootsys import (
    DEFAULT_BFS_BOUND,
    DEFAULT_MAX_M,
    GroupType,
    OracleUnavailable,
    Orbit,
    RootSystem,
    StructuralError,
    coxeter_element,
    coxeter_permutation,
    coxeter_power_trace,
    height_poly,
    mv_formula,
    parabolic_poincare,
    poincare_bfs,
    root_system,
)
from .table import expand_recipe, expected_rows

Selector = Union[str, tuple, list]


class InvalidSelector(ValueError):
    pass


@dataclass
class Outcome:
    """Result of one check; falsy when the check failed."""

    passed: bool
    witness: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed


# ---------------------------------------------------------------- selectors

def resolve(rs: RootSystem, sel: Selector) -> list:
    """Orbits picked out by "all", "long", "short" or a sequence of labels."""
    labels = [o.label for o in rs.orbits]
    if isinstance(sel, str):
        if sel == "all":
            return list(rs.orbits)
        wanted = [sel]
    else:
        wanted = list(sel)
        if not wanted:
            raise InvalidSelector("empty orbit selection")
    out = []
    for w in wanted:
        if w not in labels:
            raise InvalidSelector(
                f"{rs.label} has no {w!r} root orbit (orbits: {', '.join(labels)})"
            )
        o = rs.orbit_by_label(w)
        if o not in out:
            out.append(o)
    return sorted(out, key=lambda o: labels.index(o.label))


def selectors(rs: RootSystem) -> list:
    """Every nonempty W-stable root subset, named: each orbit, then "all"."""
    names = [o.label for o in rs.orbits]
    if len(names) > 1:
        names.append("all")
    return names


def codegree_poly(rs: RootSystem) -> IntPoly:
    return from_exponents(rs.datum.codegrees)


def exponent_poly(rs: RootSystem) -> IntPoly:
    return from_exponents(rs.datum.exponents)


# ---------------------------------------------------------------- fake degrees

def fakedeg_bfs(rs: RootSystem, sel: Selector = "all") -> IntPoly:
    return poly_sum(from_exponents(o.distances.values()) for o in resolve(rs, sel))


def orbit_quotient(rs: RootSystem, o: Orbit) -> IntPoly:
    try:
        return exact_div(rs.datum.poincare(), parabolic_poincare(o.stabilizer_type))
    except DivisibilityError as exc:
        raise StructuralError(f"{rs.label}: Poincare quotient not exact for {o.label}") from exc


def fakedeg_quotient(rs: RootSystem, sel: Selector = "all") -> IntPoly:
    return poly_sum(orbit_quotient(rs, o) for o in resolve(rs, sel))


_ENUMERATED: dict = {}


def _enumerated_poincare(rs: RootSystem, J: tuple, bound: int) -> IntPoly:
    key = (rs.datum.group_type, J)
    if key not in _ENUMERATED:
        # refusals are not cached; a later call may carry a larger bound
        _ENUMERATED[key] = poincare_bfs(rs, J, bound=bound)
    return _ENUMERATED[key]


def group_bfs_quotient(rs: RootSystem, sel: Selector = "all", bound: int = DEFAULT_BFS_BOUND) -> IntPoly:
    """Same quotient with both Poincare polynomials found by enumeration."""
    full = _enumerated_poincare(rs, tuple(range(rs.datum.rank)), bound)
    parts = []
    for o in resolve(rs, sel):
        sub = _enumerated_poincare(rs, tuple(o.stabilizer), bound)
        parts.append(exact_div(full, sub))
    return poly_sum(parts)


def crosscheck(rs: RootSystem, sel: Selector = "all", bound: int = DEFAULT_BFS_BOUND) -> Outcome:
    a = fakedeg_bfs(rs, sel)
    b = fakedeg_quotient(rs, sel)
    w = {"bfs": a, "quotient": b}
    ok = a == b
    try:
        c = group_bfs_quotient(rs, sel, bound)
        w["group_bfs"] = c
        ok = ok and a == c
    except OracleUnavailable:
        w["group_bfs"] = None
    return Outcome(ok, w)


# ---------------------------------------------------------------- claims

def verify_thm_i(rs: RootSystem, sel: Selector = "all") -> Outcome:
    f = fakedeg_bfs(rs, sel)
    try:
        quo = exact_div(f, q_int(rs.datum.h))
    except DivisibilityError:
        return Outcome(False, {"f": f, "h": rs.datum.h})
    return Outcome(True, {"quotient": quo})


def thm_ii_identity(rs: RootSystem) -> Outcome:
    """Compare f^Phi with [h]_q * sum q^(d*_i), whatever the type."""
    f = fakedeg_bfs(rs, "all")
    rhs = q_int(rs.datum.h) * codegree_poly(rs)
    return Outcome(f == rhs, {"f": f, "expected": rhs})


def verify_thm_ii(rs: RootSystem) -> Outcome:
    if not rs.datum.simply_laced:
        raise ValueError(f"{rs.label} is not simply-laced")
    return thm_ii_identity(rs)


def csp_check(rs: RootSystem, sel: Selector = "all") -> Outcome:
    """f(zeta_h^m) equals the number of selected roots fixed by c^m, all m."""
    h = rs.datum.h
    f = fakedeg_bfs(rs, sel)
    c = coxeter_permutation(rs)
    members = [k for o in resolve(rs, sel) for k in o.members]
    for m in range(h):
        val = eval_at_root_of_unity(f, h, m)
        fixed = c.fixed_points(m, members)
        if not val.is_integer or val.value != fixed:
            return Outcome(False, {"m": m, "value": val.rep, "fixed_points": fixed})
    return Outcome(True)


def verify_lemma_mv(rs: RootSystem) -> Outcome:
    if not rs.datum.simply_laced:
        raise ValueError(f"{rs.label} is not simply-laced")
    (o,) = rs.orbits
    if o.dominant != rs.highest_root():
        return Outcome(False, {"dominant": o.dominant, "highest": rs.highest_root()})
    for k in o.members:
        if o.distances[k] != mv_formula(rs, k):
            return Outcome(False, {"root": k, "bfs": o.distances[k], "formula": mv_formula(rs, k)})
    return Outcome(True)


def verify_height_identity(rs: RootSystem) -> Outcome:
    lhs = height_poly(rs)
    rhs = poly_sum(from_exponents(range(1, e + 1)) for e in rs.datum.exponents)
    return Outcome(lhs == rhs, {"heights": lhs, "exponents": rhs})


def table_row(rs: RootSystem, sel: Selector = "all") -> dict:
    """Computed quotient f/[h]_q and the gcd column."""
    f = fakedeg_bfs(rs, sel)
    h = rs.datum.h
    return {
        "quotient": exact_div(f, q_int(h)),
        "gcd": gcd_primitive(q_int(h), codegree_poly(rs)),
    }


def verify_table_orbit(rs: RootSystem, o: Orbit) -> Outcome:
    exp = expected_rows(rs.datum.group_type)[o.label]
    got = table_row(rs, o.label)["quotient"]
    want = expand_recipe(exp["quotient"])
    ok = got == want and tuple(o.stabilizer_type) == exp["stabilizer"]
    return Outcome(ok, {
        "quotient": got,
        "expected": want,
        "recipe": exp["quotient"],
        "stabilizer": [t.label for t in o.stabilizer_type],
        "expected_stabilizer": [t.label for t in exp["stabilizer"]],
    })


def verify_table_gcd(rs: RootSystem) -> Outcome:
    recipe = expected_rows(rs.datum.group_type)["gcd"]
    got = table_row(rs, rs.orbits[0].label)["gcd"]
    want = expand_recipe(recipe)
    return Outcome(got == want, {"gcd": got, "expected": want, "recipe": recipe})


def verify_prop_gcd_one(rs: RootSystem) -> Outcome:
    """gcd([h]_q, sum q^(d*_i)) = 1 and, separately, tr(c^m) != 0 for 0 <= m < h."""
    if len(rs.orbits) != 1:
        raise ValueError(f"{rs.label} has {len(rs.orbits)} root orbits")
    g = gcd_primitive(q_int(rs.datum.h), codegree_poly(rs))
    zero_traces = [m for m in range(rs.datum.h) if coxeter_power_trace(rs, m) == 0]
    gcd_ok, trace_ok = g == ONE, not zero_traces
    return Outcome(gcd_ok and trace_ok, {
        "gcd": g,
        "zero_trace_powers": zero_traces,
        "sides_agree": gcd_ok == trace_ok,
    })


def verify_prop_doubly_laced(rs: RootSystem, sel: Optional[Selector] = None) -> Outcome:
    """sum q^(d*_i) divides f for the given selection, or for every union of orbits."""
    if not rs.datum.doubly_laced_at_most:
        raise ValueError(f"{rs.label} has a bond label above 4")
    g = codegree_poly(rs)
    for s in ([sel] if sel is not None else selectors(rs)):
        f = fakedeg_bfs(rs, s)
        if not divides(g, f):
            return Outcome(False, {"selector": s, "f": f, "divisor": g})
    return Outcome(True)


def sym_antisym(rs: RootSystem, sel: str) -> tuple:
    """(f_plus, f_minus) for a single orbit, with f_plus = f/(1+q)."""
    orbits = resolve(rs, sel)
    if len(orbits) != 1:
        raise InvalidSelector("the symmetric/antisymmetric split needs a single orbit")
    f = fakedeg_bfs(rs, sel)
    f_plus = exact_div(f, q_int(2))
    return f_plus, Q * f_plus


def verify_prop_sym(rs: RootSystem, sel: str) -> Outcome:
    f = fakedeg_bfs(rs, sel)
    try:
        fp, fm = sym_antisym(rs, sel)
    except DivisibilityError:
        return Outcome(False, {"f": f, "divisor": q_int(2)})
    return Outcome(fp + fm == f and fm == Q * fp, {"f_plus": fp, "f_minus": fm})


def f_U(rs: RootSystem) -> IntPoly:
    """f_minus minus the fake degree of the reflection representation."""
    _, fm = sym_antisym(rs, rs.orbits[0].label)
    return fm - exponent_poly(rs)


def verify_fU(rs: RootSystem) -> Outcome:
    if not rs.datum.simply_laced:
        raise ValueError(f"{rs.label} is not simply-laced")
    d = rs.datum
    fu = f_U(rs)
    # [h-2]_q with [0]_q = 0, cleared of the [2]_q denominator
    hm2 = q_int(d.h - 2) if d.h > 2 else ZERO
    lhs = q_int(2) * fu
    rhs = Q * Q * hm2 * exponent_poly(rs)
    dim = fu(1)
    want_dim = (d.h - 2) * d.rank // 2
    ok = lhs == rhs and dim == want_dim and dim == d.num_roots // 2 - d.rank
    return Outcome(ok, {"f_U": fu, "lhs": lhs, "rhs": rhs, "dim": dim, "expected_dim": want_dim})


# ---------------------------------------------------------------- report

@dataclass
class Claim:
    id: str
    ref: str
    status: str
    witness: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"id": self.id, "ref": self.ref, "status": self.status}
        if self.witness:
            out["witness"] = {k: _jsonable(v) for k, v in self.witness.items()}
        return out


def _jsonable(v):
    if isinstance(v, IntPoly):
        return v.to_json()
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


@dataclass
class VerificationReport:
    type: str
    claims: list = field(default_factory=list)

    @property
    def failures(self) -> list:
        return [c for c in self.claims if c.status == "fail"]

    @property
    def passed(self) -> bool:
        return not self.failures

    def status(self, claim_id: str) -> str:
        for c in self.claims:
            if c.id == claim_id:
                return c.status
        raise KeyError(claim_id)

    def to_json(self) -> dict:
        return {"type": self.type, "claims": [c.to_json() for c in self.claims]}

    def to_text(self) -> str:
        counts = {k: sum(1 for c in self.claims if c.status == k) for k in ("pass", "fail", "n/a")}
        lines = [f"{self.type}: {counts['pass']} pass, {counts['fail']} fail, {counts['n/a']} not applicable"]
        for c in self.claims:
            lines.append(f"  {c.status.upper():4} {c.id:24} {c.ref}")
            if c.status == "fail":
                for k, v in c.witness.items():
                    lines.append(f"         {k}: {format_poly(v) if isinstance(v, IntPoly) else v}")
        return "\n".join(lines)


REFS = {
    "cardinality": "number of roots equals h * rank",
    "exponents": "h - e_i = e_(l+1-i) and sum of exponents = number of positive roots",
    "eq3.2": "sum over positive roots of q^height = sum_i (q + ... + q^e_i)",
    "highest_root": "highest root has height h - 1",
    "coxeter": "Coxeter element has order h and acts freely on the roots",
    "coxeter.conjugate": "another Coxeter element has the same cycle type on roots",
    "poincare": "enumerated length generating function of W equals prod_i [d_i]_q",
    "orbit_stabilizer": "|orbit| * |W_J| = |W| for the simple stabilizer J of the dominant root",
    "methods": "distance sum equals Poincare quotient (and group enumeration when in bound)",
    "additivity": "fake degree of the union equals the sum over orbits",
    "table": "f/[h]_q and stabilizer type match the expected table entry",
    "table.gcd": "gcd([h]_q, sum q^codegree) matches the expected table entry",
    "thm1i": "[h]_q divides the fake degree",
    "lemma2.1": "f(zeta_h^m) counts roots fixed by c^m for every m",
    "prop4.2": "sum q^codegree divides the fake degree",
    "prop5.1": "(1+q) divides f, with f = f_plus + f_minus and f_minus = q * f_plus",
    "thm1ii": "f = [h]_q * sum_i q^codegree_i",
    "lemma3.2": "distance from the highest root equals the height formula",
    "fU": "[2]_q f_U = q^2 [h-2]_q sum q^e_i and f_U(1) = (h-2) l / 2",
    "prop4.1": "gcd([h]_q, sum q^codegree) = 1 and tr(c^m) != 0 for 0 <= m < h",
}


def _run(check, *args) -> tuple:
    try:
        out = check(*args)
    except (StructuralError, DivisibilityError) as exc:
        return "fail", {"error": str(exc)}
    if isinstance(out, Outcome):
        return ("pass" if out.passed else "fail"), ({} if out.passed else out.witness)
    return ("pass" if out else "fail"), {}


def verify_all(t: GroupType, bound: int = DEFAULT_BFS_BOUND, max_m: int = DEFAULT_MAX_M) -> VerificationReport:
    """Run every applicable check for one type; failures are recorded, never raised."""
    report = VerificationReport(t.label)

    def add(cid: str, ref_key: str, status: str, witness: Optional[dict] = None):
        report.claims.append(Claim(cid, REFS[ref_key], status, witness or {}))

    def check(cid: str, ref_key: str, fn, *args):
        status, w = _run(fn, *args)
        add(cid, ref_key, status, w)

    def na(cid: str, ref_key: str, why: str):
        add(cid, ref_key, "n/a", {"reason": why})

    try:
        rs = root_system(t, max_m)
    except (StructuralError, DivisibilityError) as exc:
        add("cardinality", "cardinality", "fail", {"error": str(exc)})
        return report
    d = rs.datum
    cryst, sl = d.crystallographic, d.simply_laced
    multi = len(rs.orbits) > 1

    check("cardinality", "cardinality",
          lambda: len(rs.roots) == d.h * d.rank and sum(rs.positive) == d.h * d.rank // 2)
    check("exponents.duality", "exponents",
          lambda: all(d.h - e == f for e, f in zip(d.exponents, reversed(d.exponents)))
          and sum(d.exponents) == sum(rs.positive))
    if cryst:
        check("eq3.2", "eq3.2", verify_height_identity, rs)
        check("highest_root", "highest_root", lambda: rs.heights[rs.highest_root()] == d.h - 1)
    else:
        na("eq3.2", "eq3.2", "heights need a crystallographic root system")
        na("highest_root", "highest_root", "heights need a crystallographic root system")
    check("coxeter.free", "coxeter", lambda: coxeter_element(rs) is not None)
    check("coxeter.conjugate", "coxeter.conjugate", _conjugate_cycle_type, rs)
    try:
        enumerated = _enumerated_poincare(rs, tuple(range(d.rank)), bound)
        add("poincare.degrees", "poincare", "pass" if enumerated == d.poincare() else "fail",
            {} if enumerated == d.poincare() else {"enumerated": enumerated, "degrees": d.poincare()})
    except OracleUnavailable as exc:
        na("poincare.degrees", "poincare", str(exc))

    for o in rs.orbits:
        lab = o.label
        check(f"orbit_stabilizer.{lab}", "orbit_stabilizer",
              lambda o=o: len(o) * parabolic_poincare(o.stabilizer_type)(1) == d.order)
        check(f"methods.{lab}", "methods", crosscheck, rs, lab, bound)
        check(f"table.{lab}", "table", verify_table_orbit, rs, o)
        check(f"prop5.1.{lab}", "prop5.1", verify_prop_sym, rs, lab)
    check("table.gcd", "table.gcd", verify_table_gcd, rs)
    if multi:
        check("additivity", "additivity",
              lambda: fakedeg_bfs(rs, "all") == poly_sum(fakedeg_bfs(rs, o.label) for o in rs.orbits))
    else:
        na("additivity", "additivity", "single root orbit")

    for s in selectors(rs):
        check(f"thm1i.{s}", "thm1i", verify_thm_i, rs, s)
        check(f"lemma2.1.{s}", "lemma2.1", csp_check, rs, s)
        if d.doubly_laced_at_most:
            check(f"prop4.2.{s}", "prop4.2", verify_prop_doubly_laced, rs, s)
        else:
            na(f"prop4.2.{s}", "prop4.2", "a bond label exceeds 4")

    if sl:
        check("thm1ii", "thm1ii", verify_thm_ii, rs)
        check("lemma3.2", "lemma3.2", verify_lemma_mv, rs)
        check("fU", "fU", verify_fU, rs)
    else:
        for cid in ("thm1ii", "lemma3.2", "fU"):
            na(cid, cid, "not simply-laced")
    if multi:
        na("prop4.1", "prop4.1", "more than one root orbit")
    else:
        check("prop4.1", "prop4.1", verify_prop_gcd_one, rs)
    return report


def _conjugate_cycle_type(rs: RootSystem) -> bool:
    ell = rs.datum.rank
    a = coxeter_permutation(rs)
    b = coxeter_permutation(rs, list(range(1, ell)) + [0])
    return sorted(map(len, a.cycles)) == sorted(map(len, b.cycles))


def catalog_types(max_rank: int = 12, max_m: int = 30) -> list:
    """Canonical list of types checked by a full run, in output order."""
    out = [GroupType("A", n) for n in range(1, max_rank + 1)]
    out += [GroupType("B", n) for n in range(2, max_rank + 1)]
    out += [GroupType("D", n) for n in range(4, max_rank + 1)]
    out += [GroupType("E", n) for n in (6, 7, 8) if n <= max_rank]
    if max_rank >= 4:
        out.append(GroupType("F", 4))
    out += [GroupType("H", n) for n in (3, 4) if n <= max_rank]
    if max_rank >= 2:
        out += [GroupType("I", m) for m in range(5, max_m + 1)]
    return out
