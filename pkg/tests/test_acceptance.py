"""
Acceptance gate: criteria 1-14, one PASS/FAIL line each.

The lines are printed as each criterion runs and collected again in the
terminal summary (see conftest.py).  Run ``python3 tests/test_acceptance.py``
to execute the gate on its own.
"""

import os
import subprocess
import sys

import pytest

from coxfake.fakedeg import (
    catalog_types,
    crosscheck,
    csp_check,
    fakedeg_bfs,
    fakedeg_quotient,
    group_bfs_quotient,
    selectors,
    sym_antisym,
    table_row,
    thm_ii_identity,
    verify_fU,
    verify_height_identity,
    verify_lemma_mv,
    verify_prop_doubly_laced,
    verify_prop_gcd_one,
    verify_thm_i,
    verify_thm_ii,
)
from coxfake.qpoly import DivisibilityError, IntPoly, eval_at_root_of_unity, exact_div, q_int
from coxfake.rootsys import (
    DEFAULT_BFS_BOUND,
    GroupType,
    StructuralError,
    coxeter_element,
    parse_type,
    root_system,
)
from coxfake.table import expand_recipe, expected_rows

LINES = []

# criterion 2's range; I2(3) and I2(4) arrive as A2 and B2
RANGE = catalog_types(12, 30)
SUPPORTED = catalog_types(12, 60) + [GroupType("C", n) for n in range(3, 13)]
SIMPLY_LACED = [t for t in RANGE if t.family in "ADE"]
CRYSTALLOGRAPHIC = [t for t in RANGE if t.family in "ABCDEF"]


def record(n, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {n:>2}: {detail}"
    LINES.append(line)
    print(line)
    return ok


def rs_of(t):
    return root_system(t)


def test_c01_cardinality():
    bad = [t.label for t in SUPPORTED
           if len(rs_of(t).roots) != rs_of(t).datum.h * rs_of(t).datum.rank]
    spot = {s: len(root_system(parse_type(s)).roots) for s in ("E8", "H4", "B7")}
    ok = not bad and spot == {"E8": 240, "H4": 120, "B7": 2 * 7 * 7}
    assert record(1, ok, f"|Phi| = h*l on {len(SUPPORTED)} types; E8/H4/B7 -> {spot}; bad={bad}")


def _i2_small_rows():
    # I2(3) = A2 and I2(4) = B2 checked against the I2(m) rule directly
    out = []
    for m, spec in ((3, "A2"), (4, "B2")):
        rs = root_system(parse_type(spec))
        want_q = q_int(2) if m % 2 else IntPoly([1])
        want_g = expand_recipe("1" if m % 2 or (m // 2) % 2 else "[2]_{q^2}")
        for o in rs.orbits:
            out.append(table_row(rs, o.label)["quotient"] == want_q)
        out.append(table_row(rs)["gcd"] == want_g)
    return all(out)


def test_c02_table():
    bad = []
    rows = 0
    for t in RANGE:
        rs = rs_of(t)
        exp = expected_rows(t)
        for o in rs.orbits:
            rows += 1
            got = table_row(rs, o.label)
            if got["quotient"] != expand_recipe(exp[o.label]["quotient"]):
                bad.append(f"{t.label}.{o.label}")
            if tuple(o.stabilizer_type) != exp[o.label]["stabilizer"]:
                bad.append(f"{t.label}.{o.label}.stabilizer")
        if table_row(rs)["gcd"] != expand_recipe(exp["gcd"]):
            bad.append(f"{t.label}.gcd")
    small = _i2_small_rows()
    assert record(2, not bad and small, f"{rows} orbit rows + I2(3), I2(4) match the recipes exactly; bad={bad}")


def test_c03_h_divides():
    bad = [f"{t.label}.{s}" for t in RANGE for s in selectors(rs_of(t)) if not verify_thm_i(rs_of(t), s)]
    assert record(3, not bad, f"[h]_q | f for every orbit and union in {len(RANGE)} types; bad={bad}")


def test_c04_simply_laced_identity():
    bad = [t.label for t in SIMPLY_LACED if not verify_thm_ii(rs_of(t))]
    h3 = thm_ii_identity(root_system(parse_type("H3")))
    quo = exact_div(h3.witness["f"], q_int(10))
    rhs = exact_div(h3.witness["expected"], q_int(10))
    nonvacuous = (not h3) and quo == IntPoly([1, 0, 1, 0, 1]) and rhs == IntPoly([1, 0, 0, 0, 1, 0, 0, 0, 1])
    assert record(4, not bad and nonvacuous,
                  f"f = [h]_q sum q^d* on {len(SIMPLY_LACED)} simply-laced types; H3 fails ({quo} vs {rhs}); bad={bad}")


def test_c05_csp():
    bad = []
    for t in RANGE:
        rs = rs_of(t)
        h = rs.datum.h
        for s in selectors(rs):
            f = fakedeg_bfs(rs, s)
            size = f(1)
            zeros = all(eval_at_root_of_unity(f, h, m) == 0 for m in range(1, h))
            if not (csp_check(rs, s) and zeros and eval_at_root_of_unity(f, h, 0) == size):
                bad.append(f"{t.label}.{s}")
    assert record(5, not bad, f"f(zeta_h^m) = fixed points of c^m for all m, all selections; bad={bad}")


def test_c06_free_action():
    bad = []
    for t in RANGE:
        rs = rs_of(t)
        try:
            c = coxeter_element(rs)
        except StructuralError:
            bad.append(t.label)
            continue
        if c.order != rs.datum.h or any(len(cy) != rs.datum.h for cy in c.cycles):
            bad.append(t.label)
    assert record(6, not bad, f"Coxeter permutation has order h and only h-cycles in {len(RANGE)} types; bad={bad}")


def test_c07_distance_formula():
    bad = [t.label for t in SIMPLY_LACED if not verify_lemma_mv(rs_of(t))]
    roots = sum(len(rs_of(t).roots) for t in SIMPLY_LACED)
    assert record(7, not bad, f"BFS distance = height formula on {roots} roots; bad={bad}")


def test_c08_heights():
    bad = [t.label for t in CRYSTALLOGRAPHIC if not verify_height_identity(rs_of(t))]
    assert record(8, not bad, f"height polynomial = sum (q + ... + q^e_i) on {len(CRYSTALLOGRAPHIC)} types; bad={bad}")


def test_c09_method_agreement():
    bad, enumerated, skipped = [], [], []
    for t in RANGE:
        rs = rs_of(t)
        for s in selectors(rs):
            if fakedeg_bfs(rs, s) != fakedeg_quotient(rs, s):
                bad.append(f"{t.label}.{s}")
        if rs.datum.order <= DEFAULT_BFS_BOUND:
            for s in selectors(rs):
                out = crosscheck(rs, s, DEFAULT_BFS_BOUND)
                if not out or out.witness.get("group_bfs") is None:
                    bad.append(f"{t.label}.{s}.group")
            enumerated.append(t.label)
        else:
            skipped.append(t.label)
    # the types named alongside the bound; A9 has |W| = 10! and is covered
    # by test_c09_a9_beyond_bound with a raised bound instead
    listed = ["A%d" % n for n in range(1, 10)] + ["B%d" % n for n in range(2, 7)] + \
             ["D4", "D5", "D6", "F4", "H3", "H4", "E6"]
    over = [x for x in listed if root_system(parse_type(x)).datum.order > DEFAULT_BFS_BOUND]
    missing = [x for x in listed if x not in enumerated and x not in over]
    ok = not bad and not missing and over == ["A9"]
    assert record(9, ok, f"bfs = quotient everywhere; group enumeration agrees on {len(enumerated)} types "
                         f"with |W| <= 10^6 (beyond bound: {', '.join(skipped)}); "
                         f"named but over the bound: {over}; bad={bad}")


@pytest.mark.skipif(not os.environ.get("COXFAKE_SLOW"), reason="set COXFAKE_SLOW=1: enumerates all 10! elements of W(A9)")
def test_c09_a9_beyond_bound():
    rs = root_system(parse_type("A9"))
    got = group_bfs_quotient(rs, "all", bound=4 * 10**6)
    ok = got == fakedeg_bfs(rs) == fakedeg_quotient(rs)
    assert record("9b", ok, "A9 group enumeration (|W| = 3628800, bound raised) agrees with both methods")


def test_c10_gcd_one():
    single = [t for t in RANGE if len(rs_of(t).orbits) == 1]
    outs = {t.label: verify_prop_gcd_one(rs_of(t)) for t in single}
    bad = [k for k, v in outs.items() if not v]
    disagree = [k for k, v in outs.items() if not v.witness["sides_agree"]]
    assert record(10, not bad, f"gcd = 1 and tr(c^m) != 0 for {len(single)} single-orbit types; "
                               f"bad={bad}; sides disagree={disagree}")


def test_c11_doubly_laced():
    types = [t for t in RANGE if rs_of(t).datum.doubly_laced_at_most]
    assert all(t.family in "ABCDEF" for t in types)
    bad = [t.label for t in types if not verify_prop_doubly_laced(rs_of(t))]
    assert record(11, not bad, f"sum q^d* divides every orbit union in {len(types)} types A, B, D, E, F4; bad={bad}")


def test_c12_sym_and_fU():
    bad = []
    for t in RANGE:
        rs = rs_of(t)
        for o in rs.orbits:
            f = fakedeg_bfs(rs, o.label)
            try:
                fp, fm = sym_antisym(rs, o.label)
            except DivisibilityError:
                bad.append(f"{t.label}.{o.label}")
                continue
            if fm != IntPoly([0, 1]) * fp or fp + fm != f:
                bad.append(f"{t.label}.{o.label}")
    bad_u = [t.label for t in SIMPLY_LACED if not verify_fU(rs_of(t))]
    assert record(12, not bad and not bad_u,
                  f"(1+q) | f with f- = q f+ for every orbit; f_U identity on {len(SIMPLY_LACED)} simply-laced types; "
                  f"bad={bad + bad_u}")


def test_c13_exponents():
    bad = []
    for t in SUPPORTED:
        d = rs_of(t).datum
        e = d.exponents
        if any(d.h - e[i] != e[d.rank - 1 - i] for i in range(d.rank)) or sum(e) != sum(rs_of(t).positive):
            bad.append(t.label)
    assert record(13, not bad, f"h - e_i = e_(l+1-i) and sum e_i = |Phi+| for {len(SUPPORTED)} degree lists; bad={bad}")


def test_c14_determinism():
    outs = []
    for seed in ("1", "2"):
        env = dict(os.environ, PYTHONHASHSEED=seed)
        proc = subprocess.run([sys.executable, "-m", "coxfake", "verify", "--all"],
                              capture_output=True, env=env)
        outs.append((proc.returncode, proc.stdout))
    same = outs[0] == outs[1]
    ok = same and outs[0][0] == 0 and len(outs[0][1]) > 0
    assert record(14, ok, f"two verify --all runs in fresh processes: {len(outs[0][1])} bytes, identical={same}, "
                          f"exit={outs[0][0]}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
