"""Acceptance gate: one check per criterion, one verdict line each.

Run with -s to see the verdict lines as they print; pytest -v shows
one PASSED/FAILED line per criterion either way.
"""

import subprocess
import sys
import time

from gweng.demos import (
    flat_function_strategy,
    funext_report,
    isom_roundtrip,
    nine_strategies,
    succ_double,
    uip_report,
)
from gweng.gwe import bang_compose
from gweng.kernel import flat
from gweng.predicative import (
    Registry,
    el,
    name_strategy,
    pred_of_game,
    universe,
    value_strategy,
)
from gweng.strategies import apply_strategy, copycat
from gweng.suites import (
    cwf_records,
    groupoid_records,
    id_records,
    pi_records,
    sigma_algebra_records,
    sigma_records,
    wpg_records,
)


def _verdict(n, name, ok, detail):
    line = "criterion %02d %-28s %s (%s)" % (
        n, name, "PASS" if ok else "FAIL", detail
    )
    print(line)
    assert ok, line


def _timed(fn):
    t0 = time.time()
    out = fn()
    return out, time.time() - t0


def test_c01_nine_strategy_completeness():
    rep, dt = _timed(nine_strategies)
    ok = rep["count"] == 9 and rep["collections_check"]
    _verdict(1, "nine-strategy completeness", ok,
             "%d strategies, %.1fs" % (rep["count"], dt))


def test_c02_composition_oracle():
    t0 = time.time()
    k = 8
    good = all(
        succ_double(n, k) == 2 * (n + 1)
        for n in range(k)
        if 2 * (n + 1) < k
    )
    f3 = flat([0, 1, 2])
    sigma = flat_function_strategy(lambda v: (v + 1) % 3, 3)
    ident = bang_compose(copycat(f3), sigma) == sigma
    _verdict(2, "composition oracle", good and ident,
             "doubling after successor and copy-cat unit, %.1fs"
             % (time.time() - t0))


def test_c03_constraint_preservation():
    recs, dt = _timed(lambda: wpg_records(seed=0, count=100))
    pairs = len({r["instance"] for r in recs})
    fails = sum(not r["pass"] for r in recs)
    ok = pairs >= 100 and fails == 0
    _verdict(3, "constraint preservation", ok,
             "%d pairs, %d failures, %.1fs" % (pairs, fails, dt))


def test_c04_isom_roundtrip():
    rep, dt = _timed(isom_roundtrip)
    ok = rep["ok"]
    _verdict(4, "invertible-strategy roundtrip", ok,
             "%d invertible, all round trips exact, %.1fs"
             % (rep["invertible"], dt))


def test_c05_groupoid_and_pge_laws():
    recs, dt = _timed(lambda: groupoid_records(seed=0, count=4))
    fails = sum(not r["pass"] for r in recs)
    _verdict(5, "groupoid and map laws", fails == 0,
             "%d records, %d violations, %.1fs" % (len(recs), fails, dt))


def test_c06_sum_groupoid_algebra():
    recs, dt = _timed(sigma_algebra_records)
    fails = sum(not r["pass"] for r in recs)
    laws = {r["law"] for r in recs}
    ok = fails == 0 and laws == {
        "sum_unit", "sum_inverse", "sum_associativity"
    }
    _verdict(6, "sum groupoid algebra", ok,
             "%d records, %d failures, %.1fs" % (len(recs), fails, dt))


def test_c07_cwf_equations():
    recs, dt = _timed(lambda: cwf_records(seed=0, count=50))
    insts = len({r["instance"] for r in recs})
    laws = {r["law"] for r in recs}
    fails = sum(not r["pass"] for r in recs)
    ok = insts >= 50 and len(laws) == 8 and fails == 0
    _verdict(7, "cwf equations", ok,
             "%d instances x 8 laws, %d failures, %.1fs" % (insts, fails, dt))


def test_c08_former_laws():
    t0 = time.time()
    rp = pi_records(seed=0, count=20)
    rs = sigma_records(seed=0, count=20)
    ri = id_records(seed=0, count=20)
    dt = time.time() - t0
    ok = True
    detail = []
    for name, recs, want in (
        ("pi", rp, {"pi_comp", "pi_subst", "lam_subst", "app_subst",
                    "lam_uniq"}),
        ("sigma", rs, {"sigma_comp", "sigma_subst", "pair_subst",
                       "r_sigma_subst", "r_sigma_uniq"}),
        ("id", ri, {"id_comp", "id_subst", "refl_subst", "r_id_subst"}),
    ):
        insts = len({r["instance"] for r in recs})
        fails = sum(not r["pass"] for r in recs)
        ok = ok and insts >= 20 and fails == 0
        ok = ok and {r["law"] for r in recs} == want
        detail.append("%s %d/%d" % (name, insts - fails, insts))
    _verdict(8, "former laws", ok, "%s, %.1fs" % (", ".join(detail), dt))


def test_c09_uip_refutation():
    rep, dt = _timed(uip_report)
    proc = subprocess.run(
        [sys.executable, "-m", "gweng.cli", "demo", "uip"],
        capture_output=True, text=True,
    )
    ok = (
        rep["refuted"]
        and proc.returncode == 0
        and proc.stdout.strip()
        == "UIP refuted: 2 distinct proofs, 0 identifications"
    )
    _verdict(9, "uip refutation", ok,
             "%d proofs, %d identifications, %.1fs"
             % (rep["proofs"], rep["identifications"], dt))


def test_c10_funext_refutation():
    rep, dt = _timed(funext_report)
    proc = subprocess.run(
        [sys.executable, "-m", "gweng.cli", "demo", "funext"],
        capture_output=True, text=True,
    )
    ok = (
        rep["refuted"]
        and rep["pointwise_equal"]
        and rep["identifications"] == 0
        and proc.returncode == 0
        and "FunExt refuted" in proc.stdout
    )
    _verdict(10, "funext refutation", ok,
             "pointwise equal, %d identifications, %.1fs"
             % (rep["identifications"], dt))


def test_c11_universe_membership():
    t0 = time.time()
    reg = Registry()
    ranked = {r: pred_of_game(flat([0], rank=r)) for r in range(0, 5)}
    for pg in ranked.values():
        reg.register(pg)
    ok = True
    for k in range(5):
        uk = set(universe(reg, k).strategies)
        for pg in ranked.values():
            ok = ok and ((name_strategy(pg, reg) in uk) == (pg.rank() <= k + 1))
    for pg in ranked.values():
        ok = ok and el(reg, name_strategy(pg, reg)) == pg
    u = {}
    for i in range(3):
        u[i] = universe(reg, i)
        reg.register(u[i])
    for i in range(3):
        for j in range(i + 1, 4):
            uj = set(universe(reg, j).strategies)
            ok = ok and name_strategy(u[i], reg) in uj
    _verdict(11, "universe membership", ok,
             "rank bound, decode-name identity, hierarchy, %.1fs"
             % (time.time() - t0))
