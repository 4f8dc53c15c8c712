"""Seeded law suites.

Each suite builds instances from a deterministic random stream and
returns one record per law per instance: a dict with the law name,
a digest of the instance, and whether the law held.  A failing record
carries the offending instance data under "counterexample".  These
are the checks behind the command-line `laws` subcommands.
"""

from __future__ import annotations

import hashlib
import json
import random

from .budget import DEFAULT, Budget
from .cwf import (
    bool_gwe,
    comprehension,
    curry_term,
    cwf_law_report,
    id_former,
    id_law_report,
    make_eq_map_ctx,
    nat_gwe,
    pair_map,
    pi_law_report,
    refl_map,
    sigma_former,
    sigma_law_report,
    subst_ty,
    unit_gwe,
)
from .dependent import constant_dgwe, pi_object_from_parts, idhat, pihat, sigmahat
from .gwe import (
    EpMap,
    bang_compose,
    check_groupoid,
    discrete_gwe,
    identity_ep,
    pge_law_suite,
)
from .kernel import EMPTY, Game, JSeq, Move, flat
from .plimap import PliMap
from .predicative import PredGame, value_strategy
from .strategies import (
    as_strategy_loose,
    compose,
    constraint_report,
    enumerate_strategies,
    exponential,
    lift_to_arrow,
    linear_implication,
)


def _digest_of(*parts):
    blob = json.dumps([str(p) for p in parts])
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


def _record(law, instance, ok, counterexample=None):
    rec = {"law": law, "instance": instance, "pass": bool(ok)}
    if not ok and counterexample is not None:
        rec["counterexample"] = counterexample
    return rec


def discrete_context(values, budget=DEFAULT):
    """A discrete groupoid on a flat game of the given values."""
    g = flat(list(values))
    return discrete_gwe(
        PredGame([value_strategy(g, v) for v in values]), budget
    )


def constant_term(ctx, dep, which=0, budget=DEFAULT):
    """The term picking one fibre object everywhere, lazily."""
    fib = dep.ob(ctx.objects[0])
    obs = sorted(fib.objects, key=lambda s: s.digest())
    c0 = obs[which % len(obs)]
    return pi_object_from_parts(
        ctx,
        dep,
        {o.digest(): c0 for o in ctx.objects},
        {o.digest(): lift_to_arrow(c0) for o in ctx.objects},
        budget,
    )


def point_map(src, dst, pick, budget=DEFAULT):
    """The context map sending every object to one target object and
    every proof to its identity, with lazy components."""
    comp = {o.digest(): lift_to_arrow(pick) for o in src.objects}
    proj = {o.digest(): pick.digest() for o in src.objects}
    base = PliMap(src.game, dst.game, comp, proj)
    assign = {m.key(): dst.identity(pick) for m in src.morphisms()}
    return EpMap(src, dst, base, make_eq_map_ctx(src, dst, assign))


def _fresh_labels(rng, n, stem):
    return ["%s%d_%d" % (stem, rng.randrange(10**6), i) for i in range(n)]


# a small stock of source contexts keeps the composition caches warm
# across suite instances while the maps themselves still vary
_SRC_LABELS = (("s0",), ("s1",), ("s2", "s3"), ("s4",))


def _some_map(rng, dst, budget=DEFAULT):
    """Either the identity on dst or a lazy map from a small discrete
    context onto a random object of dst."""
    if rng.random() < 0.3:
        return identity_ep(dst, budget)
    src = discrete_context(rng.choice(_SRC_LABELS), budget)
    pick = rng.choice(sorted(dst.objects, key=lambda s: s.digest()))
    return point_map(src, dst, pick, budget)


# ---------------------------------------------------------------------------
# substitution and context extension

def cwf_records(seed=0, count=50, budget=DEFAULT):
    rng = random.Random(seed)
    out = []
    for i in range(count):
        if rng.random() < 0.1:
            g = bool_gwe(budget)
        else:
            g = discrete_context(
                _fresh_labels(rng, rng.choice([1, 2]), "ctx"), budget
            )
        fib = discrete_context(
            _fresh_labels(rng, rng.choice([1, 2]), "fib"), budget
        )
        a = constant_dgwe(g, fib, budget)
        phi = _some_map(rng, g, budget)
        psi = _some_map(rng, phi.src, budget)
        t = constant_term(g, a, rng.randrange(4), budget)
        inst = _digest_of(i, g.digest(), a.digest(), phi.digest(), psi.digest())
        rep = cwf_law_report(g, a, phi, t, psi, budget=budget)
        for law, ok in rep.items():
            out.append(_record(law, inst, ok))
    return out


# ---------------------------------------------------------------------------
# type formers

def _former_base(rng, budget, shape_pool):
    """A context/type pair drawn from a small pool of shapes, so that
    repeated instances can share the expensive former tables."""
    labels = shape_pool[rng.randrange(len(shape_pool))]
    g = discrete_context(labels["ctx"], budget)
    a = constant_dgwe(g, discrete_context(labels["a"], budget), budget)
    ga = comprehension(g, a, budget)
    b = constant_dgwe(ga, discrete_context(labels["b"], budget), budget)
    return g, a, ga, b


def _shape_pool(rng, n_shapes, b_size=1):
    # fixed label families: the three former suites then share base
    # contexts and comprehension tables, which keeps each suite fast
    pool = []
    for i in range(n_shapes):
        pool.append({
            "ctx": ["c%d_%d" % (i, j) for j in range(1 + (i % 2))],
            "a": ["a%d" % i],
            "b": ["b%d_%d" % (i, j) for j in range(b_size)],
        })
    return pool


def pi_records(seed=0, count=20, budget=DEFAULT):
    rng = random.Random(seed)
    pool = _shape_pool(rng, 3)
    out = []
    for i in range(count):
        g, a, ga, b = _former_base(rng, budget, pool)
        psi = constant_term(ga, b, rng.randrange(4), budget)
        kappa = curry_term(g, a, b, psi, budget)
        alpha = constant_term(g, a, rng.randrange(4), budget)
        phi = _some_map(rng, g, budget)
        inst = _digest_of(
            i, g.digest(), a.digest(), b.digest(), phi.digest()
        )
        rep = pi_law_report(g, a, b, psi, kappa, alpha, phi, budget)
        for law, ok in rep.items():
            out.append(_record(law, inst, ok))
    return out


def sigma_records(seed=0, count=20, budget=DEFAULT):
    rng = random.Random(seed)
    pool = _shape_pool(rng, 6, b_size=2)
    out = []
    for i in range(count):
        g, a, ga, b = _former_base(rng, budget, pool)
        sty = sigma_former(g, a, b, budget)
        gs = comprehension(g, sty, budget)
        gab = comprehension(ga, b, budget)
        p_ty = constant_dgwe(
            gs, discrete_context(("p%d" % rng.randrange(3),), budget), budget
        )
        pf, pb = pair_map(g, a, b, budget)
        psi = constant_term(gab, subst_ty(p_ty, pf), rng.randrange(4), budget)
        theta = constant_term(gs, p_ty, rng.randrange(4), budget)
        phi = _some_map(rng, g, budget)
        inst = _digest_of(
            i, g.digest(), a.digest(), b.digest(), p_ty.digest(), phi.digest()
        )
        rep = sigma_law_report(g, a, b, p_ty, psi, theta, phi, budget)
        for law, ok in rep.items():
            out.append(_record(law, inst, ok))
    return out


def id_records(seed=0, count=20, budget=DEFAULT):
    rng = random.Random(seed)
    pool = _shape_pool(rng, 6)
    out = []
    for i in range(count):
        if i == 0:
            g = unit_gwe(budget)
            a = constant_dgwe(g, bool_gwe(budget), budget)
        else:
            g, a, _, _ = _former_base(rng, budget, pool)
        ga = comprehension(g, a, budget)
        idty = id_former(g, a, budget)
        theta = comprehension(idty.base, idty, budget)
        p_ty = constant_dgwe(
            theta,
            discrete_context(("q%d" % rng.randrange(3),), budget),
            budget,
        )
        tau = constant_term(
            ga, subst_ty(p_ty, refl_map(g, a, budget)), rng.randrange(4),
            budget,
        )
        phi = _some_map(rng, g, budget)
        inst = _digest_of(i, g.digest(), a.digest(), p_ty.digest(), phi.digest())
        rep = id_law_report(g, a, p_ty, tau, phi, budget)
        for law, ok in rep.items():
            out.append(_record(law, inst, ok))
    return out


# ---------------------------------------------------------------------------
# groupoid and category laws

def standard_gwe_suite(budget=DEFAULT):
    """The groupoids exercised everywhere: the bit groupoid, discrete
    numerals, and one output of each space construction."""
    b = bool_gwe(budget)
    n4 = nat_gwe(4, budget)
    one = unit_gwe(budget)
    pih = pihat(one, constant_dgwe(one, nat_gwe(2, budget), budget), budget)
    sgh = sigmahat(b, constant_dgwe(b, n4, budget), budget)
    pt = b.objects[0]
    idh = idhat(b, pt, pt, budget)
    return [b, n4, one, pih, sgh, idh]


def groupoid_records(seed=0, count=0, budget=DEFAULT):
    suite = standard_gwe_suite(budget)
    rng = random.Random(seed)
    for _ in range(count):
        suite.append(
            discrete_context(_fresh_labels(rng, rng.choice([1, 3]), "g"))
        )
    out = []
    eps = []
    for g in suite:
        rep = check_groupoid(g)
        for law, ok in rep.items():
            out.append(_record(law, g.digest(), ok))
        eps.append(identity_ep(g, budget))
        pick = sorted(g.objects, key=lambda s: s.digest())
        if pick:
            eps.append(point_map(suite[2], g, pick[0], budget))
    for bad in pge_law_suite(suite, eps, budget):
        out.append(_record(bad["law"], str(bad["object"]), False, bad))
    if not any(not r["pass"] for r in out):
        out.append(_record("pge_category_laws", _digest_of(len(suite)), True))
    return out


def sigma_algebra_records(budget=DEFAULT):
    """The composition algebra of the sum groupoid, checked against
    independent recomputation on every morphism and composable pair."""
    b = bool_gwe(budget)
    fib = bool_gwe(budget)
    dep = constant_dgwe(b, fib, budget)
    sg = sigmahat(b, dep, budget)
    out = []
    inst = sg.digest()
    mors = sg.morphisms()
    ok_unit = True
    ok_inv = True
    ok_assoc = True
    for m in mors:
        if sg.compose(m, sg.identity(m.dom)) != m:
            ok_unit = False
        if sg.compose(sg.identity(m.cod), m) != m:
            ok_unit = False
        minv = sg.inverse(m)
        # the inverse decomposes as (base inverse, transported fibre inverse)
        rho, f = m.data["fst"], m.data["snd"]
        rinv = b.inverse(rho)
        want_snd = dep.arr(rinv).apply_mor(fib.inverse(f))
        if minv.data["fst"] != rinv or minv.data["snd"] != want_snd:
            ok_inv = False
        if sg.compose(minv, m) != sg.identity(m.dom):
            ok_inv = False
        if sg.compose(m, minv) != sg.identity(m.cod):
            ok_inv = False
    for m2 in mors:
        for m1 in mors:
            if m1.cod.digest() != m2.dom.digest():
                continue
            c = sg.compose(m2, m1)
            # twisted second component, recomputed from scratch
            want = fib.compose(
                m2.data["snd"],
                dep.arr(m2.data["fst"]).apply_mor(m1.data["snd"]),
            )
            if c.data["snd"] != want:
                ok_assoc = False
            for m3 in mors:
                if m2.cod.digest() != m3.dom.digest():
                    continue
                if sg.compose(m3, c) != sg.compose(
                    sg.compose(m3, m2), m1
                ):
                    ok_assoc = False
    out.append(_record("sum_unit", inst, ok_unit))
    out.append(_record("sum_inverse", inst, ok_inv))
    out.append(_record("sum_associativity", inst, ok_assoc))
    return out


# ---------------------------------------------------------------------------
# constraint preservation under composition

def _chain_game(pairs):
    """A game alternating through the given (question, answer) pairs,
    one level enabling the next."""
    pos = {EMPTY}
    lab = {}
    occs = []
    for i, (q, a) in enumerate(pairs):
        mq = Move(("q", q))
        ma = Move(("a", a))
        lab[mq] = "OQ" if i % 2 == 0 else "PQ"
        lab[ma] = "PA" if i % 2 == 0 else "OA"
        occs.append((mq, len(occs) - 1 if occs else None))
        pos.add(JSeq(tuple(occs)))
        occs.append((ma, len(occs) - 1))
        pos.add(JSeq(tuple(occs)))
    return Game(pos, lab)


def _arena_pool(rng):
    pool = [
        flat(_fresh_labels(rng, rng.choice([1, 2]), "v"))
        for _ in range(3)
    ]
    pool.append(_chain_game([
        (rng.randrange(100), rng.randrange(100)),
        (rng.randrange(100), rng.randrange(100)),
    ]))
    pool.append(_chain_game([
        (rng.randrange(100), rng.randrange(100)),
        (rng.randrange(100), rng.randrange(100)),
        (rng.randrange(100), rng.randrange(100)),
    ]))
    return pool


def _good_strategies(a, b, budget):
    """Strategies on a -> b passing all four constraint checks."""
    arrow = linear_implication(
        as_strategy_loose(exponential(a, budget)), b, budget
    )
    good = []
    for s in enumerate_strategies(arrow, max_count=3000):
        rep = constraint_report(s, arrow, budget)
        if all(rep.values()):
            good.append((s, arrow))
    return good


def wpg_records(seed=0, count=100, budget=None):
    """Composites of constrained strategies keep all four constraints.

    Candidate strategies are enumerated under a small budget; the
    composite is checked against an arrow game wide enough to hold
    every thread the promotion can open.
    """
    if budget is None:
        budget = Budget(12, 2, DEFAULT.max_enum)
    wide = Budget(
        2 * budget.max_play_length, 2 * budget.max_threads, budget.max_enum
    )
    rng = random.Random(seed)
    games = _arena_pool(rng)
    table = {}
    arrows = {}
    out = []
    made = 0
    while made < count:
        a, b, c = (rng.randrange(len(games)) for _ in range(3))
        k1 = (a, b)
        k2 = (b, c)
        if k1 not in table:
            table[k1] = _good_strategies(games[a], games[b], budget)
        if k2 not in table:
            table[k2] = _good_strategies(games[b], games[c], budget)
        if not table[k1] or not table[k2]:
            continue
        sigma, _ = rng.choice(table[k1])
        tau, _ = rng.choice(table[k2])
        composite = bang_compose(tau, sigma, wide)
        if (a, c) not in arrows:
            arrows[(a, c)] = linear_implication(
                as_strategy_loose(exponential(games[a], wide)),
                games[c],
                wide,
            )
        rep = constraint_report(composite, arrows[(a, c)], wide)
        inst = _digest_of(made, sigma.digest(), tau.digest())
        for law, ok in rep.items():
            out.append(_record("composite_" + law, inst, ok))
        made += 1
    return out


SUITES = {
    "cwf": cwf_records,
    "groupoid": groupoid_records,
    "pi": pi_records,
    "sigma": sigma_records,
    "id": id_records,
    "wpg": wpg_records,
}
