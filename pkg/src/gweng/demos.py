"""Worked examples that double as executable checks.

Each function returns plain data so the command line front end can
render it as text or JSON, and so the test suite can assert on the
same numbers.
"""

from __future__ import annotations

from .budget import DEFAULT, Budget
from .cwf import bool_gwe, unit_gwe
from .dependent import constant_dgwe, idhat, pihat
from .gwe import bang_compose
from .isom import is_invertible, mirror_strategy, to_bijection
from .kernel import EMPTY, Move, flat
from .predicative import (
    completeness_closure,
    games_as_collections_check,
    value_strategy,
)
from .strategies import (
    LEFT,
    Strategy,
    apply_strategy,
    as_strategy_loose,
    enumerate_strategies,
    exponential,
    copycat,
    linear_implication,
)


# ---------------------------------------------------------------------------
# completeness closure of two strategies

def nine_strategies(budget=DEFAULT):
    """Close {answer c everywhere, answer d everywhere} on the game
    with questions a, b and answers c, d under patchwork."""
    a, b = Move("a"), Move("b")
    c, d = Move("c"), Move("d")
    lab = {a: "OQ", b: "OQ", c: "PA", d: "PA"}

    def strat(pairs):
        pos = set()
        for q, ans in pairs:
            p = EMPTY.snoc(q, None).snoc(ans, 0)
            pos.add(p.prefix(1))
            pos.add(p)
        return Strategy(pos, lab)

    s1 = strat([(a, c), (b, c)])
    s2 = strat([(a, d), (b, d)])
    closure = completeness_closure([s1, s2])
    return {
        "count": len(closure.strategies),
        "collections_check": games_as_collections_check(closure.union_game()),
    }


# ---------------------------------------------------------------------------
# composing arithmetic strategies

def flat_function_strategy(fn, k, budget=DEFAULT):
    """The strategy on !N_k -o N_k interrogating its argument once and
    answering fn of it; undefined outputs fall outside the game."""
    nk = flat(list(range(k)))
    arrow = linear_implication(
        as_strategy_loose(exponential(nk, Budget(6, 1, budget.max_enum))),
        nk,
        Budget(6, 1, budget.max_enum),
    )
    pos = set()
    for s in arrow.positions:
        n = len(s)
        if n > 4:
            continue
        if n >= 2 and LEFT not in s.move(1).tags:
            # the answer-immediately shape; keep only the ask shape
            continue
        if n == 4:
            v = s.move(2).payload
            w = s.move(3).payload
            if fn(v) != w:
                continue
        if n == 3 and fn(s.move(2).payload) >= k:
            continue
        pos.add(s)
    return Strategy(pos, arrow.labeling)


def succ_double(n, k=None, budget=DEFAULT):
    """2(n+1) computed by composing the successor and doubling
    strategies and applying the composite to the numeral."""
    if k is None:
        k = 2 * (n + 1) + 1
    if 2 * (n + 1) >= k:
        raise ValueError("result out of range for k=%d" % k)
    succ = flat_function_strategy(lambda v: v + 1, k, budget)
    double = flat_function_strategy(lambda v: 2 * v, k, budget)
    composite = bang_compose(double, succ, budget)
    nk = flat(list(range(k)))
    out = apply_strategy(composite, value_strategy(nk, n), budget)
    answers = {s.move(1).payload for s in out.positions if len(s) == 2}
    if len(answers) != 1:
        raise ValueError("composite is not a value at %d" % n)
    return answers.pop()


# ---------------------------------------------------------------------------
# uniqueness of identity proofs fails

def uip_report(budget=DEFAULT):
    """Two distinct equality proofs on the booleans with no
    identification between them."""
    b = bool_gwe(budget)
    pt = b.objects[0]
    proofs = b.hom(pt, pt)
    distinct = len({m.witness.positions for m in proofs})
    idty = idhat(b, pt, pt, budget)
    perms = [
        (x, y)
        for x in idty.objects
        for y in idty.objects
        if x.digest() != y.digest()
    ]
    crossings = sum(len(idty.hom(x, y)) for x, y in perms)
    return {
        "proofs": len(proofs),
        "distinct": distinct,
        "identifications": crossings,
        "refuted": len(proofs) == 2 and distinct == 2 and crossings == 0,
    }


# ---------------------------------------------------------------------------
# function extensionality fails

def funext_report(budget=DEFAULT):
    """Two pointwise equal dependent functions on the unit type that
    are not identified: one interrogates its argument, one does not."""
    u = unit_gwe(budget)
    dep = constant_dgwe(u, u, budget)
    pg = pihat(u, dep, budget)

    def asks(po):
        return any(
            LEFT in s.move(i).tags
            for s in po.strategy().positions
            for i in range(len(s))
        )

    piobs = list(pg.piobs.values())
    lazy = [po for po in piobs if not asks(po)]
    eager = [po for po in piobs if asks(po)]
    if not lazy or not eager:
        return {"refuted": False, "reason": "interrogation styles missing"}
    le, ea = lazy[0], eager[0]
    pointwise = all(
        le.apply(x) == ea.apply(x) for x in u.objects
    )
    homs = len(pg.hom(le.strategy(), ea.strategy())) + len(
        pg.hom(ea.strategy(), le.strategy())
    )
    return {
        "objects": len(pg.objects),
        "pointwise_equal": pointwise,
        "identifications": homs,
        "refuted": pointwise and homs == 0,
    }


# ---------------------------------------------------------------------------
# invertible strategies are position bijections

def isom_roundtrip(budget=DEFAULT):
    """Every invertible strategy between two one-value flat games is
    the mirror of its bijection, and conversely."""
    x = flat(["x0"])
    y = flat(["y0"])
    arrow = linear_implication(x, y, budget)
    invertible = [
        phi
        for phi in enumerate_strategies(arrow)
        if is_invertible(phi, x, y, budget)
    ]
    strat_trips = 0
    bij_trips = 0
    for phi in invertible:
        f = to_bijection(phi, x, y)
        back = mirror_strategy(f, x, y, budget)
        if back == phi:
            strat_trips += 1
        f2 = to_bijection(back, x, y)
        if f2 == f:
            bij_trips += 1
    return {
        "invertible": len(invertible),
        "strategy_roundtrips": strat_trips,
        "bijection_roundtrips": bij_trips,
        "ok": len(invertible) > 0
        and strat_trips == len(invertible)
        and bij_trips == len(invertible),
    }
