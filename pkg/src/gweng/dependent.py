"""Dependent groupoids-of-strategies and the three fibred constructions.

A dependent groupoid over a base groupoid assigns a groupoid to every
object and an equality-preserving map to every morphism, functorially
and uniformly.  On top of this live the product groupoid (families
with an equality action, morphisms found by bounded search against
four axioms), the sum groupoid (pairs, with the twisted composition
on the second components) and the identity groupoid (discrete, on the
proofs between two objects).
"""

from __future__ import annotations

import itertools

from .budget import DEFAULT
from .gwe import (
    EpMap,
    GwE,
    Morphism,
    bang_compose,
    check_ep,
    compose_ep,
    discrete_gwe,
    identity_ep,
    lazy_component,
)
from .isom import PosBij, to_bijection
from .kernel import (
    Game,
    Move,
    initial_indices,
    project,
    project_by_index,
    thread_restrict,
)
from .plimap import PliMap, compose_maps, is_uniform
from .predicative import PredGame
from .strategies import (
    LEFT,
    RIGHT,
    Strategy,
    _side,
    as_strategy_loose,
    compose,
    copycat,
    enumerate_strategies,
    exponential,
    is_innocent,
    is_noetherian,
    is_on,
    is_total,
    is_well_bracketed,
    linear_implication,
    product,
    restrict_side,
    threads,
)


class MergeConflict(Exception):
    pass


class DGwE:
    """A functor from a base groupoid into groupoids-of-strategies."""

    def __init__(self, base, ob, arr):
        self.base = base
        self._ob = dict(ob)      # object digest -> GwE
        self._arr = dict(arr)    # morphism key -> EpMap

    def ob(self, sigma):
        return self._ob[sigma.digest()]

    def arr(self, m):
        return self._arr[m.key()]

    def fibers(self):
        return [self._ob[s.digest()] for s in self.base.objects]

    def digest(self):
        import hashlib
        import json

        blob = json.dumps(
            [
                self.base.digest(),
                sorted((d, g.digest()) for d, g in self._ob.items()),
                sorted(
                    (list(k), ep.digest()) for k, ep in self._arr.items()
                ),
            ]
        )
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    def __eq__(self, other):
        return (
            isinstance(other, DGwE)
            and self.base == other.base
            and self._ob == other._ob
            and self._arr == other._arr
        )

    def __hash__(self):
        return hash(self.digest())


def constant_dgwe(base, fiber, budget=DEFAULT):
    ob = {s.digest(): fiber for s in base.objects}
    ide = identity_ep(fiber, budget)
    arr = {m.key(): ide for m in base.morphisms()}
    return DGwE(base, ob, arr)


def check_dgwe(dg, budget=DEFAULT):
    """Functoriality and uniformity of a dependent groupoid."""
    base = dg.base
    for m in base.morphisms():
        ep = dg.arr(m)
        if ep.src != dg.ob(m.dom) or ep.dst != dg.ob(m.cod):
            return False
        if not check_ep(ep):
            return False
    for obj in base.objects:
        if dg.arr(base.identity(obj)) != identity_ep(dg.ob(obj), budget):
            return False
    for m2 in base.morphisms():
        for m1 in base.morphisms():
            if m1.cod.digest() != m2.dom.digest():
                continue
            if dg.arr(base.compose(m2, m1)) != compose_ep(
                dg.arr(m2), dg.arr(m1), budget
            ):
                return False
    for m in base.morphisms():
        ep = dg.arr(m)
        if not is_uniform(ep.base.comp.values()):
            return False
        if not is_uniform(ep.eq.comp.values()):
            return False
    return True


def dependent_union(dg):
    """The union of the fibres, as a predicative game."""
    strats = []
    for g in dg.fibers():
        strats.extend(g.game.strategies)
    return PredGame(strats)


def dependent_eq_union(dg):
    """The union of the fibres' equality games."""
    ws = []
    for g in dg.fibers():
        ws.extend(m.witness for m in g.morphisms())
    return PredGame(ws)


def merge_maps(dom, cod, pieces):
    """Merge families defined on parts of dom into one family; a
    strategy indexed twice with different data is a conflict."""
    comp = {}
    proj = {}
    for pm in pieces:
        for d, c in pm.comp.items():
            if d in comp and (comp[d] != c or proj[d] != pm.proj[d]):
                raise MergeConflict(d)
            comp[d] = c
            proj[d] = pm.proj[d]
    return PliMap(dom, cod, comp, proj)


# ---------------------------------------------------------------------------
# relinking (transport components)

def component_bijections(pm):
    """Position bijections of an invertible family's components."""
    out = {}
    for s in pm.dom.strategies:
        out[s.digest()] = to_bijection(pm.component(s), s, pm.apply(s))
    return out


def relink_position(s, dom_map, cod_map):
    """Translate a component play across positionwise bijections:
    dom_map on source threads, cod_map on the target play."""
    out = []
    for i in range(len(s)):
        m, j = s.occs[i]
        if _side(m) == RIGHT:
            r = restrict_side(s.prefix(i + 1), RIGHT)
            nm = cod_map.fwd[r].move(len(r) - 1)
            out.append((nm.tagged(RIGHT), j))
        else:
            left_idx = [k for k in range(i + 1) if _side(s.move(k)) == LEFT]
            rest = project_by_index(s.prefix(i + 1), left_idx)
            rest = project(rest, lambda mm: mm.untagged())
            root = None
            pos_in_rest = len(rest) - 1
            # the thread of the occurrence just appended
            for init in initial_indices(rest):
                if _thread_contains(rest, init, pos_in_rest):
                    root = init
                    break
            th = thread_restrict(rest, [root])
            nm = dom_map.fwd[th].move(len(th) - 1)
            out.append((nm.tagged(LEFT), j))
    from .kernel import JSeq

    return JSeq(out)


def _thread_contains(s, init, i):
    k = i
    while True:
        j = s.just(k)
        if j is None:
            return k == init
        k = j


def relink_component(c, dom_map, cod_map, new_dom, new_cod):
    """The component transported along bijections of its endpoints."""
    lab = {}
    for m in new_dom.moves:
        from .strategies import flip

        lab[m.tagged(LEFT)] = flip(new_dom.labeling[m])
    for m in new_cod.moves:
        lab[m.tagged(RIGHT)] = new_cod.labeling[m]
    pos = {relink_position(s, dom_map, cod_map) for s in c.positions}
    return Strategy(pos, lab)


# ---------------------------------------------------------------------------
# the product groupoid

class PiObj:
    """An object of the product groupoid: a family over the base with
    an action on equality proofs."""

    __slots__ = ("base_gwe", "dep", "base", "eq", "_strategy")

    def __init__(self, base_gwe, dep, base, eq):
        self.base_gwe = base_gwe
        self.dep = dep
        self.base = base  # PliMap A.game -> dependent union
        self.eq = eq      # PliMap =_A -> union of fibre equality games
        self._strategy = None

    def strategy(self):
        if self._strategy is None:
            self._strategy = self.base.to_strategy()
        return self._strategy

    def apply(self, sigma):
        return self.base.apply(sigma)

    def apply_eq(self, m):
        """The fibre morphism the equality action assigns to m."""
        fiber = self.dep.ob(m.cod)
        return fiber.by_witness(self.eq.proj[m.witness.digest()])

    def __eq__(self, other):
        return (
            isinstance(other, PiObj)
            and self.base == other.base
            and self.eq.proj == other.eq.proj
        )

    def __hash__(self):
        return hash(self.base.digest())


def check_pi_obj(po, budget=DEFAULT):
    """The four object conditions of the product groupoid."""
    A = po.base_gwe
    B = po.dep
    for sigma in A.objects:
        if po.apply(sigma) not in B.ob(sigma).game:
            return False
    for m in A.morphisms():
        try:
            img = po.apply_eq(m)
        except KeyError:
            return False
        fiber = B.ob(m.cod)
        want_dom = B.arr(m).apply_obj(po.apply(m.dom))
        if img.dom != want_dom or img.cod != po.apply(m.cod):
            return False
    for m2 in A.morphisms():
        for m1 in A.morphisms():
            if m1.cod.digest() != m2.dom.digest():
                continue
            fiber = B.ob(m2.cod)
            lhs = po.apply_eq(A.compose(m2, m1))
            rhs = fiber.compose(po.apply_eq(m2), B.arr(m2).apply_mor(po.apply_eq(m1)))
            if lhs != rhs:
                return False
    for obj in A.objects:
        fiber = B.ob(obj)
        if po.apply_eq(A.identity(obj)) != fiber.identity(po.apply(obj)):
            return False
    return True


def _eq_assignments(A, B, proj_obj):
    """All consistent equality actions for a family given by proj_obj
    (object digest -> image strategy)."""
    mors = A.morphisms()
    cands = {}
    for m in mors:
        fiber = B.ob(m.cod)
        want_dom = B.arr(m).apply_obj(proj_obj[m.dom.digest()])
        want_cod = proj_obj[m.cod.digest()]
        opts = [
            x
            for x in fiber.hom(want_dom, want_cod)
        ]
        if not opts:
            return []
        cands[m.key()] = opts
    keys = [m.key() for m in mors]
    out = []
    for combo in itertools.product(*(cands[k] for k in keys)):
        assign = dict(zip(keys, combo))
        if _eq_consistent(A, B, assign, proj_obj):
            out.append(assign)
    return out


def _eq_consistent(A, B, assign, proj_obj):
    for m2 in A.morphisms():
        for m1 in A.morphisms():
            if m1.cod.digest() != m2.dom.digest():
                continue
            fiber = B.ob(m2.cod)
            lhs = assign[A.compose(m2, m1).key()]
            rhs = fiber.compose(assign[m2.key()], B.arr(m2).apply_mor(assign[m1.key()]))
            if lhs != rhs:
                return False
    for obj in A.objects:
        fiber = B.ob(obj)
        if assign[A.identity(obj).key()] != fiber.identity(proj_obj[obj.digest()]):
            return False
    return True


def make_eq_map(A, B, assign, budget=DEFAULT):
    """Package an equality assignment as a family on the equality
    games, with components that replay the image witness."""
    eq_dom = A.eq_game()
    eq_cod = dependent_eq_union(B)
    comp = {}
    proj = {}
    for m in A.morphisms():
        w = m.witness.digest()
        img = assign[m.key()]
        comp[w] = lazy_component(img.witness)
        proj[w] = img.witness.digest()
    return PliMap(eq_dom, eq_cod, comp, proj)


def pi_object_from_parts(A, B, images, components, budget=DEFAULT):
    """Build a product-groupoid object from an object map and
    component strategies, choosing the least consistent equality
    action.  images/components are keyed by object digest."""
    union = dependent_union(B)
    base = PliMap(A.game, union, components, {d: images[d].digest() for d in images})
    assigns = _eq_assignments(A, B, {d: images[d] for d in images})
    if not assigns:
        return None
    assigns.sort(
        key=lambda a: tuple(a[k].key() for k in sorted(a, key=str))
    )
    eq = make_eq_map(A, B, assigns[0], budget)
    return PiObj(A, B, base, eq)


def enumerate_pi_objects(A, B, budget=DEFAULT):
    """Bounded search for the objects of the product groupoid: total,
    innocent, well-bracketed, noetherian uniform families with a
    consistent equality action."""
    per_sigma = []
    for sigma in A.objects:
        opts = []
        for tau in B.ob(sigma).game.strategies:
            arrow = search_arrow(sigma, tau, budget)
            for c in enumerate_strategies(arrow, budget.max_enum):
                if not (
                    is_total(c, arrow)
                    and is_innocent(c, arrow)
                    and is_well_bracketed(c, arrow)
                    and is_noetherian(c, arrow, budget)
                ):
                    continue
                opts.append((tau, c))
        per_sigma.append((sigma, opts))
    out = []
    for combo in itertools.product(*(o for (_, o) in per_sigma)):
        if not is_uniform([c for (_, c) in combo]):
            continue
        images = {}
        components = {}
        for (sigma, _), (tau, c) in zip(per_sigma, combo):
            images[sigma.digest()] = tau
            components[sigma.digest()] = c
        po = pi_object_from_parts(A, B, images, components, budget)
        if po is not None:
            out.append(po)
        if len(out) > budget.max_enum:
            raise RuntimeError("too many candidate families")
    return out


def _inner_index(m):
    for i, t in enumerate(m.tags):
        if isinstance(t, tuple) and len(t) == 2 and t[0] in ("Sd", "Sc"):
            return i
    return None


def _inner_tag(m):
    i = _inner_index(m)
    return m.tags[i] if i is not None else None


def _strip_inner(m):
    """The move with every tag up to and including the Sd/Sc marker
    removed."""
    i = _inner_index(m)
    return Move(m.payload, m.rank, m.tags[i + 1 :])


def _restrict_inner(s, kind):
    """Moves whose inner tag is of the given kind ('Sd' or 'Sc'),
    with outer side and inner tag stripped."""
    def fn(m):
        inner = _inner_tag(m)
        if inner is not None and inner[0] == kind:
            return _strip_inner(m).tagged(_side(m))
        return None

    return project(s, fn)


def _pi_mor_axioms(mu, po1, po2, budget=DEFAULT):
    """The four axioms on a candidate morphism between families, plus
    the resolved fibre components.  Returns None if an axiom fails."""
    A = po1.base_gwe
    B = po1.dep

    def side_kind(s, side, kind):
        def fn(m):
            if _side(m) != side:
                return None
            inner = _inner_tag(m)
            if inner is None or inner[0] != kind:
                return None
            return _strip_inner(m)

        return project(s, fn)

    # axiom 1: timing; even plays have evenly many base moves per side pair
    for s in mu.positions:
        if len(s) % 2 == 0:
            both = [
                i
                for i in range(len(s))
                if (_inner_tag(s.move(i)) or ("", ""))[0] == "Sd"
            ]
            if len(both) % 2:
                return None
    # axiom 2: the target's interrogation of the base does not exceed
    # what the source play already follows
    for s in mu.positions:
        a2 = side_kind(s, RIGHT, "Sd")
        a1 = side_kind(s, LEFT, "Sd")
        for sigma in A.objects:
            if all(t in sigma.positions for t in threads(a2)):
                if not all(t in sigma.positions for t in threads(a1)):
                    return None
    # axiom 3: the fibre restrictions are witnesses in the fibres
    comps = {}
    for sigma in A.objects:
        plays = set()
        for s in mu.positions:
            a2 = side_kind(s, RIGHT, "Sd")
            a1 = side_kind(s, LEFT, "Sd")
            if not all(t in sigma.positions for t in threads(a2)):
                continue
            if not all(t in sigma.positions for t in threads(a1)):
                continue

            def fn(m):
                inner = _inner_tag(m)
                if inner is None or inner[0] != "Sc":
                    return None
                return _strip_inner(m).tagged(_side(m))

            plays.add(project(s, fn))
        fiber = B.ob(sigma)
        want_dom = po1.apply(sigma)
        want_cod = po2.apply(sigma)
        hit = None
        for cand in fiber.hom(want_dom, want_cod):
            if cand.witness.positions == frozenset(plays):
                hit = cand
                break
        if hit is None:
            return None
        comps[sigma.digest()] = hit
    # axiom 4: naturality against the equality actions
    for m in A.morphisms():
        fiber = B.ob(m.cod)
        lhs = fiber.compose(po2.apply_eq(m), B.arr(m).apply_mor(comps[m.dom.digest()]))
        rhs = fiber.compose(comps[m.cod.digest()], po1.apply_eq(m))
        if lhs != rhs:
            return None
    return comps


def pihat(A, B, budget=DEFAULT, objects=None):
    """The product groupoid: objects by bounded search (or supplied),
    morphisms by bounded search against the four axioms."""
    if objects is None:
        objects = enumerate_pi_objects(A, B, budget)
    piobs = {po.strategy().digest(): po for po in objects}
    game = PredGame([po.strategy() for po in piobs.values()])
    mors = []
    for po1 in piobs.values():
        g1 = po1.strategy()
        for po2 in piobs.values():
            g2 = po2.strategy()
            arrow = search_arrow(g1, g2, budget)
            for mu in enumerate_strategies(arrow, budget.max_enum):
                if not (
                    is_total(mu, arrow)
                    and is_innocent(mu, arrow)
                    and is_well_bracketed(mu, arrow)
                    and is_noetherian(mu, arrow, budget)
                ):
                    continue
                comps = _pi_mor_axioms(mu, po1, po2, budget)
                if comps is None:
                    continue
                mors.append(
                    Morphism(g1, g2, mu, data={"components": comps})
                )
    # keep only invertible candidates
    good = []
    for m in mors:
        if any(
            n.dom == m.cod
            and n.cod == m.dom
            and bang_compose(n.witness, m.witness, budget) == copycat(m.dom, budget)
            and bang_compose(m.witness, n.witness, budget) == copycat(m.cod, budget)
            for n in mors
        ):
            good.append(m)

    def comp(m2, m1):
        return Morphism(
            m1.dom, m2.cod, bang_compose(m2.witness, m1.witness, budget)
        )

    def ident(obj):
        return Morphism(obj, obj, copycat(obj, budget))

    def inv(m):
        for n in good:
            if (
                n.dom == m.cod
                and n.cod == m.dom
                and bang_compose(n.witness, m.witness, budget)
                == copycat(m.dom, budget)
            ):
                return n
        raise KeyError("no inverse")

    g = GwE(game, good, comp, ident, inv)
    g.piobs = piobs
    return g


# ---------------------------------------------------------------------------
# the sum groupoid

def search_arrow(g1, g2, budget=DEFAULT):
    """The implication game used for morphism search, with a budget
    tightened to the sizes of the endpoint games."""
    from .budget import Budget

    L = 2 * g1.max_length() + g2.max_length() + 2
    b = Budget(
        min(budget.max_play_length, L),
        min(budget.max_threads, 2),
        budget.max_enum,
    )
    return linear_implication(as_strategy_loose(exponential(g1, b)), g2, b)


def pair_strategy(sigma, tau, budget=DEFAULT):
    return as_strategy_loose(product(sigma, tau, budget))


def sigmahat(A, B, budget=DEFAULT):
    """The sum groupoid: pairs of objects; a morphism is a base
    morphism together with a fibre morphism out of the transported
    second component."""
    objs = []
    pair_of = {}
    for sigma in A.objects:
        for tau in B.ob(sigma).game.strategies:
            p = pair_strategy(sigma, tau, budget)
            objs.append(p)
            pair_of[p.digest()] = (sigma, tau)
    game = PredGame(objs)
    mors = []
    for rho in A.morphisms():
        ep = B.arr(rho)
        fiber2 = B.ob(rho.cod)
        for tau in B.ob(rho.dom).game.strategies:
            moved = ep.apply_obj(tau)
            for tau2 in fiber2.game.strategies:
                for fmor in fiber2.hom(moved, tau2):
                    dom = pair_strategy(rho.dom, tau, budget)
                    cod = pair_strategy(rho.cod, tau2, budget)
                    w = pair_strategy(rho.witness, fmor.witness, budget)
                    mors.append(
                        Morphism(dom, cod, w, data={"fst": rho, "snd": fmor})
                    )

    def comp(m2, m1):
        r2, f2 = m2.data["fst"], m2.data["snd"]
        r1, f1 = m1.data["fst"], m1.data["snd"]
        rho = A.compose(r2, r1)
        fiber = B.ob(r2.cod)
        # twisted composition on the second components
        snd = fiber.compose(f2, B.arr(r2).apply_mor(f1))
        return Morphism(
            m1.dom,
            m2.cod,
            pair_strategy(rho.witness, snd.witness, budget),
            data={"fst": rho, "snd": snd},
        )

    def ident(obj):
        sigma, tau = pair_of[obj.digest()]
        rho = A.identity(sigma)
        f = B.ob(sigma).identity(tau)
        return Morphism(
            obj, obj, pair_strategy(rho.witness, f.witness, budget),
            data={"fst": rho, "snd": f},
        )

    def inv(m):
        rho, f = m.data["fst"], m.data["snd"]
        rinv = A.inverse(rho)
        finv = B.ob(rho.cod).inverse(f)
        snd = B.arr(rinv).apply_mor(finv)
        return Morphism(
            m.cod,
            m.dom,
            pair_strategy(rinv.witness, snd.witness, budget),
            data={"fst": rinv, "snd": snd},
        )

    g = GwE(game, mors, comp, ident, inv)
    g.pair_of = pair_of
    return g


# ---------------------------------------------------------------------------
# the identity groupoid

def idhat(g, s1, s2, budget=DEFAULT):
    """The discrete groupoid on the proofs that s1 equals s2."""
    ws = [m.witness for m in g.hom(s1, s2)]
    return discrete_gwe(PredGame(ws), budget)
