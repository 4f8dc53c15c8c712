"""The model of dependent type theory on groupoids of strategies.

Contexts are groupoids-of-strategies, types over a context are
dependent groupoids, and terms of a type are product-groupoid objects
(families with an equality action).  Substitution is composition with
an equality-preserving map; comprehension is the sum groupoid, with
the projections and the pairing map built from retagged copy-cats so
that the eight context-extension equations hold on the nose.

The type formers live here too: the product, sum and identity types
with their transports.  Transports relabel plays along position
bijections and replay them as mirror strategies, so an identity
morphism transports to an honest copy-cat and transports compose
exactly.
"""

from __future__ import annotations

from .budget import DEFAULT, Budget
from .dependent import (
    DGwE,
    PiObj,
    component_bijections,
    dependent_eq_union,
    dependent_union,
    enumerate_pi_objects,
    idhat,
    make_eq_map,
    pair_strategy,
    pi_object_from_parts,
    pihat,
    relink_component,
    relink_position,
    sigmahat,
)
from .gwe import (
    EpMap,
    GwE,
    Morphism,
    bang_compose,
    discrete_gwe,
    gwe_from_witnesses,
    identity_ep,
    lazy_component,
)
from .isom import PosBij, mirror_strategy, to_bijection
from .kernel import EMPTY, Game, JSeq, Move, flat, project, terminal_game
from .plimap import PliMap, compose_maps
from .predicative import PredGame, value_strategy
from .strategies import (
    LEFT,
    RIGHT,
    Strategy,
    _side,
    copycat,
    flip,
    lift_to_arrow,
    pairing,
    restrict_side,
)


# ---------------------------------------------------------------------------
# atomic groupoids

def empty_play_strategy():
    """The unique strategy on the game with no moves."""
    return Strategy({EMPTY}, {})


def terminal_context(budget=DEFAULT):
    """The context with a single object and only its identity."""
    return discrete_gwe(PredGame([empty_play_strategy()]), budget)


def terminal_map(g, budget=DEFAULT):
    """The unique map from any context into the terminal context."""
    one = terminal_context(budget)
    star = one.game.strategies[0]
    comp = {}
    proj = {}
    for s in g.game.strategies:
        comp[s.digest()] = Strategy({EMPTY}, {})
        proj[s.digest()] = star.digest()
    base = PliMap(g.game, one.game, comp, proj)
    assign = {m.key(): one.identity(star) for m in g.morphisms()}
    eq = make_eq_map_ctx(g, one, assign)
    return EpMap(g, one, base, eq)


def make_eq_map_ctx(src, dst, assign):
    """Package a proof assignment between two contexts as a family on
    their equality games (components replay the image witness)."""
    comp = {}
    proj = {}
    for m in src.morphisms():
        img = assign[m.key()]
        comp[m.witness.digest()] = lazy_component(img.witness)
        proj[m.witness.digest()] = img.witness.digest()
    return PliMap(src.eq_game(), dst.eq_game(), comp, proj)


def unit_gwe(budget=DEFAULT):
    g = flat(["ok"])
    return discrete_gwe(PredGame([value_strategy(g, "ok")]), budget)


def nat_gwe(k, budget=DEFAULT):
    g = flat(list(range(k)))
    return discrete_gwe(
        PredGame([value_strategy(g, n) for n in range(k)]), budget
    )


def empty_gwe(budget=DEFAULT):
    """The empty type: a groupoid with no objects."""
    return discrete_gwe(PredGame([]), budget)


def bool_game():
    """Two questions, one answer each; its unique total strategy is
    the point of the bit groupoid."""
    qt = Move(("q", "tt"))
    qf = Move(("q", "ff"))
    tt = Move("tt")
    ff = Move("ff")
    lab = {qt: "OQ", qf: "OQ", tt: "PA", ff: "PA"}
    pos = {
        EMPTY,
        JSeq(((qt, None),)),
        JSeq(((qt, None), (tt, 0))),
        JSeq(((qf, None),)),
        JSeq(((qf, None), (ff, 0))),
    }
    return Game(pos, lab)


def bool_gwe(budget=DEFAULT):
    """The bit groupoid: one object, two proofs that it equals itself
    (the copy-cat and the swap)."""
    b = bool_game()
    point = Strategy(b.positions, b.labeling)
    sw = {}
    for s in b.positions:
        sw[s] = project(
            s,
            lambda m: {
                ("q", "tt"): Move(("q", "ff")),
                ("q", "ff"): Move(("q", "tt")),
                "tt": Move("ff"),
                "ff": Move("tt"),
            }[m.payload],
        )
    rv = mirror_strategy(PosBij(sw.items()), point, point, budget)
    return gwe_from_witnesses(PredGame([point]), [(point, point, rv)], budget)


# ---------------------------------------------------------------------------
# substitution

def subst_ty(a, phi):
    """The type over the source of phi whose fibres are pulled back
    along phi's object and proof actions."""
    base = phi.src
    ob = {d.digest(): a.ob(phi.apply_obj(d)) for d in base.objects}
    arr = {m.key(): a.arr(phi.apply_mor(m)) for m in base.morphisms()}
    return DGwE(base, ob, arr)


def subst_tm(t, phi, budget=DEFAULT):
    """The term over the source of phi: components are composed with
    phi's components, the equality action with phi's proof action."""
    a2 = subst_ty(t.dep, phi)
    d_ctx = phi.src
    images = {}
    comps = {}
    for d in d_ctx.objects:
        dd = d.digest()
        g = phi.apply_obj(d)
        images[dd] = t.apply(g)
        comps[dd] = bang_compose(
            t.base.component(g), phi.base.component(d), budget
        )
    base = PliMap(
        d_ctx.game,
        dependent_union(a2),
        comps,
        {dd: images[dd].digest() for dd in images},
    )
    assign = {
        m.key(): t.apply_eq(phi.apply_mor(m)) for m in d_ctx.morphisms()
    }
    eq = make_eq_map(d_ctx, a2, assign, budget)
    return PiObj(d_ctx, a2, base, eq)


# ---------------------------------------------------------------------------
# comprehension

def comprehension(g, a, budget=DEFAULT):
    """Context extension: the sum groupoid of the type."""
    from .strategies import _memo_get

    key = (
        "sigmahat",
        g.digest(),
        a.digest(),
        budget.max_play_length,
        budget.max_threads,
    )
    return _memo_get(key, lambda: sigmahat(g, a, budget))


def _first_component(sigma, budget=DEFAULT):
    """The first-projection strategy on !(sigma x tau) -o sigma."""
    def fn(m):
        if _side(m) == LEFT:
            return m.untagged().tagged(LEFT).tagged(LEFT)
        return m

    return copycat(sigma, budget).retagged(fn)


def _second_component(tau, budget=DEFAULT):
    """The second-projection strategy on !(sigma x tau) -o tau."""
    def fn(m):
        if _side(m) == LEFT:
            return m.untagged().tagged(RIGHT).tagged(LEFT)
        return m

    return copycat(tau, budget).retagged(fn)


def first_projection(g, a, ga, budget=DEFAULT):
    """p: the display map from the extended context."""
    comp = {}
    proj = {}
    for p in ga.game.strategies:
        sigma, tau = ga.pair_of[p.digest()]
        comp[p.digest()] = _first_component(sigma, budget)
        proj[p.digest()] = sigma.digest()
    base = PliMap(ga.game, g.game, comp, proj)
    assign = {m.key(): m.data["fst"] for m in ga.morphisms()}
    eq = make_eq_map_ctx(ga, g, assign)
    return EpMap(ga, g, base, eq)


def second_projection(g, a, ga, budget=DEFAULT):
    """v: the variable term of the extended context."""
    ap = subst_ty(a, first_projection(g, a, ga, budget))
    images = {}
    comps = {}
    for p in ga.game.strategies:
        sigma, tau = ga.pair_of[p.digest()]
        images[p.digest()] = tau
        comps[p.digest()] = _second_component(tau, budget)
    base = PliMap(
        ga.game,
        dependent_union(ap),
        comps,
        {d: images[d].digest() for d in images},
    )
    assign = {m.key(): m.data["snd"] for m in ga.morphisms()}
    eq = make_eq_map(ga, ap, assign, budget)
    return PiObj(ga, ap, base, eq)


def extension(phi, tau, ga, budget=DEFAULT):
    """The pairing map <phi, tau> into the extended context."""
    d_ctx = phi.src
    comp = {}
    proj = {}
    for d in d_ctx.objects:
        dd = d.digest()
        target = pair_strategy(phi.apply_obj(d), tau.apply(d), budget)
        comp[dd] = pairing(phi.base.component(d), tau.base.component(d))
        proj[dd] = target.digest()
    base = PliMap(d_ctx.game, ga.game, comp, proj)
    assign = {}
    for m in d_ctx.morphisms():
        fst = phi.apply_mor(m)
        snd = tau.apply_eq(m)
        w = pair_strategy(fst.witness, snd.witness, budget)
        assign[m.key()] = ga.by_witness(w.digest())
    eq = make_eq_map_ctx(d_ctx, ga, assign)
    return EpMap(d_ctx, ga, base, eq)


# ---------------------------------------------------------------------------
# the eight context equations

def cwf_law_report(g, a, phi, t, psi, tau=None, budget=DEFAULT):
    """The eight equations of substitution and context extension.

    g: a context; a: a type over g; phi: a map into g; t: a term of a
    over g; psi: a map into phi's source; tau: a term of a{phi} (the
    substituted t when omitted).
    """
    ga = comprehension(g, a, budget)
    p = first_projection(g, a, ga, budget)
    v = second_projection(g, a, ga, budget)
    if tau is None:
        tau = subst_tm(t, phi, budget)
    ext = extension(phi, tau, ga, budget)
    from .gwe import compose_ep

    report = {}
    report["ty_id"] = subst_ty(a, identity_ep(g, budget)) == a
    report["ty_comp"] = subst_ty(a, compose_ep(phi, psi, budget)) == subst_ty(
        subst_ty(a, phi), psi
    )
    report["tm_id"] = subst_tm(t, identity_ep(g, budget), budget) == t
    report["tm_comp"] = subst_tm(t, compose_ep(phi, psi, budget), budget) == subst_tm(
        subst_tm(t, phi, budget), psi, budget
    )
    report["cons_l"] = compose_ep(p, ext, budget) == phi
    report["cons_r"] = subst_tm(v, ext, budget) == tau
    report["cons_nat"] = compose_ep(ext, psi, budget) == extension(
        compose_ep(phi, psi, budget), subst_tm(tau, psi, budget), ga, budget
    )
    report["cons_id"] = extension(p, v, ga, budget) == identity_ep(ga, budget)
    return report


# ---------------------------------------------------------------------------
# shared construction caches

def _cached(key, make):
    from .strategies import _memo_get

    return _memo_get(key, make)


def _bkey(budget):
    return (budget.max_play_length, budget.max_threads)


# ---------------------------------------------------------------------------
# the product type

def _arrow_labeling(dom, cod):
    lab = {}
    for m in dom.moves:
        lab[m.tagged(LEFT)] = flip(dom.labeling[m])
    for m in cod.moves:
        lab[m.tagged(RIGHT)] = cod.labeling[m]
    return lab


def fiber_type(g, a, b, ga, gamma, budget=DEFAULT):
    """The type over the fibre at gamma: b along pairs with gamma as
    the fixed first component."""
    fib = a.ob(gamma)
    idg = g.identity(gamma)
    ob = {}
    arr = {}
    for x in fib.objects:
        ob[x.digest()] = b.ob(pair_strategy(gamma, x, budget))
    for f in fib.morphisms():
        w = pair_strategy(idg.witness, f.witness, budget)
        arr[f.key()] = b.arr(ga.by_witness(w.digest()))
    return DGwE(fib, ob, arr)


def _mat_move(m, d, c):
    if _side(m) == LEFT:
        return m.untagged().tagged(("Sd", d)).tagged(LEFT)
    return m.untagged().tagged(("Sc", c)).tagged(RIGHT)


def _mat_play(s, d, c):
    return project(s, lambda m: _mat_move(m, d, c))


def _pair_morphism(ga, rho, f, budget=DEFAULT):
    """The extended-context morphism with the given parts."""
    w = pair_strategy(rho.witness, f.witness, budget)
    return ga.by_witness(w.digest())


def _pi_transport(a, b, ga, fibers, ftypes, rho, budget=DEFAULT):
    """The action of the product type on a context proof: each family
    is relinked componentwise; the map's components mirror the induced
    bijection on materialized plays."""
    src = fibers[rho.dom.digest()]
    dst = fibers[rho.cod.digest()]
    arho = a.arr(rho)
    fib1 = a.ob(rho.dom)
    fib2 = a.ob(rho.cod)
    dom_bijs = {}
    links = {}
    for x in fib1.objects:
        x2 = arho.apply_obj(x)
        dom_bij = to_bijection(arho.base.component(x), x, x2)
        mp = _pair_morphism(ga, rho, fib2.identity(x2), budget)
        links[x.digest()] = (x2, dom_bij, b.arr(mp))
    comp = {}
    proj = {}
    matbij = {}
    for po in src.piobs.values():
        images = {}
        comps = {}
        pairs = []
        for x in fib1.objects:
            x2, dom_bij, bm = links[x.digest()]
            w = po.apply(x)
            w2 = bm.apply_obj(w)
            cod_bij = to_bijection(bm.base.component(w), w, w2)
            c = po.base.component(x)
            comps[x2.digest()] = relink_component(c, dom_bij, cod_bij, x2, w2)
            images[x2.digest()] = w2
            d1, c1 = x.digest(), w.digest()
            d2, c2 = x2.digest(), w2.digest()
            for s in c.positions:
                pairs.append(
                    (
                        _mat_play(s, d1, c1),
                        _mat_play(
                            relink_position(s, dom_bij, cod_bij), d2, c2
                        ),
                    )
                )
        bty2 = ftypes[rho.cod.digest()]
        po2 = pi_object_from_parts(fib2, bty2, images, comps, budget)
        po2 = dst.piobs[po2.strategy().digest()]
        bij = PosBij(pairs)
        d = po.strategy().digest()
        matbij[d] = bij
        comp[d] = mirror_strategy(bij, po.strategy(), po2.strategy(), budget)
        proj[d] = po2.strategy().digest()
    base = PliMap(src.game, dst.game, comp, proj)
    assign = {}
    for m in src.morphisms():
        w2 = relink_component(
            m.witness,
            matbij[m.dom.digest()],
            matbij[m.cod.digest()],
            dst.piobs[proj[m.dom.digest()]].strategy(),
            dst.piobs[proj[m.cod.digest()]].strategy(),
        )
        assign[m.key()] = dst.by_witness(w2.digest())
    eq = make_eq_map_ctx(src, dst, assign)
    return EpMap(src, dst, base, eq)


def pi_former(g, a, b, budget=DEFAULT):
    """The product type over g of a type b over the extension g.a.
    Its fibres are product groupoids; the groupoid structure attaches
    the fibre types for the term formers."""
    key = ("pi_former", g.digest(), a.digest(), b.digest(), _bkey(budget))

    def make():
        ga = comprehension(g, a, budget)
        fibers = {}
        ftypes = {}
        for gamma in g.objects:
            bty = fiber_type(g, a, b, ga, gamma, budget)
            ftypes[gamma.digest()] = bty
            fibers[gamma.digest()] = _cached(
                ("pihat", a.ob(gamma).digest(), bty.digest(), _bkey(budget)),
                lambda: pihat(a.ob(gamma), bty, budget),
            )
        arr = {}
        for rho in g.morphisms():
            arr[rho.key()] = _pi_transport(
                a, b, ga, fibers, ftypes, rho, budget
            )
        dg = DGwE(g, fibers, arr)
        dg.fiber_ty = ftypes
        return dg

    return _cached(key, make)


def _curry_move(m, da, dw):
    if _side(m) == LEFT:
        if m.tags[1] == LEFT:
            return m.untagged().untagged().tagged(LEFT)
        return (
            m.untagged()
            .untagged()
            .tagged(("Sd", da))
            .tagged(LEFT)
            .tagged(RIGHT)
        )
    return m.untagged().tagged(("Sc", dw)).tagged(RIGHT).tagged(RIGHT)


def _uncurry_move(m):
    if _side(m) == LEFT:
        return m.untagged().tagged(LEFT).tagged(LEFT)
    if m.tags[1] == LEFT:
        return (
            m.untagged().untagged().untagged().tagged(RIGHT).tagged(LEFT)
        )
    return m.untagged().untagged().untagged().tagged(RIGHT)


def curry_term(g, a, b, psi, budget=DEFAULT):
    """Abstraction: a section over the extended context becomes a
    section of the product type, by pure retagging of its plays."""
    ga = comprehension(g, a, budget)
    pity = pi_former(g, a, b, budget)
    images = {}
    comps = {}
    for gamma in g.objects:
        fiber = pity.ob(gamma)
        bty = pity.fiber_ty[gamma.digest()]
        fib = a.ob(gamma)
        im = {}
        cp = {}
        for x in fib.objects:
            p = pair_strategy(gamma, x, budget)
            w = psi.apply(p)
            c = psi.base.component(p)

            def drop(m):
                if _side(m) == LEFT:
                    if m.tags[1] == LEFT:
                        return None
                    return m.untagged().untagged().tagged(LEFT)
                return m

            cp[x.digest()] = Strategy(
                {project(s, drop) for s in c.positions},
                _arrow_labeling(x, w),
            )
            im[x.digest()] = w
        po = pi_object_from_parts(fib, bty, im, cp, budget)
        po = fiber.piobs[po.strategy().digest()]
        mat = po.strategy()
        pos = set()
        for x in fib.objects:
            p = pair_strategy(gamma, x, budget)
            da = x.digest()
            dw = psi.apply(p).digest()
            for s in psi.base.component(p).positions:
                pos.add(
                    project(s, lambda m, da=da, dw=dw: _curry_move(m, da, dw))
                )
        comps[gamma.digest()] = Strategy(pos, _arrow_labeling(gamma, mat))
        images[gamma.digest()] = mat
    return pi_object_from_parts(g, pity, images, comps, budget)


def uncurry_term(g, a, b, kappa, budget=DEFAULT):
    """The inverse retagging: a section of the product type becomes a
    section of b over the extended context."""
    ga = comprehension(g, a, budget)
    pity = pi_former(g, a, b, budget)
    images = {}
    comps = {}
    for p in ga.objects:
        gamma, x = ga.pair_of[p.digest()]
        fiber = pity.ob(gamma)
        po = fiber.piobs[kappa.apply(gamma).digest()]
        w = po.apply(x)
        images[p.digest()] = w
        mat_plays = {
            _mat_play(s, x.digest(), w.digest())
            for s in po.base.component(x).positions
        }
        pos = set()
        for s in kappa.base.component(gamma).positions:
            if restrict_side(s, RIGHT) in mat_plays:
                pos.add(project(s, _uncurry_move))
        comps[p.digest()] = Strategy(pos, _arrow_labeling(p, w))
    return pi_object_from_parts(ga, b, images, comps, budget)


def app_term(g, a, b, kappa, alpha, budget=DEFAULT):
    """Application: substitute the argument into the uncurried body."""
    ga = comprehension(g, a, budget)
    body = uncurry_term(g, a, b, kappa, budget)
    ext = extension(identity_ep(g, budget), alpha, ga, budget)
    return subst_tm(body, ext, budget)


def weakening(phi, a, ga, budget=DEFAULT):
    """phi lifted to the comprehensions: the pairing of phi after the
    display map with the variable term."""
    from .gwe import compose_ep

    aphi = subst_ty(a, phi)
    d = phi.src
    dga = comprehension(d, aphi, budget)
    p = first_projection(d, aphi, dga, budget)
    v = second_projection(d, aphi, dga, budget)
    return extension(compose_ep(phi, p, budget), v, ga, budget), dga


def pi_law_report(g, a, b, psi, kappa, alpha, phi, budget=DEFAULT):
    """The five equations of the product former.

    g: a context; a: a type over g; b: a type over g.a; psi: a term
    of b; kappa: a term of the product type; alpha: a term of a;
    phi: a map into g.
    """
    ga = comprehension(g, a, budget)
    ext = extension(identity_ep(g, budget), alpha, ga, budget)
    phip, dga = weakening(phi, a, ga, budget)
    d = phi.src
    aphi = subst_ty(a, phi)
    bphi = subst_ty(b, phip)
    report = {}
    report["pi_comp"] = app_term(
        g, a, b, curry_term(g, a, b, psi, budget), alpha, budget
    ) == subst_tm(psi, ext, budget)
    report["pi_subst"] = subst_ty(pi_former(g, a, b, budget), phi) == pi_former(
        d, aphi, bphi, budget
    )
    report["lam_subst"] = subst_tm(
        curry_term(g, a, b, psi, budget), phi, budget
    ) == curry_term(d, aphi, bphi, subst_tm(psi, phip, budget), budget)
    report["app_subst"] = subst_tm(
        app_term(g, a, b, kappa, alpha, budget), phi, budget
    ) == app_term(
        d,
        aphi,
        bphi,
        subst_tm(kappa, phi, budget),
        subst_tm(alpha, phi, budget),
        budget,
    )
    report["lam_uniq"] = (
        curry_term(g, a, b, uncurry_term(g, a, b, kappa, budget), budget)
        == kappa
    )
    return report


# ---------------------------------------------------------------------------
# the sum type

def _sigma_transport(a, b, ga, fibers, rho, budget=DEFAULT):
    """The action of the sum type on a context proof: both halves of
    every pair are carried along, and the components mirror the play
    bijection induced on the pairs."""
    src = fibers[rho.dom.digest()]
    dst = fibers[rho.cod.digest()]
    arho = a.arr(rho)
    fib1 = a.ob(rho.dom)
    fib2 = a.ob(rho.cod)
    links = {}
    for x in fib1.objects:
        x2 = arho.apply_obj(x)
        dom_bij = to_bijection(arho.base.component(x), x, x2)
        mp = _pair_morphism(ga, rho, fib2.identity(x2), budget)
        links[x.digest()] = (x2, dom_bij, b.arr(mp))
    comp = {}
    proj = {}
    for pr in src.objects:
        x, y = src.pair_of[pr.digest()]
        x2, dom_bij, bm = links[x.digest()]
        y2 = bm.apply_obj(y)
        cod_bij = to_bijection(bm.base.component(y), y, y2)
        pr2 = pair_strategy(x2, y2, budget)
        pairs = []
        for s in pr.positions:
            if len(s) == 0:
                pairs.append((s, s))
                continue
            side = _side(s.move(0))
            bij = dom_bij if side == LEFT else cod_bij
            t = bij.fwd[restrict_side(s, side)]
            pairs.append(
                (s, project(t, lambda m, side=side: m.tagged(side)))
            )
        d = pr.digest()
        comp[d] = mirror_strategy(PosBij(pairs), pr, pr2, budget)
        proj[d] = pr2.digest()
    base = PliMap(src.game, dst.game, comp, proj)
    assign = {}
    for m in src.morphisms():
        f, h = m.data["fst"], m.data["snd"]
        f2 = arho.apply_mor(f)
        _, _, bmc = links[f.cod.digest()]
        h2 = bmc.apply_mor(h)
        w = pair_strategy(f2.witness, h2.witness, budget)
        assign[m.key()] = dst.by_witness(w.digest())
    eq = make_eq_map_ctx(src, dst, assign)
    return EpMap(src, dst, base, eq)


def sigma_former(g, a, b, budget=DEFAULT):
    """The sum type over g of a type b over the extension g.a: its
    fibres are the sum groupoids of the fibre types."""
    key = ("sigma_former", g.digest(), a.digest(), b.digest(), _bkey(budget))

    def make():
        ga = comprehension(g, a, budget)
        fibers = {}
        ftypes = {}
        for gamma in g.objects:
            bty = fiber_type(g, a, b, ga, gamma, budget)
            ftypes[gamma.digest()] = bty
            fibers[gamma.digest()] = comprehension(a.ob(gamma), bty, budget)
        arr = {}
        for rho in g.morphisms():
            arr[rho.key()] = _sigma_transport(a, b, ga, fibers, rho, budget)
        dg = DGwE(g, fibers, arr)
        dg.fiber_ty = ftypes
        return dg

    return _cached(key, make)


def _assoc_move(m):
    if _side(m) == LEFT:
        if m.tags[1] == LEFT:
            return m.untagged().untagged().tagged(LEFT)
        return m.untagged().untagged().tagged(LEFT).tagged(RIGHT)
    return m.untagged().tagged(RIGHT).tagged(RIGHT)


def pair_map(g, a, b, budget=DEFAULT):
    """The reassociation between the iterated extension (g.a).b and
    the extension by the sum g.(sum a b), with its inverse."""
    ga = comprehension(g, a, budget)
    gab = comprehension(ga, b, budget)
    sty = sigma_former(g, a, b, budget)
    gs = comprehension(g, sty, budget)
    comp = {}
    proj = {}
    comp2 = {}
    proj2 = {}
    for q in gab.objects:
        pr, y = gab.pair_of[q.digest()]
        gamma, x = ga.pair_of[pr.digest()]
        target = pair_strategy(gamma, pair_strategy(x, y, budget), budget)
        bij = PosBij((s, project(s, _assoc_move)) for s in q.positions)
        comp[q.digest()] = mirror_strategy(bij, q, target, budget)
        proj[q.digest()] = target.digest()
        comp2[target.digest()] = mirror_strategy(
            bij.inverse(), target, q, budget
        )
        proj2[target.digest()] = q.digest()
    base = PliMap(gab.game, gs.game, comp, proj)
    base2 = PliMap(gs.game, gab.game, comp2, proj2)
    assign = {}
    assign2 = {}
    for m in gab.morphisms():
        n, h = m.data["fst"], m.data["snd"]
        rho, f = n.data["fst"], n.data["snd"]
        w = pair_strategy(
            rho.witness, pair_strategy(f.witness, h.witness, budget), budget
        )
        m2 = gs.by_witness(w.digest())
        assign[m.key()] = m2
        assign2[m2.key()] = m
    eq = make_eq_map_ctx(gab, gs, assign)
    eq2 = make_eq_map_ctx(gs, gab, assign2)
    return EpMap(gab, gs, base, eq), EpMap(gs, gab, base2, eq2)


def r_sigma(psi, pair_bwd, budget=DEFAULT):
    """The sum eliminator: substitution along the inverse of the
    reassociation map."""
    return subst_tm(psi, pair_bwd, budget)


def sigma_law_report(g, a, b, p_ty, psi, theta, phi, budget=DEFAULT):
    """The five equations of the sum former.

    p_ty: a type over g.(sum a b); psi: a term of p_ty pulled back
    along the reassociation; theta: a term of p_ty; phi: a map into g.
    """
    from .gwe import compose_ep

    ga = comprehension(g, a, budget)
    gab = comprehension(ga, b, budget)
    sty = sigma_former(g, a, b, budget)
    gs = comprehension(g, sty, budget)
    pf, pb = pair_map(g, a, b, budget)
    d = phi.src
    aphi = subst_ty(a, phi)
    phi1, dga = weakening(phi, a, ga, budget)
    bphi = subst_ty(b, phi1)
    phi2, dgab = weakening(phi1, b, gab, budget)
    styd = sigma_former(d, aphi, bphi, budget)
    phis, dgs = weakening(phi, sty, gs, budget)
    pfd, pbd = pair_map(d, aphi, bphi, budget)
    report = {}
    report["sigma_comp"] = subst_tm(
        r_sigma(psi, pb, budget), pf, budget
    ) == psi
    report["sigma_subst"] = subst_ty(sty, phi) == styd
    report["pair_subst"] = compose_ep(pf, phi2, budget) == compose_ep(
        phis, pfd, budget
    )
    report["r_sigma_subst"] = subst_tm(
        r_sigma(psi, pb, budget), phis, budget
    ) == r_sigma(subst_tm(psi, phi2, budget), pbd, budget)
    report["r_sigma_uniq"] = r_sigma(
        subst_tm(theta, pf, budget), pb, budget
    ) == theta
    return report


# ---------------------------------------------------------------------------
# the identity type

def _id_transport(a, ga, gaa, fibers, m, budget=DEFAULT):
    """The action of the identity type on a proof of the doubled
    context: conjugation, with components mirroring the relinked
    plays of each witness."""
    src = fibers[m.dom.digest()]
    dst = fibers[m.cod.digest()]
    n, f2 = m.data["fst"], m.data["snd"]
    rho, f1 = n.data["fst"], n.data["snd"]
    pr1, x2 = gaa.pair_of[m.dom.digest()]
    _, x1 = ga.pair_of[pr1.digest()]
    arho = a.arr(rho)
    fib2 = a.ob(rho.cod)
    x1m = arho.apply_obj(x1)
    x2m = arho.apply_obj(x2)
    bij1 = to_bijection(arho.base.component(x1), x1, x1m).then(
        to_bijection(f1.witness, x1m, f1.cod)
    )
    bij2 = to_bijection(arho.base.component(x2), x2, x2m).then(
        to_bijection(f2.witness, x2m, f2.cod)
    )
    fib1 = a.ob(rho.dom)
    comp = {}
    proj = {}
    assign = {}
    for w in src.objects:
        am = fib1.by_witness(w.digest())
        a2 = fib2.compose(
            f2, fib2.compose(arho.apply_mor(am), fib2.inverse(f1))
        )
        w2 = a2.witness
        pairs = [(s, relink_position(s, bij1, bij2)) for s in w.positions]
        if {t for (_, t) in pairs} != w2.positions:
            raise ValueError("conjugated witness does not match relinking")
        comp[w.digest()] = mirror_strategy(PosBij(pairs), w, w2, budget)
        proj[w.digest()] = w2.digest()
        assign[src.identity(w).key()] = dst.identity(w2)
    base = PliMap(src.game, dst.game, comp, proj)
    eq = make_eq_map_ctx(src, dst, assign)
    return EpMap(src, dst, base, eq)


def id_former(g, a, budget=DEFAULT):
    """The identity type over the doubled context g.a.a: discrete
    fibres of equality proofs between the two copies."""
    key = ("id_former", g.digest(), a.digest(), _bkey(budget))

    def make():
        ga = comprehension(g, a, budget)
        p = first_projection(g, a, ga, budget)
        ap = subst_ty(a, p)
        gaa = comprehension(ga, ap, budget)
        fibers = {}
        for q in gaa.objects:
            pr, x2 = gaa.pair_of[q.digest()]
            gamma, x1 = ga.pair_of[pr.digest()]
            fibers[q.digest()] = _cached(
                (
                    "idhat",
                    a.ob(gamma).digest(),
                    x1.digest(),
                    x2.digest(),
                    _bkey(budget),
                ),
                lambda: idhat(a.ob(gamma), x1, x2, budget),
            )
        arr = {}
        for m in gaa.morphisms():
            arr[m.key()] = _id_transport(a, ga, gaa, fibers, m, budget)
        return DGwE(gaa, fibers, arr)

    return _cached(key, make)


def diagonal_map(g, a, budget=DEFAULT):
    """The duplication g.a into g.a.a: the identity paired with the
    variable term."""
    key = ("diagonal_map", g.digest(), a.digest(), _bkey(budget))
    return _cached(key, lambda: _diagonal_map(g, a, budget))


def _diagonal_map(g, a, budget):
    ga = comprehension(g, a, budget)
    p = first_projection(g, a, ga, budget)
    v = second_projection(g, a, ga, budget)
    ap = subst_ty(a, p)
    gaa = comprehension(ga, ap, budget)
    return extension(identity_ep(ga, budget), v, gaa, budget)


def refl_term(g, a, budget=DEFAULT):
    """The reflexivity proof as a term over g.a of the identity type
    pulled back along the duplication."""
    key = ("refl_term", g.digest(), a.digest(), _bkey(budget))
    return _cached(key, lambda: _refl_term(g, a, budget))


def _refl_term(g, a, budget):
    ga = comprehension(g, a, budget)
    idty = id_former(g, a, budget)
    idd = subst_ty(idty, diagonal_map(g, a, budget))
    images = {}
    comps = {}
    for pr in ga.objects:
        gamma, x = ga.pair_of[pr.digest()]
        cc = copycat(x, budget)
        images[pr.digest()] = cc
        comps[pr.digest()] = lift_to_arrow(cc)
    return pi_object_from_parts(ga, idd, images, comps, budget)


def refl_map(g, a, budget=DEFAULT):
    """g.a into the total context of the identity type."""
    key = ("refl_map", g.digest(), a.digest(), _bkey(budget))
    return _cached(key, lambda: _refl_map(g, a, budget))


def _refl_map(g, a, budget):
    ga = comprehension(g, a, budget)
    idty = id_former(g, a, budget)
    gaa = idty.base
    theta = comprehension(gaa, idty, budget)
    return extension(
        diagonal_map(g, a, budget), refl_term(g, a, budget), theta, budget
    )


def r_id(g, a, p_ty, tau, budget=DEFAULT):
    """The identity eliminator: every proof object is connected to a
    reflexivity object by a canonical proof, along which the value of
    tau is transported."""
    from .gwe import compose_ep

    ga = comprehension(g, a, budget)
    p = first_projection(g, a, ga, budget)
    ap = subst_ty(a, p)
    idty = id_former(g, a, budget)
    gaa = idty.base
    theta = comprehension(gaa, idty, budget)
    p1 = first_projection(gaa, idty, theta, budget)
    p2 = first_projection(ga, ap, gaa, budget)
    pi = compose_ep(p2, p1, budget)
    images = {}
    comps = {}
    for t in theta.objects:
        q, w = theta.pair_of[t.digest()]
        pr, x2 = gaa.pair_of[q.digest()]
        gamma, x1 = ga.pair_of[pr.digest()]
        idpr = ga.identity(pr)
        mu = gaa.by_witness(
            pair_strategy(idpr.witness, w, budget).digest()
        )
        n = theta.by_witness(
            pair_strategy(
                mu.witness, idty.ob(q).identity(w).witness, budget
            ).digest()
        )
        pn = p_ty.arr(n)
        val0 = tau.apply(pr)
        images[t.digest()] = pn.apply_obj(val0)
        comps[t.digest()] = bang_compose(
            pn.base.component(val0),
            bang_compose(
                tau.base.component(pr), pi.base.component(t), budget
            ),
            budget,
        )
    return pi_object_from_parts(theta, p_ty, images, comps, budget)


def id_law_report(g, a, p_ty, tau, phi, budget=DEFAULT):
    """The four equations of the identity former.

    p_ty: a type over the total context of the identity type; tau: a
    term of p_ty pulled back along reflexivity; phi: a map into g.
    """
    ga = comprehension(g, a, budget)
    p = first_projection(g, a, ga, budget)
    ap = subst_ty(a, p)
    gaa = comprehension(ga, ap, budget)
    idty = id_former(g, a, budget)
    theta = comprehension(gaa, idty, budget)
    refl = refl_map(g, a, budget)
    d = phi.src
    aphi = subst_ty(a, phi)
    phi1, dga = weakening(phi, a, ga, budget)
    phi2, dgaa = weakening(phi1, ap, gaa, budget)
    idtyd = id_former(d, aphi, budget)
    from .gwe import compose_ep

    report = {}
    report["id_comp"] = subst_tm(
        r_id(g, a, p_ty, tau, budget), refl, budget
    ) == tau
    report["id_subst"] = subst_ty(idty, phi2) == idtyd
    phi3, dth = weakening(phi2, idty, theta, budget)
    report["refl_subst"] = compose_ep(refl, phi1, budget) == compose_ep(
        phi3, refl_map(d, aphi, budget), budget
    )
    report["r_id_subst"] = subst_tm(
        r_id(g, a, p_ty, tau, budget), phi3, budget
    ) == r_id(
        d,
        aphi,
        subst_ty(p_ty, phi3),
        subst_tm(tau, phi1, budget),
        budget,
    )
    return report
