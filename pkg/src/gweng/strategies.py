"""Strategies and game constructions.

A strategy is itself a game: well-opened, deterministic at even
length.  Being a strategy *on* a game g additionally requires its
positions to lie in g and to be closed under opponent moves of g.
Composition goes through interaction sequences: plays over the two
components whose restrictions to each component and to the shared
middle game are positions, followed by hiding of the middle moves.
"""

from __future__ import annotations

import itertools

from .budget import DEFAULT, Budget
from .kernel import (
    COPY1,
    COPY2,
    EMPTY,
    Game,
    JSeq,
    LEFT,
    RIGHT,
    generate_positions,
    initial_indices,
    is_question,
    move_key,
    polarity,
    project,
    pview,
    pview_indices,
    thread_restrict,
    threads,
)


_MEMO = {}


def _memo_get(key, make):
    got = _MEMO.get(key)
    if got is None:
        got = make()
        _MEMO[key] = got
    return got


class Strategy(Game):
    """A deterministic well-opened game, used as a strategy value."""

    def __init__(self, positions, labeling, check=True):
        super().__init__(positions, labeling)
        if check:
            bad = deterministic_violation(self)
            if bad is not None:
                raise ValueError("nondeterministic at %r" % (bad,))


def deterministic_violation(g):
    """A pair of even positions witnessing nondeterminism, or None."""
    seen = {}
    for s in g.positions:
        if len(s) % 2 or len(s) == 0:
            continue
        stem = s.prefix(len(s) - 1)
        if stem in seen and seen[stem] != s:
            return (seen[stem], s)
        seen[stem] = s
    return None


def as_strategy(g):
    if isinstance(g, Strategy):
        return g
    return Strategy(g.positions, g.labeling)


def phi(sigma):
    """The even-length positions of a strategy (its canonical set form)."""
    return sigma.even_positions()


def phi_inv(evens, g):
    """Rebuild the strategy on g with the given even positions."""
    pos = set(evens)
    for s in evens:
        for t in g.positions:
            if len(t) == len(s) + 1 and t.prefix(len(s)) == s:
                pos.add(t)
    return Strategy(pos, g.labeling)


def _game_index(g):
    """Per-game index of opponent extensions and a P-view memo."""
    got = _GAME_INDEX.get(id(g))
    if got is None or got[0] is not g:
        kids = {}
        for t in g.positions:
            if len(t) % 2:
                kids.setdefault(t.prefix(len(t) - 1), []).append(t)
        got = (g, kids, {})
        _GAME_INDEX[id(g)] = got
    return got


_GAME_INDEX = {}


def _pview_of(g, s):
    cache = _game_index(g)[2]
    v = cache.get(s)
    if v is None:
        v = pview(s, g.labeling)
        cache[s] = v
    return v


def is_on(sigma, g):
    """sigma is a strategy on g: contained in g and opponent-inclusive."""
    if not sigma.positions <= g.positions:
        return False
    kids = _game_index(g)[1]
    for s in sigma.positions:
        if len(s) % 2:
            continue
        for t in kids.get(s, ()):
            if t not in sigma.positions:
                return False
    return True


# ---------------------------------------------------------------------------
# constructions

def _tag_side(g_left, g_right):
    lab = {}
    for m in g_left.moves:
        lab[m.tagged(LEFT)] = g_left.labeling[m]
    for m in g_right.moves:
        lab[m.tagged(RIGHT)] = g_right.labeling[m]
    return lab


def _tagged_enabling(g, tag):
    return {
        (None if e is None else e.tagged(tag), m.tagged(tag))
        for (e, m) in g.enabling
    }


def _side(m):
    return m.tags[0] if m.tags else None


def restrict_side(s, tag):
    return project(s, lambda m: m.untagged() if _side(m) == tag else None)


def tensor(a, b, budget=DEFAULT):
    """Interleavings whose restrictions are positions of a and b."""
    lab = _tag_side(a, b)
    en = _tagged_enabling(a, LEFT) | _tagged_enabling(b, RIGHT)

    def ok(s):
        return (
            restrict_side(s, LEFT) in a.positions
            and restrict_side(s, RIGHT) in b.positions
        )

    return Game(generate_positions(lab, en, ok, budget.max_play_length), lab)


def product(a, b, budget=DEFAULT):
    """Like tensor but a play stays in one component."""
    key = ("prod", a.digest(), b.digest(), budget.max_play_length)
    return _memo_get(key, lambda: _product(a, b, budget))


def _product(a, b, budget):
    lab = _tag_side(a, b)
    en = _tagged_enabling(a, LEFT) | _tagged_enabling(b, RIGHT)

    def ok(s):
        sides = {_side(m) for m in s.moves}
        if len(sides) > 1:
            return False
        return (
            restrict_side(s, LEFT) in a.positions
            and restrict_side(s, RIGHT) in b.positions
        )

    return Game(generate_positions(lab, en, ok, budget.max_play_length), lab)


def flip(label):
    return {"O": "P", "P": "O"}[label[0]] + label[1]


def linear_implication(a, b, budget=DEFAULT):
    """a -o b: a's labels flipped; initial moves are b's, which also
    enable a's (formerly initial) moves."""
    lab = {}
    for m in a.moves:
        lab[m.tagged(LEFT)] = flip(a.labeling[m])
    for m in b.moves:
        lab[m.tagged(RIGHT)] = b.labeling[m]
    en = set()
    b_inits = set()
    for e, m in b.enabling:
        en.add((None if e is None else e.tagged(RIGHT), m.tagged(RIGHT)))
        if e is None:
            b_inits.add(m.tagged(RIGHT))
    for e, m in a.enabling:
        if e is None:
            for bi in b_inits:
                en.add((bi, m.tagged(LEFT)))
        else:
            en.add((e.tagged(LEFT), m.tagged(LEFT)))

    def ok(s):
        return (
            restrict_side(s, LEFT) in a.positions
            and restrict_side(s, RIGHT) in b.positions
        )

    return Game(generate_positions(lab, en, ok, budget.max_play_length), lab)


def exponential(a, budget=DEFAULT):
    """!a: same arena, interleavings of positions of a."""
    key = ("exp", a.digest(), budget.max_play_length, budget.max_threads)
    return _memo_get(key, lambda: _exponential(a, budget))


def _exponential(a, budget):
    def ok(s):
        if len(initial_indices(s)) > budget.max_threads:
            return False
        return all(t in a.positions for t in threads(s))

    pos = generate_positions(
        a.labeling,
        a.enabling,
        ok,
        budget.max_play_length,
        budget.max_enum,
    )
    return Game(pos, a.labeling)


promotion = exponential


def copycat(a, budget=DEFAULT):
    """The copy-cat strategy on a -o a: even prefixes restrict equally."""
    key = ("cc", a.digest(), budget.max_play_length)
    return _memo_get(key, lambda: _copycat(a, budget))


def _copycat(a, budget):
    arrow = linear_implication(a, a, budget)

    def ok(s):
        for n in range(2, len(s) + 1, 2):
            t = s.prefix(n)
            if restrict_side(t, LEFT) != restrict_side(t, RIGHT):
                return False
        # odd prefixes never get ahead by more than the pending move
        return True

    pos = {s for s in arrow.positions if ok(s)}
    return Strategy(pos, arrow.labeling)


dereliction = copycat


# ---------------------------------------------------------------------------
# composition

def interactions(j_game, k_game, budget=DEFAULT):
    """Interaction sequences of j (on A -o B) and k (on B -o C).

    Interaction moves are tagged: A-moves keep j's Left tag, C-moves
    keep k's Right tag, and the two copies of a B-move are tagged C1
    (j's copy) and C2 (k's copy).
    """
    def to_j(m):
        side = _side(m)
        if side == LEFT:
            return m
        if side == COPY1:
            return m.untagged().tagged(RIGHT)
        return None

    def to_k(m):
        side = _side(m)
        if side == COPY2:
            return m.untagged().tagged(LEFT)
        if side == RIGHT:
            return m
        return None

    def to_b(m):
        side = _side(m)
        if side == COPY1:
            return m.untagged().tagged(LEFT)
        if side == COPY2:
            return m.untagged().tagged(RIGHT)
        return None

    # labels of the middle game seen as B[1] -o B[2]: J's copy (Left) is
    # the domain, so its labels flip; K's copy (Right) keeps B's labels
    blab = {}
    for m in j_game.moves:
        if _side(m) == RIGHT:
            b = m.untagged()
            blab[b.tagged(LEFT)] = flip(j_game.labeling[m])
            blab[b.tagged(RIGHT)] = j_game.labeling[m]
    for m in k_game.moves:
        if _side(m) == LEFT:
            b = m.untagged()
            blab[b.tagged(LEFT)] = k_game.labeling[m]
            blab[b.tagged(RIGHT)] = flip(k_game.labeling[m])

    def pr_ok(s):
        # the middle restriction must alternate like a copy-cat play
        # and agree across the two copies at every even prefix
        for i in range(len(s)):
            pol = polarity(blab, s.move(i))
            if i == 0:
                if pol != "O":
                    return False
            elif pol == polarity(blab, s.move(i - 1)):
                return False
        for n in range(2, len(s) + 1, 2):
            t = s.prefix(n)
            if restrict_side(t, LEFT) != restrict_side(t, RIGHT):
                return False
        return True

    # interaction moves with their enabling, built from both components
    def j_to_inter(m):
        return m if _side(m) == LEFT else m.untagged().tagged(COPY1)

    def k_to_inter(m):
        return m if _side(m) == RIGHT else m.untagged().tagged(COPY2)

    cand_moves = {}
    inter_en = set()
    for m in j_game.moves:
        cand_moves[j_to_inter(m)] = True
    for m in k_game.moves:
        cand_moves[k_to_inter(m)] = True
    for e, m in j_game.enabling:
        if e is None:
            # a B-initial's justifier in the interaction is its K-side copy
            inter_en.add((m.untagged().tagged(COPY2), j_to_inter(m)))
        else:
            inter_en.add((j_to_inter(e), j_to_inter(m)))
    for e, m in k_game.enabling:
        if e is None:
            inter_en.add((None, k_to_inter(m)))
        else:
            inter_en.add((k_to_inter(e), k_to_inter(m)))

    max_len = max((len(s) for s in j_game.positions), default=0) + max(
        (len(s) for s in k_game.positions), default=0
    )

    found = {EMPTY}
    frontier = [EMPTY]
    while frontier:
        nxt = []
        for s in frontier:
            if len(s) >= max_len:
                continue
            for m in cand_moves:
                for j in itertools.chain([None], range(len(s))):
                    if j is None:
                        if (None, m) not in inter_en:
                            continue
                    elif (s.move(j), m) not in inter_en:
                        continue
                    cand = s.snoc(m, j)
                    if cand in found:
                        continue
                    pj = project(cand, to_j)
                    if pj not in j_game.positions:
                        continue
                    pk = project(cand, to_k)
                    if pk not in k_game.positions:
                        continue
                    pb = project(cand, to_b)
                    if not pr_ok(pb):
                        continue
                    found.add(cand)
                    nxt.append(cand)
                    if len(found) > budget.max_enum:
                        raise RuntimeError("interaction explosion")
        frontier = nxt
    return found


def compose(sigma, tau, budget=DEFAULT):
    """tau o sigma for sigma on A -o B and tau on B -o C."""
    inter = interactions(sigma, tau, budget)
    lab = {}
    for m in sigma.moves:
        if _side(m) == LEFT:
            lab[m] = sigma.labeling[m]
    for m in tau.moves:
        if _side(m) == RIGHT:
            lab[m] = tau.labeling[m]

    def hide(m):
        return m if _side(m) in (LEFT, RIGHT) else None

    pos = {project(s, hide) for s in inter}
    return Strategy(pos, lab)


def pairing(sigma, tau):
    """Pairing of strategies with a common domain: codomain moves get
    an extra Left/Right tag, the domain is shared."""
    def retag(which):
        def fn(m):
            if _side(m) == RIGHT:
                return m.untagged().tagged(which).tagged(RIGHT)
            return m
        return fn

    pos = {project(s, retag(LEFT)) for s in sigma.positions}
    pos |= {project(s, retag(RIGHT)) for s in tau.positions}
    lab = {}
    for m in sigma.moves:
        lab[retag(LEFT)(m)] = sigma.labeling[m]
    for m in tau.moves:
        lab[retag(RIGHT)(m)] = tau.labeling[m]
    return Strategy(pos, lab)


def lift_to_arrow(sigma):
    """View a strategy on G as a strategy on I -o G (tag everything Right)."""
    return Strategy(
        {project(s, lambda m: m.tagged(RIGHT)) for s in sigma.positions},
        {m.tagged(RIGHT): sigma.labeling[m] for m in sigma.moves},
    )


def drop_arrow(sigma):
    """Inverse of lift_to_arrow."""
    return Strategy(
        {project(s, lambda m: m.untagged()) for s in sigma.positions},
        {m.untagged(): sigma.labeling[m] for m in sigma.moves},
    )


def apply_strategy(phi_, sigma, budget=DEFAULT):
    """phi . sigma for phi on !A -o B and sigma on A: compose with the
    promotion of sigma."""
    prom = lift_to_arrow(as_strategy_loose(exponential(sigma, budget)))
    return drop_arrow(compose(prom, phi_, budget))


def as_strategy_loose(g):
    return Strategy(g.positions, g.labeling, check=False)


# ---------------------------------------------------------------------------
# constraints

def is_innocent(sigma, g):
    """Responses depend only on the P-view: the view of the response
    is a function of the view of the stem, defined wherever the stem
    view is seen."""
    resp = {}
    fview = {}
    for u in sigma.positions:
        if len(u) % 2 or len(u) == 0:
            continue
        stem = u.prefix(len(u) - 1)
        resp[stem] = u
        sv = _pview_of(g, stem)
        uv = _pview_of(g, u)
        if fview.get(sv, uv) != uv:
            return False
        fview[sv] = uv
    for t in g.positions:
        if len(t) % 2 == 0 or t.prefix(len(t) - 1) not in sigma.positions:
            continue
        want = fview.get(_pview_of(g, t))
        if want is None:
            continue
        u = resp.get(t)
        if u is None or _pview_of(g, u) != want:
            return False
    return True


def is_well_bracketed(sigma, g):
    """Player answers only the pending question of the P-view."""
    lab = g.labeling
    for s in sigma.positions:
        n = len(s)
        if n % 2 or n == 0:
            continue
        m, j = s.occs[n - 1]
        if is_question(lab, m) or j is None:
            continue
        view = pview_indices(s, lab, upto=n - 1)
        if j not in view:
            return False
        seg = [i for i in view if i > j]
        answered = {s.just(i) for i in seg if not is_question(lab, s.move(i))}
        for i in seg:
            if is_question(lab, s.move(i)) and i not in answered:
                return False
    return True


def is_total(sigma, g):
    answered = set()
    for u in sigma.positions:
        if len(u) % 2 == 0 and len(u) > 0:
            answered.add(u.prefix(len(u) - 1))
    for s in sigma.positions:
        if len(s) % 2 and s not in answered:
            return False
    return is_on(sigma, g)


def is_noetherian(sigma, g, budget=DEFAULT):
    """No P-view reaches the play-length bound (so strictly increasing
    chains of P-views stay below it)."""
    for s in sigma.positions:
        if len(pview_indices(s, g.labeling)) >= budget.max_play_length:
            return False
    return True


def constraint_report(sigma, g, budget=DEFAULT):
    return {
        "strategy": deterministic_violation(sigma) is None,
        "on_game": is_on(sigma, g),
        "innocent": is_innocent(sigma, g),
        "well_bracketed": is_well_bracketed(sigma, g),
        "total": is_total(sigma, g),
        "noetherian": is_noetherian(sigma, g, budget),
    }


# ---------------------------------------------------------------------------
# enumeration

def enumerate_strategies(g, max_count=100000):
    """All strategies on g (deterministic, opponent-inclusive)."""
    odd_exts = {}
    even_exts = {}
    for t in g.positions:
        if len(t) == 0:
            continue
        stem = t.prefix(len(t) - 1)
        if len(t) % 2:
            odd_exts.setdefault(stem, []).append(t)
        else:
            even_exts.setdefault(stem, []).append(t)
    for s in odd_exts.values():
        s.sort(key=lambda x: repr(x.occs))
    for s in even_exts.values():
        s.sort(key=lambda x: repr(x.occs))

    results = []

    def rec(evens, pending):
        if len(results) >= max_count:
            raise RuntimeError("too many strategies")
        if not pending:
            pos = set(evens)
            for s in evens:
                pos.update(odd_exts.get(s, ()))
            results.append(Strategy(pos, g.labeling, check=False))
            return
        o = pending[0]
        rest = pending[1:]
        # no response at o
        rec(evens, rest)
        for e in even_exts.get(o, ()):
            new_pending = rest + tuple(odd_exts.get(e, ()))
            rec(evens | {e}, new_pending)

    rec(frozenset({EMPTY}), tuple(odd_exts.get(EMPTY, ())))
    return results


def strategy_key(sigma):
    return sigma.digest()


def sort_strategies(strats):
    return sorted(strats, key=strategy_key)
