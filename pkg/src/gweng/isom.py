"""Invertible strategies and position bijections.

An invertible strategy between well-opened games behaves like a
relabeling copy-cat: its even prefixes pair a play of the source with
a play of the target of equal length.  Extracting those pairs gives a
prefix-compatible bijection on positions; conversely a bijection is
replayed as a mirror strategy.  The two constructions are mutually
inverse.
"""

from __future__ import annotations

from .budget import DEFAULT
from .kernel import EMPTY, JSeq, initial_indices
from .strategies import (
    LEFT,
    RIGHT,
    Strategy,
    flip,
    restrict_side,
)


class NotInvertible(Exception):
    pass


class PosBij:
    """A length-preserving, prefix-compatible bijection on positions."""

    __slots__ = ("fwd", "bwd")

    def __init__(self, pairs):
        self.fwd = {}
        self.bwd = {}
        for x, y in pairs:
            if len(x) != len(y):
                raise NotInvertible("length mismatch")
            if self.fwd.get(x, y) != y or self.bwd.get(y, x) != x:
                raise NotInvertible("not functional or not injective")
            self.fwd[x] = y
            self.bwd[y] = x

    def __call__(self, x):
        return self.fwd[x]

    def inverse(self):
        inv = PosBij(())
        inv.fwd = dict(self.bwd)
        inv.bwd = dict(self.fwd)
        return inv

    def then(self, other):
        return PosBij((x, other.fwd[y]) for x, y in self.fwd.items())

    def __eq__(self, other):
        return isinstance(other, PosBij) and self.fwd == other.fwd

    def __repr__(self):
        return "<PosBij %d positions>" % len(self.fwd)

    def check_total(self, x_game, y_game):
        return set(self.fwd) == set(x_game.positions) and set(self.bwd) == set(
            y_game.positions
        )


def to_bijection(phi, x_game=None, y_game=None):
    """Extract the position bijection of an invertible strategy on
    (!)X -o Y by pairing restrictions of its even prefixes."""
    pairs = {}
    for s in phi.positions:
        if len(s) % 2:
            continue
        dom = restrict_side(s, LEFT)
        cod = restrict_side(s, RIGHT)
        if len(initial_indices(dom)) > 1:
            raise NotInvertible("multiple source threads")
        if len(dom) != len(cod):
            raise NotInvertible("copy-cat timing violated")
        if pairs.get(dom, cod) != cod:
            raise NotInvertible("inconsistent pairing")
        pairs[dom] = cod
    bij = PosBij(pairs.items())
    if x_game is not None and y_game is not None:
        if not bij.check_total(x_game, y_game):
            raise NotInvertible("bijection not total")
    return bij


def from_invertible(phi, x_game, y_game):
    """Forward direction with totality checked against the games."""
    return to_bijection(phi, x_game, y_game)


def reversed_bijection(phi, x_game, y_game):
    """The bijection of the inverse strategy."""
    return to_bijection(phi, x_game, y_game).inverse()


def mirror_strategy(f, x_game, y_game, budget=DEFAULT):
    """Replay a position bijection as a strategy on !X -o Y.

    Opponent moves in Y (or answers in X); Player mirrors across f so
    that after each Player move the X-play maps to the Y-play.
    """
    lab = {}
    for m in x_game.moves:
        lab[m.tagged(LEFT)] = flip(x_game.labeling[m])
    for m in y_game.moves:
        lab[m.tagged(RIGHT)] = y_game.labeling[m]

    pos = set()

    def x_exts(x):
        return [t for t in x_game.positions if len(t) == len(x) + 1 and t.prefix(len(x)) == x]

    def y_exts(y):
        return [t for t in y_game.positions if len(t) == len(y) + 1 and t.prefix(len(y)) == y]

    def rec(z, x, y, xmap, ymap):
        # invariant on entry: f(x) = y (Player has just moved or start)
        pos.add(z)
        if len(z) >= budget.max_play_length:
            return
        if len(y) % 2 == 0:
            # Opponent may move in Y
            for y2 in y_exts(y):
                n, jy = y2.occs[-1]
                z2 = z.snoc(n.tagged(RIGHT), None if jy is None else ymap[jy])
                pos.add(z2)
                ym2 = {**ymap, len(y2) - 1: len(z2) - 1}
                x2 = f.bwd.get(y2)
                if x2 is None:
                    continue
                m, jx = x2.occs[-1]
                # a source-initial move points at the target's initial
                j2 = ym2[0] if jx is None else xmap[jx]
                z3 = z2.snoc(m.tagged(LEFT), j2)
                rec(z3, x2, y2, {**xmap, len(x2) - 1: len(z3) - 1}, ym2)
        else:
            # Opponent may move in X (an X-player move, flipped)
            for x2 in x_exts(x):
                m, jx = x2.occs[-1]
                z2 = z.snoc(m.tagged(LEFT), None if jx is None else xmap[jx])
                pos.add(z2)
                y2 = f.fwd.get(x2)
                if y2 is None:
                    continue
                n, jy = y2.occs[-1]
                z3 = z2.snoc(n.tagged(RIGHT), None if jy is None else ymap[jy])
                rec(
                    z3,
                    x2,
                    y2,
                    {**xmap, len(x2) - 1: len(z2) - 1},
                    {**ymap, len(y2) - 1: len(z3) - 1},
                )

    rec(EMPTY, EMPTY, EMPTY, {}, {})
    return Strategy(pos, lab)


def is_invertible(phi, x_game, y_game, budget=DEFAULT):
    """phi behaves as a relabeling copy-cat between X and Y."""
    try:
        f = to_bijection(phi, x_game, y_game)
    except NotInvertible:
        return False
    return mirror_strategy(f, x_game, y_game, budget) == phi
