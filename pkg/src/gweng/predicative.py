"""Predicative games: ranked games presented by their strategies.

A predicative game is a set of strategies together with the protocol
prefix (an initial question, then the name of the chosen strategy,
then a play of that strategy).  The name of a game is a digest of its
canonical serialization, paired with the game's rank; a registry maps
digests back to objects.  Universes collect the names of registered
games of bounded rank.
"""

from __future__ import annotations

import json

from .budget import DEFAULT
from .kernel import EMPTY, Game, JSeq, Move, move_key
from .strategies import (
    Strategy,
    as_strategy_loose,
    enumerate_strategies,
    is_on,
    sort_strategies,
)


class PredGame:
    """A game given by its set of strategies."""

    __slots__ = ("strategies", "_by_digest", "_hash")

    def __init__(self, strategies):
        by = {}
        for s in strategies:
            by[s.digest()] = s
        self._by_digest = by
        self.strategies = tuple(by[d] for d in sorted(by))
        self._hash = None

    def __contains__(self, sigma):
        return sigma.digest() in self._by_digest

    def __iter__(self):
        return iter(self.strategies)

    def __len__(self):
        return len(self.strategies)

    def lookup(self, digest):
        return self._by_digest[digest]

    def __eq__(self, other):
        return isinstance(other, PredGame) and tuple(self._by_digest) == tuple(
            other._by_digest
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._by_digest))
        return self._hash

    def __repr__(self):
        return "<PredGame %s: %d strategies>" % (self.digest()[:8], len(self))

    def rank(self):
        """One more than the largest move rank occurring in a strategy."""
        r = 0
        for s in self.strategies:
            for m in s.moves:
                r = max(r, m.rank)
        return r + 1

    def digest(self):
        blob = json.dumps(sorted(self._by_digest))
        import hashlib

        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    def union_game(self):
        """The union of the strategies, as a plain game."""
        pos = set()
        lab = {}
        for s in self.strategies:
            pos |= s.positions
            lab.update(s.labeling)
        return Game(pos, lab)

    def name_move(self, sigma):
        return Move(("name", sigma.digest()), sigma.rank())

    def positions(self):
        """The protocol-prefixed positions: an opening question, the
        name of a strategy, then a play of that strategy."""
        q = Move("q", 0)
        out = {EMPTY, JSeq(((q, None),))}
        for s in self.strategies:
            n = self.name_move(s)
            head = ((q, None), (n, 0))
            out.add(JSeq(head))
            for p in s.positions:
                out.add(JSeq(head + tuple((m, None if j is None else j + 2) for m, j in p.occs)))
        return out


def pred_of_game(g, budget=DEFAULT, max_count=100000):
    """The complete predicative game of all strategies on g."""
    return PredGame(enumerate_strategies(g, max_count))


def parallel_union(pred_games):
    """Union of predicative games: the strategies of all of them."""
    strats = []
    for pg in pred_games:
        strats.extend(pg.strategies)
    return PredGame(strats)


def predicative_union(strategies):
    """The predicative game whose strategies are the given ones."""
    return PredGame(strategies)


# ---------------------------------------------------------------------------
# consistency and completeness

def consistent(strategies):
    """Pairwise consistency: shared moves agree on labels, enabling
    agrees where both sides know both moves, and opponent extensions
    by shared moves are available on both sides."""
    strategies = list(strategies)
    for i, a in enumerate(strategies):
        for b in strategies[i + 1:]:
            shared_moves = a.moves & b.moves
            for m in shared_moves:
                if a.labeling[m] != b.labeling[m]:
                    return False
            def en_restricted(g):
                return {
                    (e, m)
                    for (e, m) in g.enabling
                    if m in shared_moves and (e is None or e in shared_moves)
                }
            # a shared answer move must not be enabled one way here and
            # another way there when both enablers are shared
            for e, m in en_restricted(a) ^ en_restricted(b):
                if (e, m) in en_restricted(a) and any(
                    em == m for (_, em) in en_restricted(b)
                ):
                    return False
                if (e, m) in en_restricted(b) and any(
                    em == m for (_, em) in en_restricted(a)
                ):
                    return False
            # opponent extensions by shared moves exist on both sides
            for s in a.positions & b.positions:
                if len(s) % 2:
                    continue
                for t in a.positions:
                    if (
                        len(t) == len(s) + 1
                        and t.prefix(len(s)) == s
                        and t.move(len(s)) in b.moves
                        and t not in b.positions
                    ):
                        return False
    return True


def completeness_closure(strategies, max_count=100000):
    """Close a set of strategies under patchwork: all strategies on the
    union of their plays."""
    pg = PredGame(strategies)
    u = pg.union_game()
    return PredGame(enumerate_strategies(u, max_count))


def is_complete(strategies, max_count=100000):
    pg = PredGame(strategies)
    return completeness_closure(strategies, max_count) == pg


def games_as_collections_check(g, max_count=100000):
    """The strategies on a well-opened game form a complete set whose
    union is the game, and a complete set is exactly the strategies on
    its union."""
    strats = enumerate_strategies(g, max_count)
    pg = PredGame(strats)
    if pg.union_game().positions != g.positions:
        return False
    return is_complete(strats, max_count)


# ---------------------------------------------------------------------------
# names, registry, universes

class Registry:
    """digest -> predicative game."""

    def __init__(self):
        self.objects = {}

    def register(self, pg):
        d = pg.digest()
        self.objects[d] = pg
        return d

    def el(self, digest):
        return self.objects[digest]

    def __contains__(self, digest):
        return digest in self.objects


def name_strategy(pg, registry=None):
    """underline(G): the strategy answering the opening question with
    the name of G."""
    q = Move("q", 0)
    n = Move(("name", pg.digest()), pg.rank())
    lab = {q: "OQ", n: "PA"}
    pos = {EMPTY, JSeq(((q, None),)), JSeq(((q, None), (n, 0)))}
    return Strategy(pos, lab)


def universe(registry, k):
    """U_k: names of registered games of rank at most k+1."""
    strats = [
        name_strategy(pg)
        for pg in registry.objects.values()
        if pg.rank() <= k + 1
    ]
    return PredGame(strats)


def el(registry, underline):
    """Decode a name strategy back to the named game."""
    for s in underline.positions:
        if len(s) == 2:
            payload = s.move(1).payload
            if isinstance(payload, tuple) and payload[0] == "name":
                return registry.el(payload[1])
    raise KeyError("not a name strategy")


def check_rank_guard(pg):
    """A name occurring as a move payload must name something of lower
    rank than any game containing the move."""
    r = pg.rank()
    for s in pg.strategies:
        for m in s.moves:
            if isinstance(m.payload, tuple) and m.payload and m.payload[0] == "name":
                if m.rank >= r:
                    return False
    return True


# ---------------------------------------------------------------------------
# atomic predicative games

def value_strategy(g, v):
    """The strategy on a flat game answering v."""
    q = [m for m in g.moves if g.labeling[m] == "OQ"][0]
    a = [m for m in g.moves if m.payload == v and g.labeling[m] == "PA"][0]
    return Strategy(
        {EMPTY, JSeq(((q, None),)), JSeq(((q, None), (a, 0)))}, g.labeling
    )


def bottom_strategy(g):
    """The strategy on a flat game that never answers."""
    q = [m for m in g.moves if g.labeling[m] == "OQ"][0]
    return Strategy({EMPTY, JSeq(((q, None),))}, {q: g.labeling[q]})
