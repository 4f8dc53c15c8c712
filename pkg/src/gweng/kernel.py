"""Arenas, justified sequences, views, legal positions and games.

Moves carry a payload, a rank (used by the predicative layer) and a
tag list recording disjoint-union provenance.  A justified sequence is
a list of occurrences, each an optional pointer to an earlier
occurrence.  Positions are justified sequences satisfying
justification, alternation and visibility; a game is a prefix-closed,
thread-closed set of positions together with a question/answer
labeling of its moves.  The enabling relation and move set of a game
are derived from its positions, so a game is determined by
(positions, labeling).
"""

from __future__ import annotations

import functools
import hashlib
import json
from dataclasses import dataclass

# tag atoms
LEFT = ("L",)
RIGHT = ("R",)
COPY1 = ("C1",)
COPY2 = ("C2",)


def thread_tag(n):
    return ("T", n)


def strat_tag(kind, digest):
    # kind is "Sd" (domain component) or "Sc" (codomain component)
    return (kind, digest)


class Move:
    """An immutable move: payload, arena rank, provenance tags.

    The hash is computed once; moves appear in millions of hash
    lookups during interaction search.
    """

    __slots__ = ("payload", "rank", "tags", "_hash")

    def __init__(self, payload, rank=0, tags=()):
        self.payload = payload
        self.rank = rank
        self.tags = tags
        self._hash = hash((payload, rank, tags))

    def __eq__(self, other):
        return self is other or (
            isinstance(other, Move)
            and self._hash == other._hash
            and self.payload == other.payload
            and self.rank == other.rank
            and self.tags == other.tags
        )

    def __hash__(self):
        return self._hash

    def tagged(self, tag):
        """Prepend a provenance tag (outermost first)."""
        return Move(self.payload, self.rank, (tag,) + self.tags)

    def untagged(self):
        return Move(self.payload, self.rank, self.tags[1:])

    def __repr__(self):
        if self.tags:
            return "Move(%r, r%d, %s)" % (self.payload, self.rank, list(self.tags))
        return "Move(%r, r%d)" % (self.payload, self.rank)


def canon_payload(x):
    """Canonical JSON-able form of a payload or tag; tuples become lists."""
    if isinstance(x, tuple):
        return [canon_payload(i) for i in x]
    if isinstance(x, (int, str)):
        return x
    raise TypeError("unsupported payload %r" % (x,))


def payload_from_json(x):
    if isinstance(x, list):
        return tuple(payload_from_json(i) for i in x)
    return x


def move_canon(m):
    return (canon_payload(m.payload), m.rank, [canon_payload(t) for t in m.tags])


@functools.lru_cache(maxsize=None)
def move_key(m):
    return json.dumps(move_canon(m))


class JSeq:
    """Justified sequence: occurrences (move, justifier index or None)."""

    __slots__ = ("occs", "_hash")

    def __init__(self, occs=()):
        self.occs = tuple(occs)
        self._hash = hash(self.occs)

    def __len__(self):
        return len(self.occs)

    def __iter__(self):
        return iter(self.occs)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return isinstance(other, JSeq) and self.occs == other.occs

    def __repr__(self):
        return "JSeq(%s)" % (list(self.occs),)

    def move(self, i):
        return self.occs[i][0]

    def just(self, i):
        return self.occs[i][1]

    def snoc(self, move, j):
        return JSeq(self.occs + ((move, j),))

    def prefix(self, n):
        return JSeq(self.occs[:n])

    @property
    def moves(self):
        return [o[0] for o in self.occs]

    def prefixes(self):
        for n in range(len(self.occs) + 1):
            yield self.prefix(n)


EMPTY = JSeq()


def project(s, fn):
    """Restrict s to moves where fn(move) is not None, applying fn and
    chasing justification pointers through dropped occurrences."""
    newidx = {}
    out = []
    for i, (m, j) in enumerate(s.occs):
        m2 = fn(m)
        if m2 is None:
            continue
        k = j
        while k is not None and k not in newidx:
            k = s.just(k)
        out.append((m2, newidx[k] if k is not None else None))
        newidx[i] = len(out) - 1
    return JSeq(out)


def project_indices(s, keep):
    """Like project but with an index predicate and no move transform."""
    return project_by_index(s, [i for i in range(len(s)) if keep(i)])


def project_by_index(s, indices):
    newidx = {}
    out = []
    isel = set(indices)
    for i, (m, j) in enumerate(s.occs):
        if i not in isel:
            continue
        k = j
        while k is not None and k not in newidx:
            k = s.just(k)
        out.append((m, newidx[k] if k is not None else None))
        newidx[i] = len(out) - 1
    return JSeq(out)


def polarity(labeling, m):
    return labeling[m][0]


def is_question(labeling, m):
    return labeling[m][1] == "Q"


def pview_indices(s, labeling, upto=None):
    """Indices of occurrences in the P-view of s (or of s.prefix(upto))."""
    return _view_indices(s, labeling, "P", len(s) if upto is None else upto)


def oview_indices(s, labeling, upto=None):
    return _view_indices(s, labeling, "O", len(s) if upto is None else upto)


def _view_indices(s, labeling, player, n):
    # the view for `player` keeps player moves step by step and jumps
    # over segments hidden behind opponent moves' justifiers
    out = []
    i = n - 1
    while i >= 0:
        m = s.move(i)
        out.append(i)
        if polarity(labeling, m) == player:
            i -= 1
        else:
            j = s.just(i)
            if j is None:
                break
            out.append(j)
            i = j - 1
    out.reverse()
    return out


def view_jseq(s, indices):
    """The view as a justified sequence; pointers leaving the view are
    dropped (the justifier becomes undefined)."""
    sel = set(indices)
    newidx = {}
    out = []
    for i in indices:
        m, j = s.occs[i]
        out.append((m, newidx[j] if j in sel and j is not None else None))
        newidx[i] = len(out) - 1
    return JSeq(out)


def pview(s, labeling, upto=None):
    return view_jseq(s, pview_indices(s, labeling, upto))


def oview(s, labeling, upto=None):
    return view_jseq(s, oview_indices(s, labeling, upto))


def check_occurrence(s, i, labeling, enabling):
    """Justification, alternation and visibility for occurrence i,
    assuming all earlier occurrences already pass."""
    m, j = s.occs[i]
    if m not in labeling:
        return False
    # justification against the enabling relation
    if j is None:
        if (None, m) not in enabling:
            return False
    else:
        if not (0 <= j < i):
            return False
        if (s.move(j), m) not in enabling:
            return False
    # alternation
    if i == 0:
        if polarity(labeling, m) != "O":
            return False
    elif polarity(labeling, s.move(i - 1)) == polarity(labeling, m):
        return False
    # visibility
    if j is not None:
        if polarity(labeling, m) == "P":
            if j not in pview_indices(s, labeling, upto=i):
                return False
        else:
            if j not in oview_indices(s, labeling, upto=i):
                return False
    return True


def is_legal(s, labeling, enabling):
    for i in range(len(s)):
        if not check_occurrence(s, i, labeling, enabling):
            return False
    return True


def initial_indices(s):
    return [i for i in range(len(s)) if s.just(i) is None]


def thread_restrict(s, initials):
    """s restricted to occurrences hereditarily justified by the given
    initial occurrence indices."""
    sel = set(initials)
    keep = set()
    order = []
    for i in range(len(s)):
        j = s.just(i)
        if (j is None and i in sel) or (j is not None and j in keep):
            keep.add(i)
            order.append(i)
    return project_by_index(s, order)


def threads(s):
    """The list of single-initial thread restrictions of s."""
    return [thread_restrict(s, [i]) for i in initial_indices(s)]


class Game:
    """A game presented by its positions and move labeling.

    The move set and enabling relation are those observed in the
    positions (games are kept economical).
    """

    __slots__ = ("positions", "labeling", "_moves", "_enabling", "_digest", "_hash")

    def __init__(self, positions, labeling):
        pos = set(positions)
        pos.add(EMPTY)
        self.positions = frozenset(pos)
        moves = set()
        enabling = set()
        for s in self.positions:
            for i in range(len(s)):
                m, j = s.occs[i]
                moves.add(m)
                enabling.add((None if j is None else s.move(j), m))
        self._moves = frozenset(moves)
        self._enabling = frozenset(enabling)
        self.labeling = {m: labeling[m] for m in moves}
        self._digest = None
        self._hash = None

    @property
    def moves(self):
        return self._moves

    @property
    def enabling(self):
        return self._enabling

    def label(self, m):
        return self.labeling[m]

    def even_positions(self):
        return {s for s in self.positions if len(s) % 2 == 0}

    def max_length(self):
        return max((len(s) for s in self.positions), default=0)

    def canon(self):
        poss = sorted(
            (
                [[move_canon(m), j] for (m, j) in s.occs]
                for s in self.positions
            ),
            key=lambda p: (len(p), json.dumps(p)),
        )
        labs = sorted(
            ([move_canon(m), self.labeling[m]] for m in self._moves),
            key=lambda x: json.dumps(x),
        )
        return [poss, labs]

    def digest(self):
        if self._digest is None:
            blob = json.dumps(self.canon(), separators=(",", ":"))
            self._digest = hashlib.sha256(blob.encode()).hexdigest()[:16]
        return self._digest

    def __eq__(self, other):
        return (
            isinstance(other, Game)
            and self.positions == other.positions
            and self.labeling == other.labeling
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.positions, frozenset(self.labeling.items())))
        return self._hash

    def __repr__(self):
        return "<%s %s: %d moves, %d positions>" % (
            type(self).__name__,
            self.digest()[:8],
            len(self._moves),
            len(self.positions),
        )

    def rank(self):
        """Rank: one more than the largest move rank (1 if no moves)."""
        return max((m.rank for m in self._moves), default=0) + 1

    def is_position(self, s):
        return s in self.positions

    def retagged(self, fn):
        """Apply a move bijection to every position (labels follow)."""
        lab = {}
        pos = set()
        for s in self.positions:
            pos.add(project(s, fn))
        for m in self._moves:
            lab[fn(m)] = self.labeling[m]
        return type(self)(pos, lab)


def subgame(h, g):
    """h is a subgame of g: moves, labels, enabling and positions all
    restrict."""
    if not h.moves <= g.moves:
        return False
    if any(h.labeling[m] != g.labeling[m] for m in h.moves):
        return False
    if not h.enabling <= g.enabling:
        return False
    return h.positions <= g.positions


def well_opened(g):
    for s in g.positions:
        for i in range(1, len(s)):
            if s.just(i) is None:
                return False
    return True


def well_founded(g):
    """No infinite chain in the enabling relation (cycle detection)."""
    adj = {}
    for e, m in g.enabling:
        if e is not None:
            adj.setdefault(e, set()).add(m)
    state = {}

    def dfs(u):
        state[u] = 1
        for v in adj.get(u, ()):
            if state.get(v) == 1:
                return False
            if state.get(v) is None and not dfs(v):
                return False
        state[u] = 2
        return True

    return all(dfs(u) for u in list(adj) if state.get(u) is None)


@dataclass
class GameReport:
    legal_positions: bool
    prefix_closed: bool
    thread_closed: bool
    labels_ok: bool
    enabling_ok: bool
    well_opened: bool
    well_founded: bool

    @property
    def valid(self):
        return (
            self.legal_positions
            and self.prefix_closed
            and self.thread_closed
            and self.labels_ok
            and self.enabling_ok
        )


def check_game(g):
    lab, en = g.labeling, g.enabling
    legal = all(is_legal(s, lab, en) for s in g.positions)
    prefix = all(s.prefix(len(s) - 1) in g.positions for s in g.positions if len(s))
    # closure under restriction to any subset of initial occurrences
    thread_ok = True
    for s in g.positions:
        inits = initial_indices(s)
        if len(inits) <= 1:
            continue
        for k in range(len(inits)):
            sub = inits[:k] + inits[k + 1:]
            if thread_restrict(s, sub) not in g.positions:
                thread_ok = False
                break
        if not thread_ok:
            break
    labels_ok = all(g.labeling.get(m) in ("OQ", "OA", "PQ", "PA") for m in g.moves)
    # arena axioms on the derived enabling relation
    enabling_ok = True
    for e, m in en:
        if e is None:
            if g.labeling[m] != "OQ":
                enabling_ok = False
        else:
            if (None, m) in en:
                enabling_ok = False  # initial moves only enabled by the source
            if g.labeling[m][1] == "A" and g.labeling[e][1] != "Q":
                enabling_ok = False
            if g.labeling[e][0] == g.labeling[m][0]:
                enabling_ok = False
    return GameReport(
        legal_positions=legal,
        prefix_closed=prefix,
        thread_closed=thread_ok,
        labels_ok=labels_ok,
        enabling_ok=enabling_ok,
        well_opened=well_opened(g),
        well_founded=well_founded(g),
    )


def generate_positions(labeling, enabling, ok, max_len, max_count=10**6):
    """All legal positions over (labeling, enabling) passing the
    prefix-monotone predicate `ok`, up to length max_len."""
    moves_by_enabler = {}
    for e, m in enabling:
        moves_by_enabler.setdefault(e, []).append(m)
    found = {EMPTY}
    frontier = [EMPTY]
    while frontier:
        nxt = []
        for s in frontier:
            if len(s) >= max_len:
                continue
            for cand in _extensions(s, labeling, moves_by_enabler):
                if cand in found:
                    continue
                if ok(cand):
                    found.add(cand)
                    nxt.append(cand)
                    if len(found) > max_count:
                        raise BudgetExceeded("too many positions")
        frontier = nxt
    return found


def _extensions(s, labeling, moves_by_enabler):
    n = len(s)
    want = "O" if n == 0 else ("P" if polarity(labeling, s.move(n - 1)) == "O" else "O")
    # initial moves
    for m in moves_by_enabler.get(None, ()):
        if polarity(labeling, m) == want:
            yield s.snoc(m, None)
    # justified moves: justifier must be in the mover's view
    if n:
        if want == "P":
            vis = pview_indices(s, labeling)
        else:
            vis = oview_indices(s, labeling)
        for j in vis:
            for m in moves_by_enabler.get(s.move(j), ()):
                if polarity(labeling, m) == want:
                    yield s.snoc(m, j)


class BudgetExceeded(Exception):
    pass


# ---------------------------------------------------------------------------
# basic games

def flat(values, rank=0, question="q"):
    """The flat game: one question, one answer per value."""
    q = Move(question, rank)
    lab = {q: "OQ"}
    pos = {EMPTY, JSeq(((q, None),))}
    for v in values:
        a = Move(v, rank)
        lab[a] = "PA"
        pos.add(JSeq(((q, None), (a, 0))))
    return Game(pos, lab)


def terminal_game():
    return Game({EMPTY}, {})


# ---------------------------------------------------------------------------
# serialization (kernel JSON format)

def game_to_json(g):
    moves = sorted(g.moves, key=move_key)
    idx = {m: i for i, m in enumerate(moves)}
    return {
        "moves": [
            {
                "payload": canon_payload(m.payload),
                "rank": m.rank,
                "tags": [canon_payload(t) for t in m.tags],
                "label": g.labeling[m],
            }
            for m in moves
        ],
        "enabling": sorted(
            ([None if e is None else idx[e], idx[m]] for (e, m) in g.enabling),
            key=lambda p: (p[0] is not None, p[0] if p[0] is not None else -1, p[1]),
        ),
        "positions": sorted(
            ([{"m": idx[m], "j": j} for (m, j) in s.occs] for s in g.positions),
            key=lambda p: (len(p), json.dumps(p)),
        ),
    }


def game_from_json(data):
    moves = [
        Move(
            payload_from_json(d["payload"]),
            d["rank"],
            tuple(payload_from_json(t) for t in d["tags"]),
        )
        for d in data["moves"]
    ]
    lab = {m: d["label"] for m, d in zip(moves, data["moves"])}
    pos = set()
    for p in data["positions"]:
        pos.add(JSeq(tuple((moves[o["m"]], o["j"]) for o in p)))
    return Game(pos, lab)
