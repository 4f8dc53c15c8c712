"""A small dependent type theory over the groupoid model.

Grammar (EBNF, ASCII; `|-` may be written as a turnstile):

    judgment := [ context ] "|-" body
    context  := binding { "," binding }
    binding  := name ":" type
    body     := "ctx" | type "type" | term ":" type
    type     := "Pi" "(" name ":" type ")" type
              | "Sigma" "(" name ":" type ")" type
              | "Id" typeatom termatom termatom
              | "N" | "Unit" | "Empty" | "Bool" | "U0"
              | "(" type ")"
    term     := "lam" "(" name ":" type ")" term | apps
    apps     := termatom { termatom }
    termatom := name | number | "tt" | "ff" | "star"
              | "refl" termatom
              | "fst" termatom | "snd" termatom
              | "pair" "(" term "," term ")"
              | "rid" "(" name name name "." type ","
                          name "." term "," term ")"
              | "(" term ")"

Parsed syntax is de Bruijn indexed.  Definitional equality is decided
by comparing the interpretations in the model: two types are equal
when their dependent groupoids are equal, two terms when their
product-groupoid objects are equal.
"""

from __future__ import annotations

import re

from .budget import DEFAULT, Budget

# elaboration enumerates product-groupoid fibers, which grows quickly
# with play length and thread count; single-threaded short plays keep
# the standard types tractable
FRONTEND_BUDGET = Budget(10, 1, 200000)
from .cwf import (
    app_term,
    bool_gwe,
    comprehension,
    curry_term,
    empty_gwe,
    extension,
    first_projection,
    id_former,
    nat_gwe,
    pair_map,
    pi_former,
    refl_term,
    second_projection,
    sigma_former,
    subst_tm,
    subst_ty,
    terminal_context,
    unit_gwe,
)
from .dependent import constant_dgwe, pi_object_from_parts
from .gwe import compose_ep, discrete_gwe, identity_ep
from .kernel import flat
from .predicative import PredGame, Registry, name_strategy, value_strategy
from .strategies import lift_to_arrow


class SyntaxProblem(Exception):
    def __init__(self, msg, line=1, col=1):
        super().__init__("%d:%d: %s" % (line, col, msg))
        self.line = line
        self.col = col


class TypingProblem(Exception):
    pass


# ---------------------------------------------------------------------------
# abstract syntax (de Bruijn)

class Node:
    """Tagged tuple with structural equality."""

    __slots__ = ("tag", "args")

    def __init__(self, tag, *args):
        self.tag = tag
        self.args = args

    def __eq__(self, other):
        return (
            isinstance(other, Node)
            and self.tag == other.tag
            and self.args == other.args
        )

    def __hash__(self):
        return hash((self.tag, self.args))

    def __repr__(self):
        return "%s%r" % (self.tag, self.args)


def _shift_ty(a, d, cut=0):
    t = a.tag
    if t in ("N", "Unit", "Empty", "Bool", "U0"):
        return a
    if t in ("Pi", "Sigma"):
        return Node(t, _shift_ty(a.args[0], d, cut), _shift_ty(a.args[1], d, cut + 1))
    if t == "Id":
        return Node(
            "Id",
            _shift_ty(a.args[0], d, cut),
            _shift_tm(a.args[1], d, cut),
            _shift_tm(a.args[2], d, cut),
        )
    raise ValueError(t)


def _shift_tm(e, d, cut=0):
    t = e.tag
    if t == "Var":
        i = e.args[0]
        return Node("Var", i + d if i >= cut else i)
    if t in ("Num", "Tt", "Ff", "Star"):
        return e
    if t == "Lam":
        return Node("Lam", _shift_ty(e.args[0], d, cut), _shift_tm(e.args[1], d, cut + 1))
    if t == "App":
        return Node("App", _shift_tm(e.args[0], d, cut), _shift_tm(e.args[1], d, cut))
    if t == "Pair":
        return Node("Pair", _shift_tm(e.args[0], d, cut), _shift_tm(e.args[1], d, cut))
    if t in ("Fst", "Snd", "Refl"):
        return Node(t, _shift_tm(e.args[0], d, cut))
    if t == "Rid":
        return Node(
            "Rid",
            _shift_ty(e.args[0], d, cut + 3),
            _shift_tm(e.args[1], d, cut + 1),
            _shift_tm(e.args[2], d, cut),
        )
    raise ValueError(t)


def _subst_ty(a, j, v):
    t = a.tag
    if t in ("N", "Unit", "Empty", "Bool", "U0"):
        return a
    if t in ("Pi", "Sigma"):
        return Node(
            t, _subst_ty(a.args[0], j, v),
            _subst_ty(a.args[1], j + 1, _shift_tm(v, 1)),
        )
    if t == "Id":
        return Node(
            "Id",
            _subst_ty(a.args[0], j, v),
            _subst_tm(a.args[1], j, v),
            _subst_tm(a.args[2], j, v),
        )
    raise ValueError(t)


def _subst_tm(e, j, v):
    t = e.tag
    if t == "Var":
        i = e.args[0]
        if i == j:
            return v
        return Node("Var", i - 1 if i > j else i)
    if t in ("Num", "Tt", "Ff", "Star"):
        return e
    if t == "Lam":
        return Node(
            "Lam", _subst_ty(e.args[0], j, v),
            _subst_tm(e.args[1], j + 1, _shift_tm(v, 1)),
        )
    if t == "App":
        return Node("App", _subst_tm(e.args[0], j, v), _subst_tm(e.args[1], j, v))
    if t == "Pair":
        return Node("Pair", _subst_tm(e.args[0], j, v), _subst_tm(e.args[1], j, v))
    if t in ("Fst", "Snd", "Refl"):
        return Node(t, _subst_tm(e.args[0], j, v))
    if t == "Rid":
        return Node(
            "Rid",
            _subst_ty(e.args[0], j + 3, _shift_tm(v, 3)),
            _subst_tm(e.args[1], j + 1, _shift_tm(v, 1)),
            _subst_tm(e.args[2], j, v),
        )
    raise ValueError(t)


# ---------------------------------------------------------------------------
# lexer and parser

_TOKEN = re.compile(
    r"\s*(?:(?P<turn>\|-|⊢)|(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_']*)"
    r"|(?P<punct>[(),:.]))"
)

_KEYWORDS = {
    "Pi", "Sigma", "Id", "N", "Unit", "Empty", "Bool", "U0",
    "lam", "pair", "fst", "snd", "refl", "rid",
    "tt", "ff", "star", "type", "ctx",
}


def _lex(text):
    toks = []
    pos = 0
    line = 1
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            rest = text[pos:].lstrip()
            if not rest:
                break
            at = len(text) - len(rest)
            line = text.count("\n", 0, at) + 1
            col = at - text.rfind("\n", 0, at)
            raise SyntaxProblem("unexpected character %r" % rest[0], line, col)
        pos = m.end()
        kind = m.lastgroup
        val = m.group(kind)
        line = text.count("\n", 0, m.start(kind)) + 1
        col = m.start(kind) - text.rfind("\n", 0, m.start(kind))
        toks.append((kind, val, line, col))
    toks.append(("eof", "", line, 0))
    return toks


class _Parser:
    def __init__(self, text):
        self.toks = _lex(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, msg):
        kind, val, line, col = self.peek()
        raise SyntaxProblem("%s (found %r)" % (msg, val or kind), line, col)

    def eat_eof(self):
        if self.peek()[0] != "eof":
            self.fail("trailing input")

    def eat(self, val):
        kind, v, line, col = self.peek()
        if v != val:
            self.fail("expected %r" % val)
        return self.next()

    def at_name(self, *names):
        kind, v, _, _ = self.peek()
        return kind == "name" and (not names or v in names)

    def ident(self):
        kind, v, _, _ = self.peek()
        if kind != "name" or v in _KEYWORDS:
            self.fail("expected a variable name")
        return self.next()[1]

    # types ---------------------------------------------------------------

    def type_(self, env):
        if self.at_name("Pi", "Sigma"):
            tag = self.next()[1]
            self.eat("(")
            x = self.ident()
            self.eat(":")
            a = self.type_(env)
            self.eat(")")
            b = self.type_([x] + env)
            return Node(tag, a, b)
        if self.at_name("Id"):
            self.next()
            a = self.type_atom(env)
            t1 = self.term_atom(env)
            t2 = self.term_atom(env)
            return Node("Id", a, t1, t2)
        return self.type_atom(env)

    def type_atom(self, env):
        kind, v, _, _ = self.peek()
        if v == "(":
            self.next()
            a = self.type_(env)
            self.eat(")")
            return a
        if v in ("N", "Unit", "Empty", "Bool", "U0"):
            self.next()
            return Node(v)
        self.fail("expected a type")

    # terms ---------------------------------------------------------------

    def term(self, env):
        if self.at_name("lam"):
            self.next()
            self.eat("(")
            x = self.ident()
            self.eat(":")
            a = self.type_(env)
            self.eat(")")
            body = self.term([x] + env)
            return Node("Lam", a, body)
        e = self.term_atom(env)
        while self.starts_atom():
            e = Node("App", e, self.term_atom(env))
        return e

    def starts_atom(self):
        kind, v, _, _ = self.peek()
        if kind == "num" or v == "(":
            return True
        return kind == "name" and v not in (
            "type", "ctx", "Pi", "Sigma", "Id", "N", "Unit", "Empty",
            "Bool", "U0", "lam",
        )

    def term_atom(self, env):
        kind, v, _, _ = self.peek()
        if kind == "num":
            self.next()
            return Node("Num", int(v))
        if v == "(":
            self.next()
            e = self.term(env)
            self.eat(")")
            return e
        if v in ("tt", "ff", "star"):
            self.next()
            return Node(v.capitalize() if v != "star" else "Star")
        if v in ("refl", "fst", "snd"):
            self.next()
            return Node(v.capitalize(), self.term_atom(env))
        if v == "pair":
            self.next()
            self.eat("(")
            a = self.term(env)
            self.eat(",")
            b = self.term(env)
            self.eat(")")
            return Node("Pair", a, b)
        if v == "rid":
            self.next()
            self.eat("(")
            x = self.ident()
            y = self.ident()
            p = self.ident()
            self.eat(".")
            motive = self.type_([p, y, x] + env)
            self.eat(",")
            z = self.ident()
            self.eat(".")
            base = self.term([z] + env)
            self.eat(",")
            proof = self.term(env)
            self.eat(")")
            return Node("Rid", motive, base, proof)
        if kind == "name" and v not in _KEYWORDS:
            self.next()
            if v not in env:
                raise SyntaxProblem("unbound variable %r" % v)
            return Node("Var", env.index(v))
        self.fail("expected a term")


def parse(text):
    """A judgment: `x:A, y:B |- t : C`, `... |- A type`, `... |- ctx`."""
    p = _Parser(text)
    ctx = []
    env = []
    if not (p.peek()[0] == "turn"):
        while True:
            x = p.ident()
            p.eat(":")
            ctx.append(p.type_(env))
            env = [x] + env
            if p.peek()[0] == "turn":
                break
            p.eat(",")
    kind, v, _, _ = p.peek()
    if kind != "turn":
        p.fail("expected |-")
    p.next()
    if p.at_name("ctx"):
        p.next()
        p.eat_eof()
        return Node("JCtx", tuple(ctx))
    save = p.i
    try:
        a = p.type_(env)
        if p.at_name("type"):
            p.next()
            p.eat_eof()
            return Node("JTy", tuple(ctx), a)
    except SyntaxProblem:
        pass
    p.i = save
    t = p.term(env)
    p.eat(":")
    a = p.type_(env)
    p.eat_eof()
    return Node("JTm", tuple(ctx), t, a)


# ---------------------------------------------------------------------------
# pretty printer

def _name(i):
    return "x%d" % i


def print_type(a, depth=0):
    t = a.tag
    if t in ("N", "Unit", "Empty", "Bool", "U0"):
        return t
    if t in ("Pi", "Sigma"):
        return "%s (%s : %s) %s" % (
            t, _name(depth), print_type(a.args[0], depth),
            print_type(a.args[1], depth + 1),
        )
    if t == "Id":
        return "Id (%s) (%s) (%s)" % (
            print_type(a.args[0], depth),
            print_term(a.args[1], depth),
            print_term(a.args[2], depth),
        )
    raise ValueError(t)


def print_term(e, depth=0):
    t = e.tag
    if t == "Var":
        return _name(depth - 1 - e.args[0])
    if t == "Num":
        return str(e.args[0])
    if t in ("Tt", "Ff", "Star"):
        return t.lower()
    if t == "Lam":
        return "lam (%s : %s) %s" % (
            _name(depth), print_type(e.args[0], depth),
            print_term(e.args[1], depth + 1),
        )
    if t == "App":
        return "(%s) (%s)" % (print_term(e.args[0], depth), print_term(e.args[1], depth))
    if t == "Pair":
        return "pair(%s, %s)" % (print_term(e.args[0], depth), print_term(e.args[1], depth))
    if t in ("Fst", "Snd", "Refl"):
        return "%s (%s)" % (t.lower(), print_term(e.args[0], depth))
    if t == "Rid":
        return "rid(%s %s %s. %s, %s. %s, %s)" % (
            _name(depth), _name(depth + 1), _name(depth + 2),
            print_type(e.args[0], depth + 3),
            _name(depth), print_term(e.args[1], depth + 1),
            print_term(e.args[2], depth),
        )
    raise ValueError(t)


def print_judgment(j):
    if j.tag == "JCtx":
        ctx = j.args[0]
        body = "ctx"
    elif j.tag == "JTy":
        ctx = j.args[0]
        body = print_type(j.args[1], len(ctx)) + " type"
    else:
        ctx = j.args[0]
        body = "%s : %s" % (
            print_term(j.args[1], len(ctx)), print_type(j.args[2], len(ctx)),
        )
    parts = [
        "%s : %s" % (_name(i), print_type(a, i)) for i, a in enumerate(ctx)
    ]
    return (", ".join(parts) + " " if parts else "") + "|- " + body


# ---------------------------------------------------------------------------
# elaboration

class Elaborator:
    """Interprets judgments in the groupoid model.

    numerals live in the flat game on {0..k-1}; out-of-range literals
    are rejected.
    """

    def __init__(self, k=4, budget=FRONTEND_BUDGET, registry=None):
        self.k = k
        self.budget = budget
        if registry is None:
            registry = Registry()
            registry.register(nat_gwe(k, budget).game)
            registry.register(unit_gwe(budget).game)
            registry.register(bool_gwe(budget).game)
        self.registry = registry

    # contexts -------------------------------------------------------------

    def context(self, ctx_types):
        """The chain of comprehensions for a syntactic context."""
        gs = [terminal_context(self.budget)]
        tys = []
        for a in ctx_types:
            asem = self.type_in(gs, tys, a)
            tys.append(a)
            gs.append(comprehension(gs[-1], asem, self.budget))
        return gs, tys

    # types ----------------------------------------------------------------

    def type_in(self, gs, tys, a):
        g = gs[-1]
        t = a.tag
        if t == "N":
            return constant_dgwe(g, nat_gwe(self.k, self.budget), self.budget)
        if t == "Unit":
            return constant_dgwe(g, unit_gwe(self.budget), self.budget)
        if t == "Empty":
            return constant_dgwe(g, empty_gwe(self.budget), self.budget)
        if t == "Bool":
            return constant_dgwe(g, bool_gwe(self.budget), self.budget)
        if t == "U0":
            from .predicative import universe

            u = discrete_gwe(universe(self.registry, 0), self.budget)
            return constant_dgwe(g, u, self.budget)
        if t in ("Pi", "Sigma"):
            asem = self.type_in(gs, tys, a.args[0])
            ga = comprehension(g, asem, self.budget)
            bsem = self.type_in(gs + [ga], tys + [asem], a.args[1])
            former = pi_former if t == "Pi" else sigma_former
            return former(g, asem, bsem, self.budget)
        if t == "Id":
            asem = self.type_in(gs, tys, a.args[0])
            t1, ty1 = self.infer(gs, tys, a.args[1])
            t2, ty2 = self.infer(gs, tys, a.args[2])
            for ty in (ty1, ty2):
                if self.type_in(gs, tys, ty) != asem:
                    raise TypingProblem(
                        "Id endpoint does not inhabit the index type"
                    )
            idty = id_former(g, asem, self.budget)
            ga = comprehension(g, asem, self.budget)
            gaa = idty.base
            phi1 = extension(
                identity_ep(g, self.budget), t1, ga, self.budget
            )
            phi2 = extension(phi1, t2, gaa, self.budget)
            return subst_ty(idty, phi2)
        raise TypingProblem("not a type: %s" % t)

    # terms ----------------------------------------------------------------

    def infer(self, gs, tys, e):
        """The interpretation of a term and its syntactic type."""
        g = gs[-1]
        t = e.tag
        if t == "Var":
            i = e.args[0]
            n = len(tys)
            if i >= n:
                raise TypingProblem("unbound variable")
            level = n - 1 - i
            v = second_projection(
                gs[level], self._sem(gs, tys, level), gs[level + 1], self.budget
            )
            for m in range(level + 1, n):
                p = first_projection(
                    gs[m], self._sem(gs, tys, m), gs[m + 1], self.budget
                )
                v = subst_tm(v, p, self.budget)
            return v, _shift_ty(tys[level], i + 1)
        if t == "Num":
            n = e.args[0]
            if not 0 <= n < self.k:
                raise TypingProblem(
                    "numeral %d out of range for N with k=%d" % (n, self.k)
                )
            fib = nat_gwe(self.k, self.budget)
            val = value_strategy(flat(list(range(self.k))), n)
            return self._const(g, constant_dgwe(g, fib, self.budget), val), Node("N")
        if t in ("Tt", "Ff"):
            fib = bool_gwe(self.budget)
            return self._const(
                g, constant_dgwe(g, fib, self.budget), fib.objects[0]
            ), Node("Bool")
        if t == "Star":
            fib = unit_gwe(self.budget)
            return self._const(
                g, constant_dgwe(g, fib, self.budget), fib.objects[0]
            ), Node("Unit")
        if t == "Lam":
            asem = self.type_in(gs, tys, e.args[0])
            ga = comprehension(g, asem, self.budget)
            body, bty = self.infer(gs + [ga], tys + [e.args[0]], e.args[1])
            bsem = self.type_in(gs + [ga], tys + [e.args[0]], bty)
            return (
                curry_term(g, asem, bsem, body, self.budget),
                Node("Pi", e.args[0], bty),
            )
        if t == "App":
            f, fty = self.infer(gs, tys, e.args[0])
            if fty.tag != "Pi":
                raise TypingProblem("application head is not of product type")
            arg = self.check(gs, tys, e.args[1], fty.args[0])
            asem = self.type_in(gs, tys, fty.args[0])
            ga = comprehension(g, asem, self.budget)
            bsem = self.type_in(gs + [ga], tys + [fty.args[0]], fty.args[1])
            return (
                app_term(g, asem, bsem, f, arg, self.budget),
                _subst_ty(fty.args[1], 0, e.args[1]),
            )
        if t == "Pair":
            _, aty = self.infer(gs, tys, e.args[0])
            _, bty = self.infer(gs, tys, e.args[1])
            want = Node("Sigma", aty, _shift_ty(bty, 1))
            return self.check(gs, tys, e, want), want
        if t in ("Fst", "Snd"):
            p, pty = self.infer(gs, tys, e.args[0])
            if pty.tag != "Sigma":
                raise TypingProblem("projection of a non-sum term")
            asem = self.type_in(gs, tys, pty.args[0])
            ga = comprehension(g, asem, self.budget)
            bsem = self.type_in(gs + [ga], tys + [pty.args[0]], pty.args[1])
            sty = sigma_former(g, asem, bsem, self.budget)
            gsig = comprehension(g, sty, self.budget)
            gab = comprehension(ga, bsem, self.budget)
            pf, pb = pair_map(g, asem, bsem, self.budget)
            into = extension(
                identity_ep(g, self.budget), p, gsig, self.budget
            )
            if t == "Fst":
                pa = first_projection(ga, bsem, gab, self.budget)
                va = second_projection(g, asem, ga, self.budget)
                body = subst_tm(va, pa, self.budget)
                result_ty = pty.args[0]
            else:
                body = second_projection(ga, bsem, gab, self.budget)
                result_ty = _subst_ty(
                    pty.args[1], 0, Node("Fst", e.args[0])
                )
            elim = subst_tm(body, pb, self.budget)
            return subst_tm(elim, into, self.budget), result_ty
        if t == "Refl":
            u, uty = self.infer(gs, tys, e.args[0])
            asem = self.type_in(gs, tys, uty)
            ga = comprehension(g, asem, self.budget)
            into = extension(identity_ep(g, self.budget), u, ga, self.budget)
            rt = refl_term(g, asem, self.budget)
            return (
                subst_tm(rt, into, self.budget),
                Node("Id", uty, e.args[0], e.args[0]),
            )
        if t == "Rid":
            motive, base, q_syn = e.args
            q, qty = self.infer(gs, tys, q_syn)
            if qty.tag != "Id":
                raise TypingProblem("eliminating a non-equality proof")
            aty = qty.args[0]
            asem = self.type_in(gs, tys, aty)
            ga = comprehension(g, asem, self.budget)
            idty = id_former(g, asem, self.budget)
            gaa = idty.base
            theta = comprehension(gaa, idty, self.budget)
            # the motive lives over the doubled and equipped context
            ext_tys = [
                aty,
                _shift_ty(aty, 1),
                Node("Id", _shift_ty(aty, 2), Node("Var", 1), Node("Var", 0)),
            ]
            mgs, mtys = list(gs), list(tys)
            for x, ctx_g in zip(ext_tys, (ga, gaa, theta)):
                mgs.append(ctx_g)
                mtys.append(x)
            psem = self.type_in(mgs, mtys, motive)
            # the base case, checked against the motive at reflexivity
            tau = self.check(gs + [ga], tys + [aty], base, _base_motive(motive))
            from .cwf import r_id

            r = r_id(g, asem, psem, tau, self.budget)
            t1, t2 = qty.args[1], qty.args[2]
            s1 = self.check(gs, tys, t1, aty)
            s2 = self.check(gs, tys, t2, aty)
            phi = extension(identity_ep(g, self.budget), s1, ga, self.budget)
            phi = extension(phi, s2, gaa, self.budget)
            phi = extension(phi, q, theta, self.budget)
            result_ty = _subst_ty(
                _subst_ty(
                    _subst_ty(motive, 0, _shift_tm(q_syn, 2)),
                    0, _shift_tm(t2, 1),
                ),
                0, t1,
            )
            return subst_tm(r, phi, self.budget), result_ty
        raise TypingProblem("cannot infer a type for %s" % t)

    def check(self, gs, tys, e, want):
        g = gs[-1]
        if e.tag == "Pair" and want.tag == "Sigma":
            a = self.check(gs, tys, e.args[0], want.args[0])
            b = self.check(
                gs, tys, e.args[1], _subst_ty(want.args[1], 0, e.args[0])
            )
            asem = self.type_in(gs, tys, want.args[0])
            ga = comprehension(g, asem, self.budget)
            bsem = self.type_in(gs + [ga], tys + [want.args[0]], want.args[1])
            sty = sigma_former(g, asem, bsem, self.budget)
            gsig = comprehension(g, sty, self.budget)
            gab = comprehension(ga, bsem, self.budget)
            pf, _ = pair_map(g, asem, bsem, self.budget)
            phi = extension(identity_ep(g, self.budget), a, ga, self.budget)
            phi = extension(phi, b, gab, self.budget)
            v = second_projection(g, sty, gsig, self.budget)
            return subst_tm(v, compose_ep(pf, phi, self.budget), self.budget)
        sem, got = self.infer(gs, tys, e)
        if self.type_in(gs, tys, got) != self.type_in(gs, tys, want):
            raise TypingProblem(
                "type mismatch: inferred %s, expected %s"
                % (print_type(got, len(tys)), print_type(want, len(tys)))
            )
        return sem

    def _sem(self, gs, tys, level):
        """The interpretation of the type at a context position."""
        return self.type_in(gs[: level + 1], tys[:level], tys[level])

    def _const(self, g, dep, val):
        return pi_object_from_parts(
            g,
            dep,
            {o.digest(): val for o in g.objects},
            {o.digest(): lift_to_arrow(val) for o in g.objects},
            self.budget,
        )

    # judgments ------------------------------------------------------------

    def judgment(self, j):
        gs, tys = self.context(list(j.args[0]))
        if j.tag == "JCtx":
            return {"kind": "context", "value": gs[-1]}
        if j.tag == "JTy":
            return {
                "kind": "type",
                "context": gs[-1],
                "value": self.type_in(gs, tys, j.args[1]),
            }
        sem = self.check(gs, tys, j.args[1], j.args[2])
        return {
            "kind": "term",
            "context": gs[-1],
            "type": self.type_in(gs, tys, j.args[2]),
            "value": sem,
        }


def _base_motive(motive):
    """The motive instantiated at the diagonal and reflexivity: from a
    type over ctx, x, y, p it yields one over ctx, x."""
    diag = _subst_ty(motive, 0, Node("Refl", Node("Var", 0)))
    return _subst_ty(diag, 0, Node("Var", 0))


def elaborate(text, k=4, budget=FRONTEND_BUDGET, registry=None):
    """Parse and interpret one judgment."""
    return Elaborator(k, budget, registry).judgment(parse(text))
