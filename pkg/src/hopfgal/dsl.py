"""A typed expression language for composites of structure morphisms.

Expressions name the structure maps of objects held in an Environment:
`id(V)`, `m(A)`, `u(A)`, `cm(C)`, `cu(C)`, `S(H)`, `br(V,W)`, `act(X)`,
`coact(X)`, or bare user-defined morphism names.  `*` is the tensor
product and binds tighter than composition; `;` composes in diagrammatic
order (f;g means g after f) and `o` in classical order.  Assertion files
contain one `EXPECT <expr> == <expr>` per line.
"""

from __future__ import annotations

from dataclasses import dataclass

from .morphism import Morphism, braiding, compose, tensor
from .report import Report, equality_check

HEADS = {"id": 1, "m": 1, "u": 1, "cm": 1, "cu": 1, "S": 1, "br": 2,
         "act": 1, "coact": 1}


class ParseError(Exception):
    def __init__(self, position, expected, found):
        self.position = position  # 1-based character column
        self.expected = frozenset(expected)
        self.found = found
        super().__init__("parse error at position %d: expected %s, found %r"
                         % (position, "|".join(sorted(expected)), found))


@dataclass(frozen=True)
class Name:
    text: str


@dataclass(frozen=True)
class Call:
    head: str
    args: tuple


@dataclass(frozen=True)
class Tensor:
    left: object
    right: object


@dataclass(frozen=True)
class Seq:
    """Diagrammatic composite: `first`, then `second`."""
    first: object
    second: object


# -- tokenizer ---------------------------------------------------------------

_SYMBOLS = "();,*"


def _tokens(src):
    """Yield (kind, text, 1-based position); kind in name/op/symbol/end."""
    i, n = 0, len(src)
    while i < n:
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _SYMBOLS:
            yield ("symbol", ch, i + 1)
            i += 1
            continue
        if ch.isalnum() or ch == "_":
            j = i
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            word = src[i:j]
            yield ("op" if word == "o" else "name", word, i + 1)
            i = j
            continue
        yield ("symbol", ch, i + 1)
        i += 1
    yield ("end", "", n + 1)


class _Parser:
    def __init__(self, src):
        self.toks = list(_tokens(src))
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def take(self, kind, text=None, expected=None):
        k, t, p = self.toks[self.pos]
        if k != kind or (text is not None and t != text):
            raise ParseError(p, expected or {text or kind}, t or "end of input")
        self.pos += 1
        return t, p

    def expr(self):
        node = self.ten()
        while True:
            k, t, p = self.peek()
            if (k, t) == ("symbol", ";"):
                self.pos += 1
                node = Seq(node, self.ten())
            elif k == "op":
                self.pos += 1
                node = Seq(self.ten(), node)
            else:
                return node

    def ten(self):
        node = self.atom()
        while self.peek()[:2] == ("symbol", "*"):
            self.pos += 1
            node = Tensor(node, self.atom())
        return node

    def atom(self):
        k, t, p = self.peek()
        if (k, t) == ("symbol", "("):
            self.pos += 1
            node = self.expr()
            self.take("symbol", ")", expected={")", ";", "o", "*"})
            return node
        if k != "name":
            raise ParseError(p, {"name", "("}, t or "end of input")
        self.pos += 1
        if self.peek()[:2] != ("symbol", "("):
            if t in HEADS:
                raise ParseError(self.peek()[2], {"("}, self.peek()[1] or "end of input")
            return Name(t)
        if t not in HEADS:
            raise ParseError(p, set(HEADS), t)
        self.pos += 1
        args = [self.take("name", expected={"name"})[0]]
        while self.peek()[:2] == ("symbol", ","):
            self.pos += 1
            args.append(self.take("name", expected={"name"})[0])
        self.take("symbol", ")", expected={")", ","})
        if len(args) != HEADS[t]:
            raise ParseError(p, {"%s with %d argument(s)" % (t, HEADS[t])}, t)
        return Call(t, tuple(args))


def parse(src):
    p = _Parser(src)
    node = p.expr()
    k, t, pos = p.peek()
    if k != "end":
        raise ParseError(pos, {";", "o", "*", "end of input"}, t)
    return node


def print_expr(e):
    """Canonical text form: diagrammatic `;` only, minimal parentheses."""
    if isinstance(e, Name):
        return e.text
    if isinstance(e, Call):
        return "%s(%s)" % (e.head, ", ".join(e.args))
    if isinstance(e, Tensor):
        left = print_expr(e.left)
        if isinstance(e.left, Seq):
            left = "(%s)" % left
        right = print_expr(e.right)
        if isinstance(e.right, (Seq, Tensor)):
            right = "(%s)" % right
        return "%s * %s" % (left, right)
    first = print_expr(e.first)
    second = print_expr(e.second)
    if isinstance(e.second, Seq):
        second = "(%s)" % second
    return "%s ; %s" % (first, second)


# -- environment and evaluation ----------------------------------------------

class Environment:
    """Named objects expressions may refer to.

    spaces: name -> GradedSpace; hopfs: name -> HopfAlgebra;
    algebras / coalgebras: plain (co)algebras; comodules: ComoduleAlgebra;
    modules: ModuleCoalgebra; morphisms: user-named Morphisms.
    """

    def __init__(self, spaces=None, hopfs=None, algebras=None,
                 coalgebras=None, comodules=None, modules=None,
                 morphisms=None):
        self.spaces = dict(spaces or {})
        self.hopfs = dict(hopfs or {})
        self.algebras = dict(algebras or {})
        self.coalgebras = dict(coalgebras or {})
        self.comodules = dict(comodules or {})
        self.modules = dict(modules or {})
        self.morphisms = dict(morphisms or {})

    def space(self, name):
        if name in self.spaces:
            return self.spaces[name]
        for pool in (self.hopfs, self.algebras, self.coalgebras,
                     self.comodules, self.modules):
            if name in pool:
                return pool[name].space
        raise TypeError("unknown space name %r" % name)

    def _structure(self, name, pools, kind):
        for pool in pools:
            if name in pool:
                return pool[name]
        raise TypeError("no %s named %r" % (kind, name))

    def atom_morphism(self, e):
        if isinstance(e, Name):
            if e.text not in self.morphisms:
                raise TypeError("unknown morphism name %r" % e.text)
            return self.morphisms[e.text]
        head, args = e.head, e.args
        if head == "id":
            return Morphism.identity(self.space(args[0]))
        if head == "br":
            return braiding(self.space(args[0]), self.space(args[1]))
        if head in ("m", "u"):
            obj = self._structure(
                args[0], (self.algebras, self.hopfs,
                          {k: v.algebra for k, v in self.comodules.items()}),
                "algebra")
            return obj.mult if head == "m" else obj.unit
        if head in ("cm", "cu"):
            obj = self._structure(
                args[0], (self.coalgebras, self.hopfs,
                          {k: v.coalgebra for k, v in self.modules.items()}),
                "coalgebra")
            return obj.comult if head == "cm" else obj.counit
        if head == "S":
            return self._structure(args[0], (self.hopfs,), "Hopf algebra").antipode
        if head == "act":
            return self._structure(args[0], (self.modules,),
                                   "module coalgebra").action
        return self._structure(args[0], (self.comodules,),
                               "comodule algebra").coaction


def typecheck(e, env):
    """(domain, codomain) of a well-typed expression; TypeError otherwise."""
    if isinstance(e, (Name, Call)):
        f = env.atom_morphism(e)
        return f.dom, f.cod
    if isinstance(e, Tensor):
        ld, lc = typecheck(e.left, env)
        rd, rc = typecheck(e.right, env)
        return ld.tensor(rd), lc.tensor(rc)
    fd, fc = typecheck(e.first, env)
    sd, sc = typecheck(e.second, env)
    if fc != sd:
        raise TypeError(
            "cannot compose %r after %r: middle objects differ "
            "(dim %d, degrees %s vs dim %d, degrees %s)"
            % (print_expr(e.second), print_expr(e.first),
               fc.dim, fc.degrees, sd.dim, sd.degrees))
    return fd, sc


def evaluate(e, env):
    if isinstance(e, (Name, Call)):
        return env.atom_morphism(e)
    if isinstance(e, Tensor):
        return tensor(evaluate(e.left, env), evaluate(e.right, env))
    typecheck(e, env)
    return compose(evaluate(e.second, env), evaluate(e.first, env))


def assert_equal(lhs, rhs, env, name="expect"):
    ld, lc = typecheck(lhs, env)
    rd, rc = typecheck(rhs, env)
    if (ld, lc) != (rd, rc):
        raise TypeError(
            "cannot compare %r with %r: endpoints differ (%d -> %d vs %d -> %d)"
            % (print_expr(lhs), print_expr(rhs), ld.dim, lc.dim, rd.dim, rc.dim))
    item = equality_check(name, evaluate(lhs, env), evaluate(rhs, env),
                          details={"lhs": print_expr(lhs),
                                   "rhs": print_expr(rhs)})
    if not item.ok:
        (i, j), v = sorted(item.witness.entries.items())[0]
        item.details["first_difference"] = "%d %d %s" % (i, j, v)
    return Report([item])


def atom_pool(env):
    """All atomic expressions of an environment with their endpoints."""
    pool = [(Name(n), f.dom, f.cod) for n, f in env.morphisms.items()]
    for n in env.spaces:
        V = env.spaces[n]
        pool.append((Call("id", (n,)), V, V))
        for n2 in env.spaces:
            W = env.spaces[n2]
            pool.append((Call("br", (n, n2)), V.tensor(W), W.tensor(V)))
    for n, h in env.hopfs.items():
        H = h.space
        pool.extend([(Call("m", (n,)), H.tensor(H), H),
                     (Call("u", (n,)), h.unit.dom, H),
                     (Call("cm", (n,)), H, H.tensor(H)),
                     (Call("cu", (n,)), H, h.counit.cod),
                     (Call("S", (n,)), H, H)])
    for n, x in env.comodules.items():
        pool.extend([(Call("m", (n,)), x.space.tensor(x.space), x.space),
                     (Call("u", (n,)), x.algebra.unit.dom, x.space),
                     (Call("coact", (n,)), x.coaction.dom, x.coaction.cod)])
    for n, x in env.modules.items():
        pool.extend([(Call("cm", (n,)), x.space, x.space.tensor(x.space)),
                     (Call("cu", (n,)), x.space, x.coalgebra.counit.cod),
                     (Call("act", (n,)), x.action.dom, x.action.cod)])
    return pool


def random_well_typed(env, rng, steps=5):
    """One random well-typed expression; used for round-trip fuzzing."""
    pool = atom_pool(env)
    expr, dom, cod = pool[rng.randrange(len(pool))]
    for _ in range(steps):
        roll = rng.random()
        if roll < 0.4:
            other = pool[rng.randrange(len(pool))]
            if rng.random() < 0.5:
                expr, dom, cod = (Tensor(expr, other[0]),
                                  dom.tensor(other[1]), cod.tensor(other[2]))
            else:
                expr, dom, cod = (Tensor(other[0], expr),
                                  other[1].tensor(dom), other[2].tensor(cod))
        else:
            nxt = [a for a in pool if a[1] == cod]
            if nxt:
                follow = nxt[rng.randrange(len(nxt))]
                expr, cod = Seq(expr, follow[0]), follow[2]
    return expr


def run_assertions(text, env):
    """Run `EXPECT <expr> == <expr>` lines; blank lines and # comments skip."""
    rep = Report()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not line.startswith("EXPECT ") or " == " not in line:
            raise ParseError(1, {"EXPECT <expr> == <expr>"},
                             "line %d: %s" % (lineno, line))
        body = line[len("EXPECT "):]
        lhs_src, rhs_src = body.split(" == ", 1)
        rep.extend(assert_equal(parse(lhs_src), parse(rhs_src), env,
                                name="line_%03d" % lineno))
    return rep
