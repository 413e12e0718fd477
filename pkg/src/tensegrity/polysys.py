"""Sparse multivariate polynomials over Q, monomial orders and Groebner bases.

Monomials are tuples of ``(variable, exponent)`` pairs sorted by variable
name, so polynomials over different variable sets mix freely.  Groebner
computations convert to dense exponent vectors over the variables listed
in a :class:`MonomialOrder`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence, Union

from .linalg import format_rational, to_rational

Monomial = tuple[tuple[str, int], ...]
Scalar = Union[int, Fraction]


class GroebnerBudgetExceeded(RuntimeError):
    pass


# ---------------------------------------------------------------- variables

_COORD = re.compile(r"^([xyz])(\d+)$")
_COORD_HI = re.compile(r"^x(\d+)_(\d+)$")
_TENSION = re.compile(r"^w(\d+)_(\d+)(?:_(\d+))?$")
_AUX = re.compile(r"^t(\d+)(?:_(\d+))*$")


def coord_var(vertex: int, component: int, d: int) -> str:
    """Name of coordinate ``component`` of an unknown point: x6, y6, z6 ..."""
    if d <= 3:
        return "xyz"[component] + str(vertex)
    return f"x{vertex}_{component}"


def tension_var(i: int, j: int, tag: int | None = None) -> str:
    i, j = min(i, j), max(i, j)
    return f"w{i}_{j}" if tag is None else f"w{i}_{j}_{tag}"


def aux_var(*indices: int) -> str:
    return "t" + "_".join(str(i) for i in indices)


def variable_kind(name: str) -> tuple[str, tuple[int, ...]]:
    """Classify a variable name as coordinate, tension, auxiliary or other."""
    if m := _COORD.match(name):
        return "coordinate", (int(m.group(2)), "xyz".index(m.group(1)))
    if m := _COORD_HI.match(name):
        return "coordinate", (int(m.group(1)), int(m.group(2)))
    if m := _TENSION.match(name):
        return "tension", tuple(int(g) for g in m.groups() if g is not None)
    if _AUX.match(name):
        return "auxiliary", tuple(int(g) for g in name[1:].split("_"))
    return "other", ()


_KIND_RANK = {"auxiliary": 0, "tension": 1, "other": 2, "coordinate": 3}


def variable_sort_key(name: str):
    kind, idx = variable_kind(name)
    return (_KIND_RANK[kind], idx, name)


def sort_variables(names: Iterable[str]) -> list[str]:
    return sorted(set(names), key=variable_sort_key)


# -------------------------------------------------------------- polynomials

def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


class Polynomial:
    """Polynomial with exact rational coefficients; zero terms are never stored."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean: dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            c = to_rational(c)
            if c:
                clean[tuple(sorted((v, e) for v, e in m if e))] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def var(cls, name: str) -> "Polynomial":
        return cls({((name, 1),): 1})

    @classmethod
    def const(cls, c: Scalar) -> "Polynomial":
        return cls({(): c})

    @staticmethod
    def coerce(x) -> "Polynomial":
        if isinstance(x, Polynomial):
            return x
        return Polynomial.const(to_rational(x))

    # arithmetic
    def __add__(self, other):
        other = Polynomial.coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-Polynomial.coerce(other))

    def __rsub__(self, other):
        return Polynomial.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = to_rational(other)
            return Polynomial({m: c * a for m, a in self.terms.items()})
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = to_rational(other) if not isinstance(other, Polynomial) else other.constant_value()
        if c is None:
            raise TypeError("only division by nonzero constants is supported")
        return self * (1 / c)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        out, base = Polynomial.const(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # inspection
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def constant_value(self) -> Fraction | None:
        """The value if the polynomial is constant, else None."""
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1 and () in self.terms:
            return self.terms[()]
        return None

    def is_constant(self) -> bool:
        return self.constant_value() is not None

    @property
    def variables(self) -> set[str]:
        return {v for m in self.terms for v, _ in m}

    def total_degree(self) -> int:
        return max((sum(e for _, e in m) for m in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        return max((dict(m).get(name, 0) for m in self.terms), default=-1)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # evaluation
    def subs(self, assignment: Mapping[str, Union[Scalar, "Polynomial"]]) -> "Polynomial":
        """Substitute rationals or polynomials for some variables."""
        out = Polynomial()
        cache: dict[tuple[str, int], Polynomial] = {}
        for m, c in self.terms.items():
            term = Polynomial.const(c)
            rest = []
            for v, e in m:
                if v in assignment:
                    key = (v, e)
                    if key not in cache:
                        cache[key] = Polynomial.coerce(assignment[v]) ** e
                    term = term * cache[key]
                else:
                    rest.append((v, e))
            if rest:
                term = term * Polynomial({tuple(rest): 1})
            out = out + term
        return out

    def evaluate(self, assignment: Mapping[str, Scalar]) -> Fraction:
        missing = self.variables - set(assignment)
        if missing:
            raise KeyError(f"no value for {sorted(missing)}")
        total = Fraction(0)
        for m, c in self.terms.items():
            t = c
            for v, e in m:
                t *= to_rational(assignment[v]) ** e
            total += t
        return total

    def primitive(self) -> "Polynomial":
        """Scale so the leading term (in display order) has coefficient 1."""
        if not self.terms:
            return self
        lead = self.terms[_display_terms(self)[0]]
        return self * (1 / lead)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def _display_terms(p: Polynomial) -> list[Monomial]:
    order = sort_variables(p.variables)
    rank = {v: i for i, v in enumerate(order)}

    def key(m: Monomial):
        vec = [0] * len(order)
        for v, e in m:
            vec[rank[v]] = e
        return (sum(vec), vec)

    return sorted(p.terms, key=key, reverse=True)


def format_polynomial(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    order = sort_variables(p.variables)
    rank = {v: i for i, v in enumerate(order)}
    parts = []
    for k, m in enumerate(_display_terms(p)):
        c = p.terms[m]
        neg = c < 0
        a = -c if neg else c
        factors = [v if e == 1 else f"{v}^{e}" for v, e in sorted(m, key=lambda ve: rank[ve[0]])]
        if not factors:
            body = format_rational(a)
        elif a == 1:
            body = "*".join(factors)
        else:
            body = format_rational(a) + "*" + "*".join(factors)
        if k == 0:
            parts.append("-" + body if neg else body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def parse_polynomial(text: str) -> Polynomial:
    """Parse expressions such as ``"x6^2 - 3/7*y6 + (z6 - 1)*w2_4"``."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        num, name, sym = m.groups()
        tokens.append(("num", int(num)) if num else ("name", name) if name else ("sym", sym))
        pos = m.end()
    tokens.append(("end", None))
    i = 0

    def peek():
        return tokens[i]

    def take():
        nonlocal i
        tok = tokens[i]
        i += 1
        return tok

    def expect(sym):
        tok = take()
        if tok != ("sym", sym):
            raise ValueError(f"expected {sym!r} in {text!r}")

    def expr():
        out = term()
        while peek() in (("sym", "+"), ("sym", "-")):
            op = take()[1]
            rhs = term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term():
        out = unary()
        while peek() in (("sym", "*"), ("sym", "/")):
            op = take()[1]
            rhs = unary()
            out = out * rhs if op == "*" else out / rhs
        return out

    def unary():
        if peek() == ("sym", "-"):
            take()
            return -unary()
        if peek() == ("sym", "+"):
            take()
            return unary()
        return power()

    def power():
        base = atom()
        if peek() == ("sym", "^"):
            take()
            kind, val = take()
            if kind != "num":
                raise ValueError(f"exponent must be an integer in {text!r}")
            return base ** val
        return base

    def atom():
        kind, val = take()
        if kind == "num":
            return Polynomial.const(val)
        if kind == "name":
            return Polynomial.var(val)
        if (kind, val) == ("sym", "("):
            out = expr()
            expect(")")
            return out
        raise ValueError(f"unexpected token {val!r} in {text!r}")

    result = expr()
    if peek()[0] != "end":
        raise ValueError(f"trailing input in {text!r}")
    return result


def poly_arith(a: Polynomial, b: Polynomial | None, op: str) -> Polynomial:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    raise ValueError(f"unknown operation {op!r}")


def evaluate(p: Polynomial, assignment: Mapping[str, Union[Scalar, Polynomial]]):
    """Full evaluation to a Fraction, or partial substitution to a Polynomial."""
    if p.variables <= set(assignment) and all(
            not isinstance(assignment[v], Polynomial) for v in p.variables):
        return p.evaluate(assignment)
    return p.subs(assignment)


# ----------------------------------------------------------- monomial orders

@dataclass(frozen=True)
class MonomialOrder:
    """Total order on monomials over ``variables`` (listed largest first).

    ``scheme`` is ``"lex"``, ``"grevlex"`` or ``"block"``; a block order
    compares the first block with ``inner[0]``, then the next block, etc.
    """

    scheme: str
    variables: tuple[str, ...]
    blocks: tuple[tuple[str, ...], ...] = ()
    inner: tuple[str, ...] = ()
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if self.scheme not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown monomial order {self.scheme!r}")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("repeated variable in order")
        if self.scheme == "block":
            flat = tuple(v for b in self.blocks for v in b)
            if flat != self.variables:
                raise ValueError("blocks must partition the variables in order")
            if len(self.inner) != len(self.blocks):
                raise ValueError("one inner order per block required")

    @classmethod
    def lex(cls, variables: Sequence[str]) -> "MonomialOrder":
        return cls("lex", tuple(variables))

    @classmethod
    def grevlex(cls, variables: Sequence[str]) -> "MonomialOrder":
        return cls("grevlex", tuple(variables))

    @classmethod
    def elimination(cls, drop: Sequence[str], keep: Sequence[str],
                    drop_order: str = "grevlex", keep_order: str = "lex") -> "MonomialOrder":
        """Block order with every ``drop`` variable above every ``keep`` one."""
        blocks = tuple(b for b in (tuple(drop), tuple(keep)) if b)
        inner = tuple(o for b, o in ((drop, drop_order), (keep, keep_order)) if b)
        return cls("block", tuple(drop) + tuple(keep), blocks, inner)

    def key(self, exps: tuple[int, ...]):
        """Sort key: larger key means larger monomial."""
        k = self._cache.get(exps)
        if k is None:
            if self.scheme == "lex":
                k = exps
            elif self.scheme == "grevlex":
                k = _grevlex_key(exps)
            else:
                parts = []
                start = 0
                for block, inner in zip(self.blocks, self.inner):
                    sub = exps[start:start + len(block)]
                    parts.append(sub if inner == "lex" else _grevlex_key(sub))
                    start += len(block)
                k = tuple(parts)
            self._cache[exps] = k
        return k

    def exponents(self, m: Monomial) -> tuple[int, ...]:
        idx = {v: i for i, v in enumerate(self.variables)}
        vec = [0] * len(self.variables)
        for v, e in m:
            if v not in idx:
                raise ValueError(f"variable {v} not covered by the monomial order")
            vec[idx[v]] = e
        return tuple(vec)

    def monomial(self, exps: tuple[int, ...]) -> Monomial:
        return tuple(sorted((v, e) for v, e in zip(self.variables, exps) if e))

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(self.exponents(a)), self.key(self.exponents(b))
        return (ka > kb) - (ka < kb)

    def leading_monomial(self, p: Polynomial) -> Monomial:
        if not p.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(p.terms, key=lambda m: self.key(self.exponents(m)))


def _grevlex_key(exps: tuple[int, ...]):
    return (sum(exps), tuple(-e for e in reversed(exps)))


# ---------------------------------------------- dense-exponent internals

def _to_dense(p: Polynomial, order: MonomialOrder) -> dict:
    return {order.exponents(m): c for m, c in p.terms.items()}


def _from_dense(p: dict, order: MonomialOrder) -> Polynomial:
    return Polynomial({order.monomial(e): c for e, c in p.items()})


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lm(p: dict, key):
    return max(p, key=key)


class _Counter:
    def __init__(self, budget: int | None):
        self.budget = budget
        self.steps = 0

    def tick(self):
        self.steps += 1
        if self.budget is not None and self.steps > self.budget:
            raise GroebnerBudgetExceeded(f"Groebner step budget of {self.budget} exhausted")


def _reduce(f: dict, basis: list, key, counter: _Counter | None = None) -> dict:
    """Full reduction of ``f`` by ``basis`` (list of (lm, monic dense poly))."""
    p = dict(f)
    r = {}
    while p:
        m = _lm(p, key)
        c = p[m]
        for lm, g in basis:
            if _divides(lm, m):
                if counter:
                    counter.tick()
                q = tuple(x - y for x, y in zip(m, lm))
                for gm, gc in g.items():
                    mm = tuple(x + y for x, y in zip(gm, q))
                    v = p.get(mm, 0) - c * gc
                    if v:
                        p[mm] = v
                    else:
                        p.pop(mm, None)
                break
        else:
            r[m] = c
            del p[m]
    return r


def _monic(p: dict, key) -> dict:
    lc = p[_lm(p, key)]
    return {m: c / lc for m, c in p.items()} if lc != 1 else p


def _spoly(f: dict, g: dict, lmf, lmg) -> dict:
    lcm = tuple(max(a, b) for a, b in zip(lmf, lmg))
    qf = tuple(a - b for a, b in zip(lcm, lmf))
    qg = tuple(a - b for a, b in zip(lcm, lmg))
    out = {}
    for m, c in f.items():
        mm = tuple(x + y for x, y in zip(m, qf))
        out[mm] = out.get(mm, 0) + c
    for m, c in g.items():
        mm = tuple(x + y for x, y in zip(m, qg))
        v = out.get(mm, 0) - c
        if v:
            out[mm] = v
        else:
            out.pop(mm, None)
    return {m: c for m, c in out.items() if c}


# ----------------------------------------------------------- public algebra

def normal_form(p: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    """Remainder of multivariate division of ``p`` by ``basis``."""
    if not basis:
        raise ValueError("empty divisor list")
    key = order.key
    dense = []
    for g in basis:
        if g.is_zero():
            continue
        gd = _monic(_to_dense(g, order), key)
        dense.append((_lm(gd, key), gd))
    return _from_dense(_reduce(_to_dense(p, order), dense, key), order)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    key = order.key
    fd = _monic(_to_dense(f, order), key)
    gd = _monic(_to_dense(g, order), key)
    return _from_dense(_spoly(fd, gd, _lm(fd, key), _lm(gd, key)), order)


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder,
               budget: int | None = None) -> list[Polynomial]:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Pairs are processed smallest-lcm first; pairs with coprime leading
    monomials and pairs caught by the chain criterion are skipped.
    ``budget`` caps the number of processed pairs plus reduction steps.
    """
    key = order.key
    counter = _Counter(budget)
    basis: list[tuple[tuple, dict]] = []
    pairs: set[tuple[int, int]] = set()

    def add(h: dict):
        h = _monic(h, key)
        k = len(basis)
        basis.append((_lm(h, key), h))
        pairs.update((i, k) for i in range(k))

    for g in gens:
        gd = _to_dense(Polynomial.coerce(g), order)
        if gd:
            r = _reduce(gd, basis, key, counter)
            if r:
                add(r)

    while pairs:
        i, j = min(pairs, key=lambda ij: (key(_lcm(basis[ij[0]][0], basis[ij[1]][0])), ij))
        pairs.discard((i, j))
        counter.tick()
        lmi, fi = basis[i]
        lmj, fj = basis[j]
        if all(a == 0 or b == 0 for a, b in zip(lmi, lmj)):
            continue
        if _chain_skip(i, j, _lcm(lmi, lmj), basis, pairs):
            continue
        r = _reduce(_spoly(fi, fj, lmi, lmj), basis, key, counter)
        if r:
            add(r)

    return _interreduce(basis, order)


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _chain_skip(i, j, lcm, basis, pairs) -> bool:
    # Buchberger's second criterion: some k with lm_k | lcm whose pairs with
    # i and j have both been treated already
    for k, (lmk, _) in enumerate(basis):
        if k in (i, j) or not _divides(lmk, lcm):
            continue
        if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
            return True
    return False


def _interreduce(basis: list, order: MonomialOrder) -> list[Polynomial]:
    key = order.key
    polys = sorted((g for _, g in basis), key=lambda g: key(_lm(g, key)))
    minimal = []
    for g in polys:
        lm = _lm(g, key)
        if not any(_divides(m, lm) for m, _ in minimal):
            minimal.append((lm, g))
    reduced = []
    for k, (lm, g) in enumerate(minimal):
        others = [b for b in minimal if b[0] != lm]
        reduced.append(_monic(_reduce(g, others, key), key))
    reduced.sort(key=lambda g: key(_lm(g, key)), reverse=True)
    return [_from_dense(g, order) for g in reduced]


def is_groebner_basis(basis: Sequence[Polynomial], order: MonomialOrder) -> bool:
    """Check that every S-polynomial reduces to zero."""
    for f, g in combinations(basis, 2):
        if not normal_form(s_polynomial(f, g, order), basis, order).is_zero():
            return False
    return True


def collect_variables(polys: Iterable[Polynomial]) -> list[str]:
    out: set[str] = set()
    for p in polys:
        out |= p.variables
    return sort_variables(out)


def eliminate(gens: Sequence[Polynomial], drop: Iterable[str],
              keep: Sequence[str] | None = None, budget: int | None = None) -> list[Polynomial]:
    """Generators of the elimination ideal ``<gens>`` intersected with Q[keep]."""
    drop = set(drop)
    allvars = collect_variables(gens)
    drop_vars = [v for v in allvars if v in drop]
    keep_vars = list(keep) if keep is not None else [v for v in allvars if v not in drop]
    keep_vars += [v for v in allvars if v not in drop and v not in keep_vars]
    if not drop_vars:
        order = MonomialOrder.lex(keep_vars) if keep_vars else MonomialOrder.lex(["_"])
        if not keep_vars:
            return [g for g in gens if not g.is_zero()][:1]
        return buchberger(gens, order, budget)
    order = MonomialOrder.elimination(drop_vars, keep_vars)
    gb = buchberger(gens, order, budget)
    return [g for g in gb if not (g.variables & drop)]


def saturate(gens: Sequence[Polynomial], factors: Iterable[Polynomial],
             keep: Sequence[str] | None = None, budget: int | None = None) -> list[Polynomial]:
    """Generators of ``<gens> : (prod factors)^infinity`` via one auxiliary variable each."""
    ideal = list(gens)
    for k, s in enumerate(factors):
        if s.is_constant():
            if s.is_zero():
                return [Polynomial.const(1)]
            continue
        t = f"_sat{k}"
        ideal = eliminate(ideal + [Polynomial.const(1) - Polynomial.var(t) * s], {t}, keep, budget)
    return ideal


def ideal_contains(gens: Sequence[Polynomial], p: Polynomial,
                   variables: Sequence[str] | None = None) -> bool:
    variables = list(variables or collect_variables([*gens, p]))
    order = MonomialOrder.grevlex(variables or ["_"])
    if not gens:
        return p.is_zero()
    gb = buchberger(gens, order)
    return normal_form(p, gb, order).is_zero()


def same_ideal(a: Sequence[Polynomial], b: Sequence[Polynomial]) -> bool:
    """Mutual membership of two generator lists."""
    variables = collect_variables([*a, *b])
    return all(ideal_contains(b, p, variables) for p in a) and \
        all(ideal_contains(a, p, variables) for p in b)


def divide_exact(f: Polynomial, g: Polynomial) -> Polynomial | None:
    """Quotient ``f / g`` if ``g`` divides ``f`` exactly, else None."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    c = g.constant_value()
    if c is not None:
        return f * (1 / c)
    order = MonomialOrder.grevlex(collect_variables([f, g]))
    key = order.key
    gd = _to_dense(g, order)
    lm = _lm(gd, key)
    lc = gd[lm]
    p = _to_dense(f, order)
    q: dict = {}
    while p:
        m = _lm(p, key)
        if not _divides(lm, m):
            return None
        shift = tuple(x - y for x, y in zip(m, lm))
        coef = p[m] / lc
        q[shift] = q.get(shift, 0) + coef
        for gm, gc in gd.items():
            mm = tuple(x + y for x, y in zip(gm, shift))
            v = p.get(mm, 0) - coef * gc
            if v:
                p[mm] = v
            else:
                p.pop(mm, None)
    return _from_dense(q, order)


def determinant_of(rows: Sequence[Sequence]) -> Polynomial:
    """Laplace expansion for small matrices with polynomial entries."""
    rows = [[Polynomial.coerce(x) for x in r] for r in rows]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")

    memo: dict[tuple[int, tuple[int, ...]], Polynomial] = {}

    def minor(r: int, cols: tuple[int, ...]) -> Polynomial:
        if r == n:
            return Polynomial.const(1)
        hit = memo.get((r, cols))
        if hit is not None:
            return hit
        total = Polynomial()
        for k, c in enumerate(cols):
            entry = rows[r][c]
            if entry.is_zero():
                continue
            sub = minor(r + 1, cols[:k] + cols[k + 1:])
            term = entry * sub
            total = total + term if k % 2 == 0 else total - term
        memo[(r, cols)] = total
        return total

    return minor(0, tuple(range(n)))
