"""Schubert calculus on G/B, enough to evaluate intersection numbers.

Classes ``[Omega_v]`` (codimension ``l(v)``) are multiplied with the Chevalley rule

    [Omega_{s_i}] . [Omega_v] = sum_{beta > 0, l(v s_beta) = l(v) + 1} <omega_i, beta^vee> [Omega_{v s_beta}].

A general class is first rewritten as a rational combination of monomials in the
divisor classes ``h_i = [Omega_{s_i}]`` (one exact linear solve per degree), after
which products are iterated Chevalley steps.

The BGG route (``bgg_structure_constant``) is an independent cross-check: Schubert
polynomials ``S_v = d_{v^-1 w0} S_{w0}`` in simple-root variables, with
``S_{w0} = prod(alpha) / |W|``.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Mapping, Sequence

from .reps import ResourceLimitError
from .rootsys import RootSystem, WeylElement, _invert, inversion_set, longest_element

DEFAULT_MAX_WEYL_SIZE = 10_000


def _check_size(system: RootSystem, cap: int | None):
    cap = DEFAULT_MAX_WEYL_SIZE if cap is None else cap
    if system.weyl_group_order > cap:
        raise ResourceLimitError(
            f"|W({system.name})| = {system.weyl_group_order} exceeds the Weyl group cap {cap}"
        )


# ---------------------------------------------------------------------------
# Schubert expressions


@dataclass(frozen=True)
class SchubertExpr:
    """A finite combination of Schubert classes ``[Omega_v]``."""

    system: RootSystem
    terms: Mapping[WeylElement, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for v, c in self.terms.items():
            if v.system != self.system:
                raise ValueError("Schubert class from a different root system")
            c = Fraction(c)
            if c:
                clean[v] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def schubert(cls, w: WeylElement) -> "SchubertExpr":
        return cls(w.system, {w: 1})

    @property
    def degree(self) -> int | None:
        """Common codimension, or None for zero/inhomogeneous expressions."""
        degs = {v.length for v in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self) -> bool:
        return len({v.length for v in self.terms}) <= 1

    def coefficient(self, w: WeylElement) -> Fraction:
        return self.terms.get(w, Fraction(0))

    def __add__(self, other: "SchubertExpr") -> "SchubertExpr":
        out = dict(self.terms)
        for v, c in other.terms.items():
            out[v] = out.get(v, 0) + c
        return SchubertExpr(self.system, out)

    def __sub__(self, other: "SchubertExpr") -> "SchubertExpr":
        return self + other.scale(-1)

    def scale(self, k) -> "SchubertExpr":
        return SchubertExpr(self.system, {v: c * k for v, c in self.terms.items()})

    def __rmul__(self, k):
        if isinstance(k, (int, Fraction)):
            return self.scale(k)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, SchubertExpr):
            return _multiply(self, other)
        return NotImplemented

    def __pow__(self, k: int) -> "SchubertExpr":
        out = SchubertExpr(self.system, {self.system.identity: 1})
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, SchubertExpr):
            return self.system == other.system and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.system, frozenset(self.terms.items())))

    def is_positive_integral(self) -> bool:
        return all(c > 0 and c.denominator == 1 for c in self.terms.values())

    def items(self):
        return sorted(self.terms.items(), key=lambda t: (t[0].length, t[0].word))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for v, c in self.items():
            coef = "" if c == 1 else f"{c}*"
            parts.append(f"{coef}[{v}]")
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# Chevalley rule and the monomial basis


class _Engine:
    """Per-system caches: Chevalley steps and monomial -> Schubert matrices."""

    def __init__(self, system: RootSystem):
        self.system = system
        rho = system.rho
        self.reflections = []
        for bw, cor in zip(system.positive_roots_weight, system.positive_coroots):
            h = sum(cor)
            key = tuple(r - h * b for r, b in zip(rho, bw))
            self.reflections.append((key, cor))
        self._chev: dict = {}
        self._basis: dict = {}
        self._mono: dict = {(): {system.identity: 1}}
        self._lock = threading.Lock()

    def chevalley(self, i: int, v: WeylElement) -> dict:
        """``[Omega_{s_i}] . [Omega_v]`` as {element: int} (``i`` is 1-based)."""
        hit = self._chev.get((i, v))
        if hit is not None:
            return hit
        out = {}
        target = v.length + 1
        for key, cor in self.reflections:
            c = cor[i - 1]
            if not c:
                continue
            x = WeylElement(self.system, v.act_raw(key))
            if x.length == target:
                out[x] = out.get(x, 0) + c
        self._chev[(i, v)] = out
        return out

    def times_monomial(self, cls: dict, mono: Sequence[int]) -> dict:
        for i in mono:
            nxt: dict = {}
            for v, c in cls.items():
                for x, d in self.chevalley(i, v).items():
                    nxt[x] = nxt.get(x, 0) + c * d
            cls = nxt
        return cls

    def monomial_class(self, mono: tuple) -> dict:
        hit = self._mono.get(mono)
        if hit is None:
            hit = self.times_monomial(self.monomial_class(mono[:-1]), mono[-1:])
            self._mono[mono] = hit
        return hit

    def basis(self, d: int):
        """Elements of length ``d``, chosen monomials, and the inverse expansion matrix."""
        hit = self._basis.get(d)
        if hit is not None:
            return hit
        sys_ = self.system
        elems = sys_.elements_of_length(d)
        index = {v: k for k, v in enumerate(elems)}
        N = len(elems)
        chosen, rows = [], []
        echelon: list[tuple[int, list]] = []  # (pivot, row) pairs, rows reduced
        for mono in combinations_with_replacement(range(1, sys_.rank + 1), d):
            if len(chosen) == N:
                break
            cls = self.monomial_class(mono)
            row = [Fraction(0)] * N
            for v, c in cls.items():
                row[index[v]] = Fraction(c)
            red = row[:]
            for p, er in echelon:
                if red[p]:
                    f = red[p] / er[p]
                    red = [a - f * b for a, b in zip(red, er)]
            piv = next((k for k, a in enumerate(red) if a), None)
            if piv is None:
                continue
            echelon.append((piv, red))
            chosen.append(mono)
            rows.append(row)
        if len(chosen) != N:
            raise ArithmeticError(f"divisor monomials do not span degree {d}")
        # rows[m][v] = coeff of Omega_v in monomial m, so Omega_v = sum_m inv[m][v] * monomial m
        inv = _invert([list(r) for r in zip(*rows)]) if N else []
        out = (index, chosen, inv)
        with self._lock:
            self._basis.setdefault(d, out)
        return self._basis[d]

    def as_monomials(self, u: WeylElement) -> list[tuple[tuple, Fraction]]:
        d = u.length
        if d == 0:
            return [((), Fraction(1))]
        if d == 1:
            return [(u.word, Fraction(1))]
        index, chosen, inv = self.basis(d)
        k = index[u]
        return [(chosen[m], inv[m][k]) for m in range(len(chosen)) if inv[m][k]]


_ENGINES: dict[RootSystem, _Engine] = {}
_ENGINE_LOCK = threading.Lock()


def _engine(system: RootSystem) -> _Engine:
    eng = _ENGINES.get(system)
    if eng is None:
        with _ENGINE_LOCK:
            eng = _ENGINES.setdefault(system, _Engine(system))
    return eng


def chevalley(system: RootSystem, i: int, v: WeylElement) -> SchubertExpr:
    """``[Omega_{s_i}] . [Omega_v]`` by the Chevalley rule."""
    return SchubertExpr(system, _engine(system).chevalley(i, v))


def _multiply(a: SchubertExpr, b: SchubertExpr) -> SchubertExpr:
    eng = _engine(a.system)
    out: dict = {}
    for u, cu in b.terms.items():
        for mono, cm in eng.as_monomials(u):
            res = eng.times_monomial(dict(a.terms), mono)
            for x, c in res.items():
                out[x] = out.get(x, 0) + cu * cm * c
    return SchubertExpr(a.system, out)


def schubert_product(
    system: RootSystem, factors: Sequence[WeylElement], max_weyl_size: int | None = None
) -> SchubertExpr:
    """Expand ``prod_i [Omega_{w_i}]`` in the Schubert basis."""
    if not factors:
        raise ValueError("schubert_product needs at least one factor")
    _check_size(system, max_weyl_size)
    for f in factors:
        if f.system != system:
            raise ValueError("factor from a different root system")
    # multiply the longest factor by the others: fewer monomial expansions
    order = sorted(factors, key=lambda f: -f.length)
    acc = SchubertExpr.schubert(order[0])
    for f in order[1:]:
        acc = acc * SchubertExpr.schubert(f)
    if not acc.is_positive_integral():
        raise ArithmeticError(f"Schubert product with non-positive or fractional coefficients: {acc}")
    return acc


@dataclass(frozen=True)
class IntersectionReport:
    value: int
    note: str = ""


def intersection_report(
    system: RootSystem, ws: Sequence[WeylElement], w: WeylElement, max_weyl_size: int | None = None
) -> IntersectionReport:
    total = sum(x.length for x in ws)
    if total != w.length:
        return IntersectionReport(0, f"degree mismatch: sum of lengths {total} != l(w) = {w.length}")
    if not ws:
        return IntersectionReport(int(w.is_identity()))
    c = schubert_product(system, ws, max_weyl_size).coefficient(w)
    return IntersectionReport(int(c))


def intersection_number(
    system: RootSystem, ws: Sequence[WeylElement], w: WeylElement, max_weyl_size: int | None = None
) -> int:
    """Coefficient of ``[Omega_w]`` in ``prod_i [Omega_{w_i}]`` (0 on degree mismatch)."""
    return intersection_report(system, ws, w, max_weyl_size).value


def disjoint_inversion_check(ws: Iterable[WeylElement], w: WeylElement) -> bool:
    """True iff the inversion sets of ``ws`` partition the inversion set of ``w``."""
    target = inversion_set(w).roots
    seen: set = set()
    for x in ws:
        r = inversion_set(x).roots
        if seen & r:
            return False
        seen |= r
    return seen == target


# ---------------------------------------------------------------------------
# Borel presentation: polynomials in simple-root variables


@dataclass(frozen=True)
class PolynomialRep:
    """Polynomial with rational coefficients; variable ``j`` stands for ``alpha_{j+1}``."""

    nvars: int
    terms: Mapping[tuple, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for e, c in self.terms.items():
            e = tuple(e)
            if len(e) != self.nvars:
                raise ValueError("exponent length does not match nvars")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, 0) + c
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if c})

    @classmethod
    def constant(cls, n: int, c) -> "PolynomialRep":
        return cls(n, {(0,) * n: c})

    @classmethod
    def linear(cls, coeffs: Sequence) -> "PolynomialRep":
        n = len(coeffs)
        return cls(n, {tuple(int(k == j) for k in range(n)): c for j, c in enumerate(coeffs)})

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return PolynomialRep(self.nvars, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, k) -> "PolynomialRep":
        return PolynomialRep(self.nvars, {e: c * k for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return PolynomialRep(self.nvars, out)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int | None:
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def __eq__(self, other):
        if isinstance(other, PolynomialRep):
            return self.nvars == other.nvars and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))


def _pow_linear(n: int, i: int, j: int, cji: int, e: int) -> dict:
    """Expansion of ``(y_j - cji * y_i)^e`` as {exponent: int}."""
    out = {}
    for k in range(e + 1):
        exp = [0] * n
        exp[j] = e - k
        exp[i] += k
        out[tuple(exp)] = out.get(tuple(exp), 0) + comb(e, k) * (-cji) ** k
    return out


def reflect_polynomial(system: RootSystem, i: int, f: PolynomialRep) -> PolynomialRep:
    """``s_i f`` (``i`` 1-based), with ``s_i alpha_j = alpha_j - <alpha_j, alpha_i^vee> alpha_i``."""
    n = system.rank
    i0 = i - 1
    C = system.cartan
    out: dict = {}
    for e, c in f.terms.items():
        base = [0] * n
        base[i0] = e[i0]
        acc = {tuple(base): c * (-1) ** e[i0]}
        for j in range(n):
            if j == i0 or not e[j]:
                continue
            cji = C[j][i0]
            if not cji:
                nxt = {}
                for x, v in acc.items():
                    y = list(x)
                    y[j] += e[j]
                    nxt[tuple(y)] = v
                acc = nxt
                continue
            part = _pow_linear(n, i0, j, cji, e[j])
            nxt = {}
            for x, v in acc.items():
                for y, u in part.items():
                    z = tuple(a + b for a, b in zip(x, y))
                    nxt[z] = nxt.get(z, 0) + v * u
            acc = nxt
        for x, v in acc.items():
            out[x] = out.get(x, 0) + v
    return PolynomialRep(n, out)


def divided_difference(system: RootSystem, i: int, f: PolynomialRep) -> PolynomialRep:
    """``d_i f = (f - s_i f) / alpha_i``; exact because ``alpha_i`` is a coordinate variable."""
    g = f - reflect_polynomial(system, i, f)
    out = {}
    i0 = i - 1
    for e, c in g.terms.items():
        if e[i0] == 0:
            raise ArithmeticError("f - s_i f not divisible by alpha_i")
        x = list(e)
        x[i0] -= 1
        out[tuple(x)] = c
    return PolynomialRep(f.nvars, out)


def apply_word(system: RootSystem, word: Sequence[int], f: PolynomialRep) -> PolynomialRep:
    """``d_{a1} ... d_{ak} f`` for ``word = (a1, ..., ak)``."""
    for i in reversed(tuple(word)):
        f = divided_difference(system, i, f)
        if f.is_zero():
            break
    return f


class _BGG:
    def __init__(self, system: RootSystem):
        self.system = system
        n = system.rank
        top = PolynomialRep.constant(n, Fraction(1, system.weyl_group_order))
        for b in system.positive_roots:
            top = top * PolynomialRep.linear(b)
        self.top = top
        self.w0 = longest_element(system)
        self._cache: dict = {}

    def schubert_polynomial(self, v: WeylElement) -> PolynomialRep:
        hit = self._cache.get(v)
        if hit is None:
            x = v.inverse() * self.w0
            hit = apply_word(self.system, x.word, self.top)
            self._cache[v] = hit
        return hit


_BGGS: dict = {}


def schubert_polynomial(system: RootSystem, v: WeylElement, max_weyl_size: int = 200) -> PolynomialRep:
    """BGG representative of ``[Omega_v]`` (small groups only)."""
    _check_size(system, max_weyl_size)
    b = _BGGS.get(system)
    if b is None:
        b = _BGGS.setdefault(system, _BGG(system))
    return b.schubert_polynomial(v)


def bgg_structure_constant(
    system: RootSystem, ws: Sequence[WeylElement], w: WeylElement, max_weyl_size: int = 200
) -> Fraction:
    """Coefficient of ``[Omega_w]`` in ``prod [Omega_{w_i}]`` via ``d_w`` of the polynomial product."""
    if sum(x.length for x in ws) != w.length:
        return Fraction(0)
    f = PolynomialRep.constant(system.rank, 1)
    for x in ws:
        f = f * schubert_polynomial(system, x, max_weyl_size)
    return apply_word(system, w.word, f).constant_term()
