"""Classical root systems, Weyl group elements and exact weight arithmetic.

Conventions used throughout the package:

* simple roots, simple reflections and Levi index sets are numbered from 1,
  so ``s3`` is the reflection in ``alpha_3``;
* ``cartan[i][j] = <alpha_i, alpha_j^vee>``, hence row ``i`` of the Cartan
  matrix is ``alpha_i`` written in the fundamental-weight basis (Bourbaki
  labelling for A, B, C, D);
* a Weyl word ``(4, 3)`` is the product ``s4 s3``; acting on a weight it
  applies ``s3`` first.

All arithmetic is on Python ints and :class:`fractions.Fraction`.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import factorial, gcd
from typing import Iterable, Sequence

MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


class RootSystemError(ValueError):
    pass


def _exact(x):
    if isinstance(x, bool):
        raise TypeError("booleans are not weights")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, str):
        return _exact(Fraction(x))
    # numpy integers and friends
    if hasattr(x, "__index__"):
        return int(x)
    raise TypeError(f"inexact coordinate {x!r}; use int or Fraction")


class _Vec(tuple):
    """Tuple with componentwise arithmetic and exact entries."""

    def __new__(cls, coords: Iterable = ()):
        return super().__new__(cls, (_exact(c) for c in coords))

    def __add__(self, other):
        if len(other) != len(self):
            raise ValueError("dimension mismatch")
        return type(self)(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        if len(other) != len(self):
            raise ValueError("dimension mismatch")
        return type(self)(a - b for a, b in zip(self, other))

    def __neg__(self):
        return type(self)(-a for a in self)

    def __mul__(self, k):
        if isinstance(k, (tuple, list)):
            return NotImplemented
        return type(self)(a * k for a in self)

    __rmul__ = __mul__

    def __repr__(self):
        return f"{type(self).__name__}({', '.join(str(c) for c in self)})"

    @property
    def coords(self):
        return tuple(self)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self)


class Weight(_Vec):
    """A weight in fundamental-weight coordinates."""

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self)

    def is_strictly_dominant(self) -> bool:
        return all(c > 0 for c in self)


class RootCoords(_Vec):
    """A vector in simple-root coordinates."""

    def support(self) -> set[int]:
        return {i + 1 for i, c in enumerate(self) if c != 0}


# ---------------------------------------------------------------------------
# construction


def _cartan_simple(family: str, n: int) -> list[list[int]]:
    C = [[0] * n for _ in range(n)]
    for i in range(n):
        C[i][i] = 2
    if family == "D":
        for i in range(n - 2):
            C[i][i + 1] = C[i + 1][i] = -1
        C[n - 3][n - 1] = C[n - 1][n - 3] = -1
        return C
    for i in range(n - 1):
        C[i][i + 1] = C[i + 1][i] = -1
    if family == "B":
        # alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
        C[n - 2][n - 1] = -2
    elif family == "C":
        # alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
        C[n - 1][n - 2] = -2
    return C


def _normalize_label(type_label) -> tuple[tuple[str, int], ...]:
    if isinstance(type_label, str):
        return parse_type(type_label)
    if (
        isinstance(type_label, tuple)
        and len(type_label) == 2
        and isinstance(type_label[0], str)
        and not isinstance(type_label[1], (tuple, list))
    ):
        type_label = [type_label]
    out = []
    for fam, rank in type_label:
        fam = str(fam).upper()
        if fam not in MIN_RANK:
            raise RootSystemError(f"unsupported family {fam!r}; expected one of A, B, C, D")
        if not isinstance(rank, int) or rank < MIN_RANK[fam]:
            raise RootSystemError(f"rank of {fam} must be an integer >= {MIN_RANK[fam]}, got {rank!r}")
        out.append((fam, rank))
    if not out:
        raise RootSystemError("empty type label")
    return tuple(out)


def parse_type(text: str) -> tuple[tuple[str, int], ...]:
    """Parse ``"A5"``, ``"A2xA2"`` or ``"D5"`` into a type label."""
    parts = [p for p in re.split(r"[xX×*]", text.strip()) if p]
    if not parts:
        raise RootSystemError(f"cannot parse group type {text!r}")
    out = []
    for p in parts:
        m = re.fullmatch(r"([A-Za-z])(\d+)", p.strip())
        if not m:
            raise RootSystemError(f"cannot parse group type component {p!r} in {text!r}")
        out.append((m.group(1).upper(), int(m.group(2))))
    return _normalize_label(out)


def format_type(type_label) -> str:
    return "x".join(f"{f}{r}" for f, r in type_label)


@lru_cache(maxsize=None)
def _build(label: tuple[tuple[str, int], ...]) -> "RootSystem":
    n = sum(r for _, r in label)
    C = [[0] * n for _ in range(n)]
    off = 0
    for fam, r in label:
        block = _cartan_simple(fam, r)
        for i in range(r):
            for j in range(r):
                C[off + i][off + j] = block[i][j]
        off += r
    return RootSystem(tuple(tuple(row) for row in C), label)


def build_root_system(type_label) -> "RootSystem":
    """Root system for a product of classical types.

    ``type_label`` is a string like ``"A2xA2"``, a single ``(family, rank)``
    pair or a list of them.
    """
    return _build(_normalize_label(type_label))


def _classify(C: Sequence[Sequence[int]]) -> tuple[str, int]:
    """Family and rank of a connected classical Cartan matrix (any labelling)."""
    n = len(C)
    if n == 1:
        return ("A", 1)
    degree = [sum(1 for j in range(n) if j != i and C[i][j]) for i in range(n)]
    doubles = [(i, j) for i in range(n) for j in range(n) if C[i][j] == -2]
    if doubles:
        i, j = doubles[0]
        # C[i][j] = -2 means alpha_j is the short root of the pair
        short, long_ = j, i
        leaves = [k for k in (i, j) if degree[k] == 1]
        end = max(leaves) if len(leaves) > 1 else leaves[0]
        return ("B" if end == short else "C", n)
    if max(degree) == 3:
        return ("D", n)
    if any(C[i][j] not in (0, -1) for i in range(n) for j in range(n) if i != j):
        raise RootSystemError("non-classical Cartan matrix")
    return ("A", n)


def _weyl_order(label) -> int:
    out = 1
    for fam, r in label:
        if fam == "A":
            out *= factorial(r + 1)
        elif fam in "BC":
            out *= 2**r * factorial(r)
        else:
            out *= 2 ** (r - 1) * factorial(r)
    return out


def _invert(M: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        p = next(r for r in range(c, n) if A[r][c] != 0)
        A[c], A[p] = A[p], A[c]
        piv = A[c][c]
        A[c] = [x / piv for x in A[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return [row[n:] for row in A]


@dataclass(frozen=True, eq=True)
class RootSystem:
    """A (possibly reducible) classical root system given by its Cartan matrix.

    ``cartan`` is authoritative; ``type_label`` lists the simple factors in
    index order. Levi subsystems keep the ambient ordering of their nodes, so
    their Cartan matrix may be a relabelled Bourbaki matrix.
    """

    cartan: tuple[tuple[int, ...], ...]
    type_label: tuple[tuple[str, int], ...]

    def __repr__(self):
        return f"RootSystem({format_type(self.type_label)})"

    @property
    def name(self) -> str:
        return format_type(self.type_label)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @cached_property
    def _nbrs(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        # for reflection s_i: the coordinates j touched, with C[i][j]
        C = self.cartan
        return tuple(tuple((j, C[i][j]) for j in range(self.rank) if C[i][j]) for i in range(self.rank))

    @cached_property
    def _col_nbrs(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        C = self.cartan
        return tuple(tuple((j, C[j][i]) for j in range(self.rank) if C[j][i]) for i in range(self.rank))

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Connected components of the Dynkin diagram (0-based, sorted)."""
        n, C = self.rank, self.cartan
        seen, comps = set(), []
        for s in range(n):
            if s in seen:
                continue
            comp, todo = [], [s]
            seen.add(s)
            while todo:
                i = todo.pop()
                comp.append(i)
                for j in range(n):
                    if C[i][j] and j not in seen:
                        seen.add(j)
                        todo.append(j)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    @cached_property
    def symmetrizer(self) -> tuple[int, ...]:
        """Half squared lengths ``d_i`` of the simple roots, shortest = 1 per component.

        ``(alpha_i, alpha_j) = cartan[i][j] * d_j``.
        """
        C = self.cartan
        d = [None] * self.rank
        for comp in self.components:
            d[comp[0]] = Fraction(1)
            todo = [comp[0]]
            while todo:
                i = todo.pop()
                for j in comp:
                    if C[i][j] and d[j] is None:
                        d[j] = d[i] * C[j][i] / C[i][j]
                        todo.append(j)
            den = 1
            for i in comp:
                den = den * d[i].denominator // gcd(den, d[i].denominator)
            vals = [int(d[i] * den) for i in comp]
            g = 0
            for v in vals:
                g = gcd(g, v)
            for i, v in zip(comp, vals):
                d[i] = v // g
        return tuple(d)

    @cached_property
    def positive_roots(self) -> tuple[RootCoords, ...]:
        """Positive roots in simple-root coordinates, ordered by height."""
        n, C = self.rank, self.cartan
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        found = set(simple)
        layer = list(simple)
        roots = list(simple)
        while layer:
            nxt = []
            for beta in layer:
                for i in range(n):
                    # alpha_i-string through beta: p down-steps exist already
                    p = 0
                    down = list(beta)
                    while True:
                        down[i] -= 1
                        if tuple(down) in found:
                            p += 1
                        else:
                            break
                    pairing = sum(beta[j] * C[j][i] for j in range(n))
                    q = p - pairing
                    if q > 0:
                        up = list(beta)
                        up[i] += 1
                        up = tuple(up)
                        if up not in found:
                            found.add(up)
                            nxt.append(up)
            nxt.sort(reverse=True)
            roots.extend(nxt)
            layer = nxt
        roots.sort(key=lambda r: (sum(r), tuple(-x for x in r)))
        return tuple(RootCoords(r) for r in roots)

    @cached_property
    def positive_roots_weight(self) -> tuple[tuple[int, ...], ...]:
        """Positive roots in fundamental-weight coordinates (same order)."""
        C, n = self.cartan, self.rank
        return tuple(tuple(sum(b[i] * C[i][j] for i in range(n)) for j in range(n)) for b in self.positive_roots)

    @cached_property
    def positive_coroots(self) -> tuple[tuple[int, ...], ...]:
        """Coroots of the positive roots in simple-coroot coordinates (same order)."""
        d = self.symmetrizer
        out = []
        for b in self.positive_roots:
            dbeta = Fraction(self.inner_root_root(b, b), 2)
            out.append(tuple(int(Fraction(b[j] * d[j]) / dbeta) for j in range(self.rank)))
        return tuple(out)

    @cached_property
    def inverse_cartan_transpose(self) -> tuple[tuple[Fraction, ...], ...]:
        CT = [[self.cartan[j][i] for j in range(self.rank)] for i in range(self.rank)]
        return tuple(tuple(row) for row in _invert(CT))

    @cached_property
    def _ict_int(self) -> tuple[int, tuple[tuple[int, ...], ...]]:
        # (den, M) with inverse_cartan_transpose == M / den and M integral
        den = 1
        for row in self.inverse_cartan_transpose:
            for x in row:
                den = den * x.denominator // gcd(den, x.denominator)
        M = tuple(tuple(int(x * den) for x in row) for row in self.inverse_cartan_transpose)
        return den, M

    @cached_property
    def rho(self) -> Weight:
        return Weight([1] * self.rank)

    @cached_property
    def weyl_group_order(self) -> int:
        return _weyl_order(self.type_label)

    # -- bilinear form -----------------------------------------------------

    def inner_root_root(self, a: Sequence, b: Sequence):
        C, d = self.cartan, self.symmetrizer
        n = self.rank
        return sum(a[i] * b[j] * C[i][j] * d[j] for i in range(n) if a[i] for j in range(n) if b[j])

    def inner_weight_root(self, mu: Sequence, b: Sequence):
        """``(mu, beta)`` for ``mu`` in weight and ``beta`` in root coordinates."""
        d = self.symmetrizer
        return sum(b[j] * d[j] * mu[j] for j in range(self.rank) if b[j])

    # -- basis change ------------------------------------------------------

    def to_root_basis(self, mu: Sequence) -> RootCoords:
        M = self.inverse_cartan_transpose
        return RootCoords(sum((M[i][j] * mu[j] for j in range(self.rank)), Fraction(0)) for i in range(self.rank))

    def from_root_basis(self, beta: Sequence) -> Weight:
        C = self.cartan
        return Weight(sum(beta[i] * C[i][j] for i in range(self.rank)) for j in range(self.rank))

    def root_coords_int(self, mu: Sequence) -> tuple[int, ...] | None:
        """Root coordinates of ``mu`` if they are all integers, else ``None``."""
        den, M = self._ict_int
        out = []
        for row in M:
            s = sum(r * m for r, m in zip(row, mu))
            if s % den:
                return None
            out.append(s // den)
        return tuple(out)

    def simple_root(self, i: int) -> Weight:
        """``alpha_i`` (1-based) in fundamental-weight coordinates."""
        return Weight(self.cartan[i - 1])

    # -- reflections on raw tuples (0-based), used in hot loops --------------

    def reflect(self, mu: tuple, i: int) -> tuple:
        """``s_i`` (0-based index) applied to a weight tuple."""
        c = mu[i]
        if not c:
            return mu
        out = list(mu)
        for j, cij in self._nbrs[i]:
            out[j] -= c * cij
        return tuple(out)

    def reflect_root(self, beta: tuple, i: int) -> tuple:
        """``s_i`` (0-based index) applied to a vector in root coordinates."""
        p = 0
        for j, cji in self._col_nbrs[i]:
            p += beta[j] * cji
        if not p:
            return beta
        out = list(beta)
        out[i] -= p
        return tuple(out)

    def dominant_conjugate(self, mu: tuple) -> tuple[tuple, int]:
        """Dominant weight in the orbit of ``mu`` and the parity of the reflections used."""
        mu = tuple(mu)
        sign = 1
        n = self.rank
        while True:
            for i in range(n):
                if mu[i] < 0:
                    mu = self.reflect(mu, i)
                    sign = -sign
                    break
            else:
                return mu, sign

    def orbit(self, mu: tuple) -> list[tuple]:
        """The Weyl orbit of a dominant weight."""
        mu = tuple(mu)
        seen = {mu}
        out = [mu]
        k = 0
        while k < len(out):
            v = out[k]
            k += 1
            for i in range(self.rank):
                if v[i] > 0:
                    u = self.reflect(v, i)
                    if u not in seen:
                        seen.add(u)
                        out.append(u)
        return out

    def signed_orbit(self, mu: tuple) -> list[tuple[tuple, int]]:
        """``[(w mu, sign(w))]`` over all of W, for a strictly dominant ``mu``."""
        mu = tuple(mu)
        if any(c <= 0 for c in mu):
            raise ValueError("signed_orbit needs a strictly dominant weight")
        depth = {mu: 0}
        order = [mu]
        k = 0
        while k < len(order):
            v = order[k]
            k += 1
            for i in range(self.rank):
                if v[i] > 0:
                    u = self.reflect(v, i)
                    if u not in depth:
                        depth[u] = depth[v] + 1
                        order.append(u)
        return [(v, -1 if depth[v] % 2 else 1) for v in order]

    # -- subsystems --------------------------------------------------------

    def subsystem(self, indices: Iterable[int]) -> "RootSystem":
        """Root system of the Dynkin subdiagram on the given 1-based nodes (ambient order)."""
        idx = sorted(set(indices))
        if any(i < 1 or i > self.rank for i in idx):
            raise RootSystemError(f"node index out of range 1..{self.rank}: {idx}")
        if not idx:
            return TRIVIAL
        C = tuple(tuple(self.cartan[i - 1][j - 1] for j in idx) for i in idx)
        probe = RootSystem(C, (("A", 1),) * len(idx))
        label = tuple(_classify([[C[i][j] for j in comp] for i in comp]) for comp in probe.components)
        return RootSystem(C, label)

    def split(self, mu: Sequence) -> list[tuple]:
        return [tuple(mu[i] for i in comp) for comp in self.components]

    def component_system(self, k: int) -> "RootSystem":
        return self.subsystem([i + 1 for i in self.components[k]])

    def format_weight(self, mu: Sequence) -> str:
        """``(4,12|16,10)``: components separated by ``|``."""
        if not self.rank:
            return "()"
        return "(" + "|".join(",".join(str(c) for c in part) for part in self.split(mu)) + ")"

    # -- Weyl group --------------------------------------------------------

    def weyl(self, word: Sequence[int] | str = ()) -> "WeylElement":
        return WeylElement.from_word(self, word)

    @cached_property
    def identity(self) -> "WeylElement":
        return WeylElement(self, tuple(self.rho))

    def elements_of_length(self, k: int) -> list["WeylElement"]:
        """All Weyl group elements of length ``k`` (sorted by canonical word)."""
        layer = {tuple(self.rho)}
        for _ in range(k):
            nxt = set()
            for v in layer:
                for i in range(self.rank):
                    if v[i] > 0:
                        nxt.add(self.reflect(v, i))
            layer = nxt
        return sorted((WeylElement(self, key) for key in layer), key=lambda w: w.word)


TRIVIAL = RootSystem((), ())


# ---------------------------------------------------------------------------
# Weyl group elements


_WORD_TOKEN = re.compile(r"s_?\{?(\d+)\}?")


def parse_word(text: str) -> tuple[int, ...]:
    """``"s3 s4 s2"``, ``"s3s4s2"`` or ``"e"`` -> ``(3, 4, 2)``."""
    t = text.strip()
    if t in ("", "e", "1", "id"):
        return ()
    stripped = _WORD_TOKEN.sub("", t).replace(" ", "").replace("*", "").replace("·", "")
    if stripped:
        raise RootSystemError(f"cannot parse Weyl word {text!r}")
    return tuple(int(m) for m in _WORD_TOKEN.findall(t))


class WeylElement:
    """A Weyl group element, identified by its image of rho.

    ``word`` is the canonical reduced word (greedy smallest left descent).
    """

    __slots__ = ("system", "key", "_word", "_hash")

    def __init__(self, system: RootSystem, key: tuple):
        self.system = system
        self.key = tuple(key)
        self._word = None
        self._hash = hash((system, self.key))

    @classmethod
    def from_word(cls, system: RootSystem, word: Sequence[int] | str) -> "WeylElement":
        if isinstance(word, str):
            word = parse_word(word)
        v = tuple(system.rho)
        for i in reversed(tuple(word)):
            if not 1 <= i <= system.rank:
                raise RootSystemError(f"simple reflection s{i} out of range for rank {system.rank}")
            v = system.reflect(v, i - 1)
        return cls(system, v)

    @property
    def word(self) -> tuple[int, ...]:
        if self._word is None:
            sys_, v, out = self.system, self.key, []
            n = sys_.rank
            while True:
                for i in range(n):
                    if v[i] < 0:
                        v = sys_.reflect(v, i)
                        out.append(i + 1)
                        break
                else:
                    break
            self._word = tuple(out)
        return self._word

    @property
    def length(self) -> int:
        return len(self.word)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.system == other.system and self.key == other.key

    def __hash__(self):
        return self._hash

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if other.system != self.system:
            raise RootSystemError("Weyl elements from different systems")
        return WeylElement(self.system, self.act_raw(other.key))

    def inverse(self) -> "WeylElement":
        return WeylElement.from_word(self.system, tuple(reversed(self.word)))

    def is_identity(self) -> bool:
        return self.key == tuple(self.system.rho)

    def act_raw(self, mu: tuple) -> tuple:
        sys_ = self.system
        for i in reversed(self.word):
            mu = sys_.reflect(mu, i - 1)
        return mu

    def act_root_raw(self, beta: tuple) -> tuple:
        sys_ = self.system
        for i in reversed(self.word):
            beta = sys_.reflect_root(beta, i - 1)
        return beta

    def __repr__(self):
        return "e" if not self.word else "".join(f"s{i}" for i in self.word)

    def __str__(self):
        return repr(self)


@dataclass(frozen=True)
class InversionSet:
    roots: frozenset

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(sorted(self.roots, key=lambda r: (sum(r), r)))

    def __contains__(self, beta):
        return tuple(beta) in self.roots

    def complement(self, system: RootSystem) -> "InversionSet":
        return InversionSet(frozenset(system.positive_roots) - self.roots)


def _check_same(w: WeylElement, mu: Sequence):
    if len(mu) != w.system.rank:
        raise RootSystemError(f"weight of length {len(mu)} does not match rank {w.system.rank}")


def act(w: WeylElement, mu: Sequence) -> Weight:
    """``w . mu`` in fundamental-weight coordinates."""
    _check_same(w, mu)
    return Weight(w.act_raw(tuple(_exact(c) for c in mu)))


def inversion_set(w: WeylElement) -> InversionSet:
    """Positive roots sent to negative roots by ``w``."""
    sys_ = w.system
    # beta in Phi_w  <=>  (w beta, rho) < 0  <=>  (beta, w^-1 rho) < 0
    winv_rho = w.inverse().key
    return InversionSet(
        frozenset(b for b in sys_.positive_roots if sys_.inner_weight_root(winv_rho, b) < 0)
    )


def length(w: WeylElement) -> int:
    return w.length


def longest_element(system: RootSystem) -> WeylElement:
    return WeylElement(system, tuple(-c for c in system.rho))


def to_root_basis(system: RootSystem, mu: Sequence) -> RootCoords:
    return system.to_root_basis(mu)


def from_root_basis(system: RootSystem, beta: Sequence) -> Weight:
    return system.from_root_basis(beta)


def affine_zero_action(w: WeylElement) -> Weight:
    """``w^{-1} . 0 = w^{-1} rho - rho = -(sum of the inversion set of w)``."""
    sys_ = w.system
    total = [0] * sys_.rank
    for b in inversion_set(w).roots:
        for i, c in enumerate(b):
            total[i] -= c
    return sys_.from_root_basis(total)


def positive_roots_on(system: RootSystem, I: Iterable[int]) -> frozenset:
    """``Delta_I^+``: positive roots supported on the 1-based index set ``I``."""
    allowed = {i - 1 for i in I}
    return frozenset(b for b in system.positive_roots if all(i in allowed for i, c in enumerate(b) if c))


def is_minimal_coset_rep(w: WeylElement, I: Iterable[int]) -> bool:
    """True iff ``w`` has minimal length in ``w W_I``."""
    return not (positive_roots_on(w.system, I) & inversion_set(w).roots)


def min_coset_rep(w: WeylElement, I: Iterable[int]) -> tuple[WeylElement, WeylElement]:
    """Split ``w = w_min * u`` with ``u`` in ``W_I`` and ``w_min`` minimal in ``w W_I``."""
    I = sorted(set(I))
    sys_ = w.system
    cur = w
    letters = []
    while True:
        inv_rho = cur.inverse().key
        for i in I:
            # alpha_i in Phi_cur  <=>  <cur^-1 rho, alpha_i^vee> < 0
            if inv_rho[i - 1] < 0:
                cur = cur * sys_.weyl((i,))
                letters.append(i)
                break
        else:
            break
    u = sys_.weyl(tuple(reversed(letters)))
    return cur, u
