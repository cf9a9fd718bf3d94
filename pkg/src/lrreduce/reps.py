"""Dimensions, weight multiplicities and tensor product multiplicities.

Weight multiplicities come from Freudenthal's recursion (integer arithmetic
only). Tensor products use the Brauer-Klimyk rule; multiplicities of a single
target in a k-fold product fold all but one factor and finish with the
alternating sum

    mult(V_target, V_nu (x) V_lam) = sum_w sign(w) m_lam(w(target + rho) - rho - nu).

``character_product_oracle`` is an independent check that never touches the
Freudenthal tables: it builds full characters from Kostant's partition
function and peels off highest weights.
"""
from __future__ import annotations

import math

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .rootsys import RootSystem, Weight

DEFAULT_ORACLE_CAP = 250_000


class ResourceLimitError(RuntimeError):
    """A computation was refused because it would exceed a configured size cap."""


def _dominant_integral(system: RootSystem, lam: Sequence, what: str = "weight") -> tuple:
    lam = tuple(lam)
    if len(lam) != system.rank:
        raise ValueError(f"{what} {lam} has length {len(lam)}, expected rank {system.rank}")
    for c in lam:
        if isinstance(c, bool) or not isinstance(c, int):
            if isinstance(c, Fraction) and c.denominator == 1:
                continue
            if hasattr(c, "__index__"):
                continue
            raise ValueError(f"{what} {lam} is not integral")
    lam = tuple(int(c) for c in lam)
    if any(c < 0 for c in lam):
        raise ValueError(f"{what} {lam} is not dominant")
    return lam


def weyl_dim(system: RootSystem, lam: Sequence) -> int:
    """Weyl's dimension formula."""
    lam = _dominant_integral(system, lam)
    num = den = 1
    for cor in system.positive_coroots:
        num *= sum(b * (l + 1) for b, l in zip(cor, lam))
        den *= sum(cor)
    q, r = divmod(num, den)
    assert r == 0
    return q


@dataclass(frozen=True)
class Character:
    """A representation as a map from dominant highest weights to multiplicities."""

    entries: Mapping[tuple, int]

    def __post_init__(self):
        clean = {Weight(k): int(v) for k, v in self.entries.items() if v}
        if any(v < 0 for v in clean.values()):
            raise ValueError("negative multiplicity in character")
        object.__setattr__(self, "entries", clean)

    def __getitem__(self, key) -> int:
        return self.entries.get(tuple(key), 0)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(sorted(self.entries))

    def items(self):
        return sorted(self.entries.items())

    def __eq__(self, other):
        if isinstance(other, Character):
            return self.entries == other.entries
        if isinstance(other, Mapping):
            return self.entries == {tuple(k): v for k, v in other.items() if v}
        return NotImplemented

    def total_dimension(self, system: RootSystem) -> int:
        return sum(m * weyl_dim(system, k) for k, m in self.entries.items())


# ---------------------------------------------------------------------------
# Freudenthal tables


class WeightMultTable:
    """Weight multiplicities of ``V_highest``, built on first query."""

    def __init__(self, system: RootSystem, highest: Sequence):
        self.system = system
        self.highest = _dominant_integral(system, highest, "highest weight")
        self._dominant: dict[tuple, int] | None = None
        self._conj: dict[tuple, tuple] = {}
        self._lock = threading.Lock()

    def _build(self):
        sys_ = self.system
        lam = self.highest
        n = sys_.rank
        d = sys_.symmetrizer
        # weights are packed into one int: field j holds x_j + off
        bound = 4 * (sum(lam) + 2) * max(max(abs(c) for row in sys_.cartan for c in row), 1)
        sh = bound.bit_length() + 2
        off = 1 << (sh - 1)
        mask = (1 << sh) - 1
        base = sum(off << (sh * j) for j in range(n))

        def enc(x):
            return base + sum(x[j] << (sh * j) for j in range(n))

        roots = []
        for a, aw in zip(sys_.positive_roots, sys_.positive_roots_weight):
            ad = tuple((j, a[j] * d[j]) for j in range(n) if a[j])
            acode = sum(aw[j] << (sh * j) for j in range(n))
            aa = sys_.inner_weight_root(aw, a)
            roots.append((ad, aw, a, acode, aa))
        # dominant weights below lam, with their depth lam - beta in root coords
        depth = {lam: (0,) * n}
        order = [lam]
        k = 0
        while k < len(order):
            beta = order[k]
            k += 1
            g = depth[beta]
            for _, aw, a, _, _ in roots:
                x = tuple(b - c for b, c in zip(beta, aw))
                if min(x) >= 0 and x not in depth:
                    depth[x] = tuple(p + q for p, q in zip(g, a))
                    order.append(x)
        order.sort(key=lambda b: sum(depth[b]))
        table: dict[tuple, int] = {}
        mc: dict[int, int] = {}
        mc_get = mc.get
        rows = [[(j, sys_.cartan[i][j]) for j in range(n) if sys_.cartan[i][j]] for i in range(n)]
        shifts = [sh * j for j in range(n)]

        def slow(c):
            v = [((c >> s) & mask) - off for s in shifts]
            i = 0
            while i < n:
                a = v[i]
                if a < 0:
                    for j, cij in rows[i]:
                        v[j] -= a * cij
                    i = 0
                else:
                    i += 1
            m = table.get(tuple(v), 0)
            mc[c] = m
            return m

        lam2 = [l + 2 for l in lam]
        for beta in order:
            bc = enc(beta)
            if beta == lam:
                table[beta] = 1
                mc[bc] = 1
                continue
            num = 0
            for ad, _, _, acode, aa in roots:
                ip = sum(c * beta[j] for j, c in ad) + aa
                c = bc + acode
                while True:
                    m = mc_get(c)
                    if m is None:
                        m = slow(c)
                    if not m:
                        break
                    num += m * ip
                    c += acode
                    ip += aa
            g = depth[beta]
            den = sum(g[j] * d[j] * (lam2[j] + beta[j]) for j in range(n) if g[j])
            q, r = divmod(2 * num, den)
            assert r == 0, "Freudenthal recursion produced a non-integer"
            mc[bc] = q
            if q:
                table[beta] = q
        return table

    @property
    def dominant(self) -> dict[tuple, int]:
        if self._dominant is None:
            with self._lock:
                if self._dominant is None:
                    self._dominant = self._build()
        return self._dominant

    def __call__(self, beta: Sequence) -> int:
        beta = tuple(beta)
        dom = self.dominant
        y = self._conj.get(beta)
        if y is None:
            y = self.system.dominant_conjugate(beta)[0]
            self._conj[beta] = y
        return dom.get(y, 0)

    def dominant_items(self) -> list[tuple[tuple, int]]:
        return sorted(self.dominant.items())

    def weights(self) -> Iterable[tuple[tuple, int]]:
        """Every weight of the representation with its multiplicity."""
        for beta, m in self.dominant.items():
            for v in self.system.orbit(beta):
                yield v, m

    @property
    def dimension(self) -> int:
        return sum(m * len(self.system.orbit(b)) for b, m in self.dominant.items())

    def n_weights(self) -> int:
        return sum(len(self.system.orbit(b)) for b in self.dominant)


@lru_cache(maxsize=256)
def weight_table(system: RootSystem, lam: tuple) -> WeightMultTable:
    return WeightMultTable(system, lam)


def weight_multiplicity(system: RootSystem, lam: Sequence, beta: Sequence) -> int:
    """Multiplicity of the weight ``beta`` in ``V_lam``."""
    lam = _dominant_integral(system, lam)
    beta = tuple(beta)
    if len(beta) != system.rank:
        raise ValueError("dimension mismatch")
    if any(not isinstance(c, int) for c in beta):
        if any(Fraction(c).denominator != 1 for c in beta):
            return 0
        beta = tuple(int(c) for c in beta)
    if system.root_coords_int([a - b for a, b in zip(lam, beta)]) is None:
        return 0
    return weight_table(system, lam)(beta)


# ---------------------------------------------------------------------------
# tensor products


def _klimyk(system: RootSystem, nu: tuple, table: WeightMultTable, out: dict, coeff: int = 1, keep=None):
    """Accumulate ``coeff * (V_nu (x) V_table)`` into ``out``."""
    n = system.rank
    rows = [[(j, c) for j, c in enumerate(system.cartan[i]) if c] for i in range(n)]
    nu1 = [c + 1 for c in nu]
    for beta, m in table.weights():
        v = [a + b for a, b in zip(nu1, beta)]
        sign = 1
        i = 0
        wall = False
        while i < n:
            a = v[i]
            if a < 0:
                for j, cij in rows[i]:
                    v[j] -= a * cij
                sign = -sign
                i = 0
            elif a == 0:
                wall = True
                break
            else:
                i += 1
        if wall:  # fixed by a reflection: contributes nothing
            continue
        key = tuple(c - 1 for c in v)
        if keep is not None and not keep(key):
            continue
        out[key] = out.get(key, 0) + sign * m * coeff


def _components(system: RootSystem, weights: Sequence[Sequence]):
    comps = system.components
    if len(comps) <= 1:
        return [(system, [tuple(w) for w in weights])]
    out = []
    for k, comp in enumerate(comps):
        sub = system.component_system(k)
        out.append((sub, [tuple(w[i] for i in comp) for w in weights]))
    return out


def _combine(system: RootSystem, parts: list[dict]) -> dict:
    comps = system.components if len(parts) > 1 else [tuple(range(system.rank))]
    acc = {(): 1}
    for part in parts:
        acc = {a + b: m * p for a, m in acc.items() for b, p in part.items()}
    perm = [i for comp in comps for i in comp]
    out = {}
    for key, m in acc.items():
        full = [0] * system.rank
        for pos, i in enumerate(perm):
            full[i] = key[pos]
        out[tuple(full)] = m
    return out


def tensor_decompose(system: RootSystem, lam: Sequence, mu: Sequence) -> Character:
    """Decompose ``V_lam (x) V_mu`` into irreducibles."""
    lam = _dominant_integral(system, lam)
    mu = _dominant_integral(system, mu)
    parts = []
    for sub, (l, m) in _components(system, [lam, mu]):
        parts.append(_tensor_simple(sub, l, m))
    return Character(_combine(system, parts))


def _tensor_simple(system: RootSystem, lam: tuple, mu: tuple) -> dict:
    if weyl_dim(system, mu) > weyl_dim(system, lam):
        lam, mu = mu, lam
    out: dict = {}
    _klimyk(system, lam, weight_table(system, mu), out)
    res = {k: v for k, v in out.items() if v}
    if any(v < 0 for v in res.values()):
        raise ArithmeticError("negative multiplicity from Klimyk rule")
    return res


def _reachable(system: RootSystem, gap: Sequence, bound: Sequence) -> bool:
    """Is ``gap`` a weight of ``V_bound``? (dominant conjugate below ``bound``)."""
    dom = system.dominant_conjugate(tuple(gap))[0]
    r = system.root_coords_int([b - d for b, d in zip(bound, dom)])
    return r is not None and min(r) >= 0


def multi_tensor_multiplicity(system: RootSystem, factors: Sequence[Sequence], target: Sequence) -> int:
    """Multiplicity of ``V_target`` in ``V_f1 (x) ... (x) V_fk``."""
    if not factors:
        raise ValueError("need at least one factor")
    factors = [_dominant_integral(system, f, "factor") for f in factors]
    target = _dominant_integral(system, target, "target")
    total = 1
    for sub, ws in _components(system, factors + [target]):
        total *= _multi_simple(sub, ws[:-1], ws[-1])
        if not total:
            return 0
    return total


def _multi_simple(system: RootSystem, factors: list[tuple], target: tuple) -> int:
    n = system.rank
    if n == 0:
        return 1
    if len(factors) == 1:
        return int(factors[0] == target)
    # coset obstruction: sum of factors - target must lie in the root lattice
    gap = [sum(f[i] for f in factors) - target[i] for i in range(n)]
    r = system.root_coords_int(gap)
    if r is None or min(r) < 0:
        return 0
    # start from the largest factor (no table needed), reserve the next largest
    # for the closing alternating sum, Klimyk-fold the rest (largest first)
    order = sorted(factors, key=lambda f: (weyl_dim(system, f), f))
    last = order[-2]
    rest = [order[-1]] + order[:-2][::-1]
    acc = {rest[0]: 1}
    for idx in range(1, len(rest)):
        remaining = [sum(f[i] for f in rest[idx + 1:]) + last[i] for i in range(n)]
        memo: dict = {}

        def keep(nu, remaining=remaining, memo=memo):
            hit = memo.get(nu)
            if hit is None:
                hit = memo[nu] = _reachable(system, [t - v for t, v in zip(target, nu)], remaining)
            return hit

        nxt: dict = {}
        table = weight_table(system, rest[idx])
        for nu, c in acc.items():
            _klimyk(system, nu, table, nxt, c, keep)
        acc = {k: v for k, v in nxt.items() if v}
    # finish with the alternating sum against the reserved factor
    table = weight_table(system, last)
    shifted = tuple(t + 1 for t in target)
    orbit = [(tuple(c - 1 for c in x), s) for x, s in system.signed_orbit(shifted)]
    total = 0
    for nu, c in acc.items():
        if not _reachable(system, [t - v for t, v in zip(target, nu)], last):
            continue
        part = 0
        for x, s in orbit:
            part += s * table(tuple(a - b for a, b in zip(x, nu)))
        total += c * part
    if total < 0:
        raise ArithmeticError("negative tensor product multiplicity")
    return total


# ---------------------------------------------------------------------------
# independent oracle


_PARTITION_COUNTERS: dict = {}


def _partition_counter(system: RootSystem):
    if system.cartan in _PARTITION_COUNTERS:
        return _PARTITION_COUNTERS[system.cartan]
    roots = [tuple(r) for r in system.positive_roots]

    @lru_cache(maxsize=None)
    def count(gamma: tuple, k: int) -> int:
        if k == len(roots):
            return int(not any(gamma))
        a = roots[k]
        total = 0
        g = gamma
        while min(g) >= 0:
            total += count(g, k + 1)
            g = tuple(x - y for x, y in zip(g, a))
        return total

    fn = _PARTITION_COUNTERS[system.cartan] = lambda gamma: count(tuple(gamma), 0) if min(gamma) >= 0 else 0
    return fn


def kostant_character(system: RootSystem, lam: Sequence, partition=None) -> dict[tuple, int]:
    """Full formal character of ``V_lam`` via Kostant's multiplicity formula."""
    lam = _dominant_integral(system, lam)
    P = partition or _partition_counter(system)
    n = system.rank
    orbit = system.signed_orbit(tuple(l + 1 for l in lam))
    # orbit points in root coordinates relative to lam + rho
    rel = []
    for x, s in orbit:
        diff = system.root_coords_int([a - (l + 1) for a, l in zip(x, lam)])
        rel.append((diff, s))

    def mult(depth):
        # depth = lam - mu in root coordinates
        return sum(s * P(tuple(dx + g for dx, g in zip(diff, depth))) for diff, s in rel)

    simple = [tuple(system.cartan[i]) for i in range(n)]
    char = {lam: 1}
    frontier = [(lam, (0,) * n)]
    seen = {lam}
    while frontier:
        nxt = []
        for mu, depth in frontier:
            for i in range(n):
                x = tuple(a - b for a, b in zip(mu, simple[i]))
                if x in seen:
                    continue
                seen.add(x)
                dep = tuple(g + (j == i) for j, g in enumerate(depth))
                m = mult(dep)
                if m:
                    char[x] = m
                    nxt.append((x, dep))
        frontier = nxt
    return char


def character_product_oracle(
    system: RootSystem, lam: Sequence, mu: Sequence, cap: int = DEFAULT_ORACLE_CAP
) -> Character:
    """Brute-force ``V_lam (x) V_mu``: multiply formal characters, peel highest weights."""
    lam = _dominant_integral(system, lam)
    mu = _dominant_integral(system, mu)
    size = weyl_dim(system, lam) * weyl_dim(system, mu)
    if size > cap:
        raise ResourceLimitError(f"product dimension {size} exceeds oracle cap {cap}")
    P = _partition_counter(system)
    a = kostant_character(system, lam, P)
    b = kostant_character(system, mu, P)
    prod: dict[tuple, int] = {}
    for x, m in a.items():
        for y, p in b.items():
            z = tuple(i + j for i, j in zip(x, y))
            prod[z] = prod.get(z, 0) + m * p
    # height = sum of root coordinates, scaled to an integer linear form
    M = system.inverse_cartan_transpose
    n = system.rank
    col = [sum(M[i][j] for i in range(n)) for j in range(n)]
    den = 1
    for c in col:
        den = den * c.denominator // math.gcd(den, c.denominator)
    hw = [int(c * den) for c in col]

    def height(x):
        return sum(h * v for h, v in zip(hw, x))

    out: dict[tuple, int] = {}
    chars: dict[tuple, dict] = {}
    while prod:
        top = max(prod, key=height)
        m = prod[top]
        if m < 0 or min(top) < 0:
            raise ArithmeticError(f"peeling failed at {top} with multiplicity {m}")
        out[top] = m
        ch = chars.get(top) or kostant_character(system, top, P)
        for x, k in ch.items():
            v = prod.get(x, 0) - m * k
            if v:
                prod[x] = v
            else:
                prod.pop(x, None)
    return Character(out)
