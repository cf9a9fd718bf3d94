"""Face data, weight restriction to the Levi, and reduction rules.

A face datum is ``(I, w_1..w_k, w)``. A problem ``(mu_1..mu_k; mu)`` lies on its face when

    gamma = sum_i w_i^{-1} mu_i - w^{-1} mu

has zero root coordinates outside ``I``. The reduced problem keeps the ``I``
coordinates of each ``w_i^{-1} mu_i`` (resp. ``w^{-1} mu``), read on the Levi
subsystem spanned by ``I``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from . import schubert
from .reps import ResourceLimitError, _dominant_integral, multi_tensor_multiplicity
from .rootsys import (
    RootCoords,
    RootSystem,
    Weight,
    WeylElement,
    _invert,
    act,
    affine_zero_action,
    is_minimal_coset_rep,
    min_coset_rep,
)


class FaceError(ValueError):
    """A face datum or problem violates a precondition."""


class NotOnFaceError(FaceError):
    def __init__(self, msg: str, offending: dict):
        super().__init__(msg)
        self.offending = offending


# ---------------------------------------------------------------------------
# data types


def _norm_I(system: RootSystem, I: Iterable[int]) -> frozenset:
    I = frozenset(int(i) for i in I)
    bad = [i for i in I if not 1 <= i <= system.rank]
    if bad:
        raise FaceError(f"indices {sorted(bad)} outside 1..{system.rank}")
    return I


@dataclass(frozen=True)
class FaceDatum:
    system: RootSystem
    I: frozenset
    ws: tuple
    w: WeylElement
    verified: bool = False

    def __post_init__(self):
        object.__setattr__(self, "I", _norm_I(self.system, self.I))
        object.__setattr__(self, "ws", tuple(self.ws))
        for x in self.ws + (self.w,):
            if x.system != self.system:
                raise FaceError("Weyl element from a different root system")

    @classmethod
    def from_words(cls, system: RootSystem, I: Iterable[int], words: Sequence, w) -> "FaceDatum":
        return cls(system, frozenset(I), tuple(system.weyl(x) for x in words), system.weyl(w))

    @property
    def k(self) -> int:
        return len(self.ws)

    @property
    def complement(self) -> list[int]:
        return [i for i in range(1, self.system.rank + 1) if i not in self.I]

    @property
    def levi(self) -> RootSystem:
        return self.system.subsystem(self.I)

    def verify(self, max_weyl_size: int | None = None) -> "FaceDatum":
        """Return a copy tagged verified if all three conditions hold."""
        rep = check_face_conditions(self, max_weyl_size)
        if not rep.all_hold:
            raise FaceError(f"face conditions fail: {rep.as_dict()}")
        return FaceDatum(self.system, self.I, self.ws, self.w, True)

    def as_dict(self) -> dict:
        return {
            "I": sorted(self.I),
            "ws": [str(x) for x in self.ws],
            "w": str(self.w),
            "levi": self.levi.name,
        }

    def __str__(self):
        return f"I={sorted(self.I)} ws=[{', '.join(map(str, self.ws))}] w={self.w}"


@dataclass(frozen=True)
class MultiplicityProblem:
    system: RootSystem
    factors: tuple
    target: tuple

    def __post_init__(self):
        fs = tuple(Weight(_dominant_integral(self.system, f, "factor")) for f in self.factors)
        if not fs:
            raise FaceError("a problem needs at least one factor")
        object.__setattr__(self, "factors", fs)
        object.__setattr__(self, "target", Weight(_dominant_integral(self.system, self.target, "target")))

    def multiplicity(self) -> int:
        return multi_tensor_multiplicity(self.system, self.factors, self.target)


@dataclass(frozen=True)
class ReducedProblem:
    levi_system: RootSystem
    factors: tuple
    target: tuple
    provenance: FaceDatum | None = None

    def as_problem(self) -> MultiplicityProblem:
        return MultiplicityProblem(self.levi_system, self.factors, self.target)

    def multiplicity(self) -> int:
        return multi_tensor_multiplicity(self.levi_system, self.factors, self.target)

    def formatted(self) -> dict:
        f = self.levi_system.format_weight
        return {"factors": [f(x) for x in self.factors], "target": f(self.target)}

    def same_weights(self, other: "ReducedProblem") -> bool:
        return (
            self.levi_system.cartan == other.levi_system.cartan
            and tuple(map(tuple, self.factors)) == tuple(map(tuple, other.factors))
            and tuple(self.target) == tuple(other.target)
        )


@dataclass
class FaceReport:
    cond_i: bool
    cond_i_detail: list
    cond_ii_length: bool
    cond_ii_intersection: bool | None
    intersection: int | None
    intersection_route: str
    cond_iii: bool
    witness: RootCoords
    notes: list = field(default_factory=list)

    @property
    def all_hold(self) -> bool:
        return bool(self.cond_i and self.cond_ii_length and self.cond_ii_intersection and self.cond_iii)

    @property
    def theorem_applies(self) -> bool:
        return bool(self.cond_i and self.cond_ii_length and self.cond_ii_intersection)

    def as_dict(self) -> dict:
        return {
            "cond_i": self.cond_i,
            "cond_i_detail": self.cond_i_detail,
            "cond_ii_length": self.cond_ii_length,
            "cond_ii_intersection": self.cond_ii_intersection,
            "intersection": self.intersection,
            "intersection_route": self.intersection_route,
            "cond_iii": self.cond_iii,
            "cond_iii_witness": [str(c) for c in self.witness],
            "notes": list(self.notes),
        }


# ---------------------------------------------------------------------------
# conditions


def in_span_I(system: RootSystem, gamma: Sequence, I: Iterable[int]) -> tuple[bool, RootCoords]:
    """Do the root coordinates of ``gamma`` vanish outside ``I``?"""
    I = _norm_I(system, I)
    r = system.to_root_basis(gamma)
    return all(c == 0 for j, c in enumerate(r) if j + 1 not in I), r


def face_gamma(fd: FaceDatum, prob: MultiplicityProblem) -> Weight:
    """``sum_i w_i^{-1} mu_i - w^{-1} mu`` in fundamental-weight coordinates."""
    _same_system(fd, prob)
    if len(prob.factors) != fd.k:
        raise FaceError(f"face datum has {fd.k} factors, problem has {len(prob.factors)}")
    g = -act(fd.w.inverse(), prob.target)
    for x, mu in zip(fd.ws, prob.factors):
        g = g + act(x.inverse(), mu)
    return g


def _same_system(fd: FaceDatum, prob):
    sys_ = getattr(prob, "system", None) or getattr(prob, "levi_system")
    if sys_.cartan != fd.system.cartan:
        raise FaceError(f"face datum on {fd.system.name} but problem on {sys_.name}")


def on_face(fd: FaceDatum, prob: MultiplicityProblem) -> bool:
    return in_span_I(fd.system, face_gamma(fd, prob), fd.I)[0]


def check_face_conditions(fd: FaceDatum, max_weyl_size: int | None = None) -> FaceReport:
    """Evaluate conditions (i), (ii), (iii); never raises on a failed condition."""
    sys_ = fd.system
    notes = []
    detail = [is_minimal_coset_rep(x, fd.I) for x in fd.ws + (fd.w,)]
    len_ok = sum(x.length for x in fd.ws) == fd.w.length
    inter: int | None
    if not len_ok:
        inter, route = 0, "degree-mismatch"
        notes.append(f"sum of lengths {sum(x.length for x in fd.ws)} != l(w) = {fd.w.length}")
    elif schubert.disjoint_inversion_check(fd.ws, fd.w):
        inter, route = 1, "disjoint-inversions"
    else:
        try:
            inter, route = schubert.intersection_number(sys_, fd.ws, fd.w, max_weyl_size), "chevalley"
        except ResourceLimitError as e:
            inter, route = None, "resource-cap"
            notes.append(str(e))
    # (iii): sum_i w_i^{-1}.0 - w^{-1}.0 in Span_{Z>=0} I
    g = -affine_zero_action(fd.w)
    for x in fd.ws:
        g = g + affine_zero_action(x)
    ok, r = in_span_I(sys_, g, fd.I)
    iii = ok and all(c >= 0 and Fraction(c).denominator == 1 for c in r)
    return FaceReport(
        cond_i=all(detail),
        cond_i_detail=detail,
        cond_ii_length=len_ok,
        cond_ii_intersection=None if inter is None else inter == 1,
        intersection=inter,
        intersection_route=route,
        cond_iii=iii,
        witness=r,
        notes=notes,
    )


def face_codimension(fd: FaceDatum) -> int:
    return fd.system.rank - len(fd.I)


# ---------------------------------------------------------------------------
# restriction


def _a_part(system: RootSystem, x: Sequence, I: Sequence[int]) -> tuple:
    """Component of ``x`` orthogonal to ``Span I`` (fundamental-weight coordinates)."""
    idx = [i - 1 for i in I]
    if not idx:
        return tuple(Fraction(c) for c in x)
    d = system.symmetrizer
    C = system.cartan
    G = [[C[i][j] * d[j] for j in idx] for i in idx]
    rhs = [Fraction(x[i] * d[i]) for i in idx]
    Ginv = _invert(G)
    c = [sum(Ginv[a][b] * rhs[b] for b in range(len(idx))) for a in range(len(idx))]
    out = [Fraction(v) for v in x]
    for cj, j in zip(c, idx):
        for t in range(system.rank):
            out[t] -= cj * C[j][t]
    return tuple(out)


def restrict_problem(fd: FaceDatum, prob: MultiplicityProblem, check: bool = True) -> ReducedProblem:
    """Restrict ``prob`` to the Levi of ``fd.I``."""
    sys_ = fd.system
    gamma = face_gamma(fd, prob)
    ok, r = in_span_I(sys_, gamma, fd.I)
    if not ok:
        off = {f"alpha_{j + 1}": str(c) for j, c in enumerate(r) if j + 1 not in fd.I and c}
        raise NotOnFaceError(f"problem is not on the face: nonzero root coordinates {off}", off)
    if check:
        bad = [str(x) for x in fd.ws + (fd.w,) if not is_minimal_coset_rep(x, fd.I)]
        if bad:
            raise FaceError(f"condition (i) fails for {bad}")
    I = sorted(fd.I)
    moved = [act(x.inverse(), mu) for x, mu in zip(fd.ws, prob.factors)]
    moved_t = act(fd.w.inverse(), prob.target)
    # the a-parts cancel on the face
    a_sum = [Fraction(0)] * sys_.rank
    for m in moved:
        a_sum = [s + v for s, v in zip(a_sum, _a_part(sys_, m, I))]
    a_sum = [s - v for s, v in zip(a_sum, _a_part(sys_, moved_t, I))]
    assert not any(a_sum), "a-parts do not cancel on the face"

    def cut(x):
        return tuple(int(x[i - 1]) for i in I)

    factors = tuple(cut(m) for m in moved)
    target = cut(moved_t)
    for v in factors + (target,):
        if min(v, default=0) < 0:
            raise FaceError(f"restricted weight {v} is not dominant")
    return ReducedProblem(fd.levi, factors, target, fd)


# ---------------------------------------------------------------------------
# the reduction theorem as a check


@dataclass
class ReductionReport:
    mult_big: int
    mult_small: int
    equal: bool
    reduced: ReducedProblem
    face: FaceReport


def _preconditions(fd: FaceDatum, prob: MultiplicityProblem, max_weyl_size, need_exact: bool) -> FaceReport:
    rep = check_face_conditions(fd, max_weyl_size)
    if not rep.cond_i:
        raise FaceError(f"condition (i) fails: {rep.cond_i_detail}")
    if need_exact:
        if rep.intersection is None:
            raise ResourceLimitError("; ".join(rep.notes))
        if not (rep.cond_ii_length and rep.cond_ii_intersection):
            raise FaceError(f"condition (ii) fails: intersection number {rep.intersection}")
    if not on_face(fd, prob):
        restrict_problem(fd, prob)  # raises with the offending coordinates
    return rep


def verify_reduction(fd: FaceDatum, prob: MultiplicityProblem, max_weyl_size: int | None = None) -> ReductionReport:
    """Compute both sides of the reduction independently."""
    rep = _preconditions(fd, prob, max_weyl_size, True)
    red = restrict_problem(fd, prob)
    big = prob.multiplicity()
    small = red.multiplicity()
    return ReductionReport(big, small, big == small, red, rep)


@dataclass
class BoundReport:
    mult_big: int
    mult_small: int
    intersection: int
    bound_holds: bool
    reduced: ReducedProblem


def reduce_or_bound(fd: FaceDatum, prob: MultiplicityProblem, max_weyl_size: int | None = None) -> BoundReport:
    """``mult_G <= mult_Levi`` whenever the intersection number is nonzero."""
    rep = _preconditions(fd, prob, max_weyl_size, False)
    if rep.intersection is None:
        raise ResourceLimitError("; ".join(rep.notes))
    if rep.intersection == 0:
        raise FaceError("intersection number is 0: " + ("; ".join(rep.notes) or "empty product"))
    red = restrict_problem(fd, prob)
    big = prob.multiplicity()
    small = red.multiplicity()
    return BoundReport(big, small, rep.intersection, big <= small, red)


# ---------------------------------------------------------------------------
# rules from inversion-set partitions, and factoring


def generate_rules(
    system: RootSystem, ws: Sequence[WeylElement], w: WeylElement, subsets: Iterable[Iterable[int]] | None = None
) -> list[FaceDatum]:
    """One face datum per subset ``I`` (minimal coset representatives of the inputs)."""
    ws = tuple(ws)
    if not schubert.disjoint_inversion_check(ws, w):
        raise FaceError("inversion sets of ws do not partition the inversion set of w")
    if subsets is None:
        nodes = range(1, system.rank + 1)
        subsets = [c for r in range(system.rank + 1) for c in combinations(nodes, r)]
    out = []
    for I in subsets:
        I = frozenset(I)
        reps = tuple(min_coset_rep(x, I)[0] for x in ws)
        out.append(FaceDatum(system, I, reps, min_coset_rep(w, I)[0]))
    return out


def factor_rule(fd: FaceDatum, j: int) -> tuple[FaceDatum, FaceDatum]:
    """Split ``fd`` into a codimension-one datum cutting node ``j`` and a residual datum.

    ``j`` must be one of the nodes outside ``I``. The codimension-one datum uses
    ``I' = all nodes except j`` and the minimal representatives of ``w_i W_{I'}``;
    the residual datum lives on the Levi of ``I'`` (nodes renumbered in ambient
    order) and carries the ``W_{I'}`` parts ``u_i``, with ``I`` as its index set.
    """
    sys_ = fd.system
    if j in fd.I or not 1 <= j <= sys_.rank:
        raise FaceError(f"node {j} must be one of the cut nodes {fd.complement}")
    Ip = [i for i in range(1, sys_.rank + 1) if i != j]
    pos = {node: p + 1 for p, node in enumerate(Ip)}
    levi = sys_.subsystem(Ip)
    parts = [min_coset_rep(x, Ip) for x in fd.ws + (fd.w,)]
    top = FaceDatum(sys_, frozenset(Ip), tuple(p[0] for p in parts[:-1]), parts[-1][0])
    us = [levi.weyl(tuple(pos[i] for i in p[1].word)) for p in parts]
    rest = FaceDatum(levi, frozenset(pos[i] for i in fd.I), tuple(us[:-1]), us[-1])
    return top, rest


def factor_chain(fd: FaceDatum, order: Sequence[int] | None = None) -> list[FaceDatum]:
    """Factor ``fd`` completely into codimension-one data (cut nodes in ``order``)."""
    chain = []
    cur = fd
    nodes = list(order) if order is not None else list(fd.complement)
    if sorted(nodes) != fd.complement:
        raise FaceError(f"order must be a permutation of the cut nodes {fd.complement}")
    while nodes:
        j = nodes.pop(0)
        top, cur = factor_rule(cur, j)
        chain.append(top)
        # renumber the remaining cut nodes in the smaller Levi
        nodes = [n - (n > j) for n in nodes]
    return chain


def apply_chain(chain: Sequence[FaceDatum], prob: MultiplicityProblem) -> ReducedProblem:
    red = None
    for fd in chain:
        red = restrict_problem(fd, prob)
        prob = red.as_problem()
    if red is None:
        raise FaceError("empty chain")
    return red


# ---------------------------------------------------------------------------
# random on-face instances


def _action_matrix(x: WeylElement) -> list[list[int]]:
    """Matrix of ``mu -> x^{-1} mu`` in fundamental-weight coordinates (columns = images of omega_j)."""
    n = x.system.rank
    xi = x.inverse()
    cols = [xi.act_raw(tuple(int(i == j) for i in range(n))) for j in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


class FaceSampler:
    """Integral points on the face of ``fd`` inside a dominance box.

    The face equations (root coordinates of gamma outside ``I`` vanish) are put
    in reduced echelon form with pivots taken preferentially among the target
    coordinates; free coordinates are drawn uniformly from ``[lo, hi]`` and
    pivots solved for, rejecting non-integral or non-dominant solutions.
    """

    def __init__(self, fd: FaceDatum, lo: int = 1, hi: int = 4):
        self.fd = fd
        self.lo, self.hi = lo, hi
        sys_ = fd.system
        n, k = sys_.rank, fd.k
        M = sys_.inverse_cartan_transpose
        blocks = [_action_matrix(x) for x in fd.ws] + [[[-v for v in row] for row in _action_matrix(fd.w)]]
        rows = []
        for jj in fd.complement:
            j = jj - 1
            row = []
            for B in blocks:
                row += [sum(M[j][t] * B[t][c] for t in range(n)) for c in range(n)]
            rows.append(row)
        nv = (k + 1) * n
        # target columns first
        order = list(range(k * n, nv)) + list(range(k * n))
        R = [list(r) for r in rows]
        pivots = []
        r0 = 0
        for col in order:
            p = next((r for r in range(r0, len(R)) if R[r][col]), None)
            if p is None:
                continue
            R[r0], R[p] = R[p], R[r0]
            piv = R[r0][col]
            R[r0] = [Fraction(v) / piv for v in R[r0]]
            for r in range(len(R)):
                if r != r0 and R[r][col]:
                    f = R[r][col]
                    R[r] = [a - f * b for a, b in zip(R[r], R[r0])]
            pivots.append(col)
            r0 += 1
            if r0 == len(R):
                break
        self.rows = R[:r0]
        self.pivots = pivots
        self.free = [c for c in range(nv) if c not in pivots]
        self.n, self.k = n, k

    def sample(self, rng: random.Random, strict: bool = True, max_tries: int = 10_000) -> MultiplicityProblem:
        lo = max(self.lo, 1 if strict else 0)
        floor = 1 if strict else 0
        for _ in range(max_tries):
            x = [0] * ((self.k + 1) * self.n)
            for c in self.free:
                x[c] = rng.randint(lo, self.hi)
            good = True
            for row, p in zip(self.rows, self.pivots):
                v = -sum(row[c] * x[c] for c in self.free)
                if v.denominator != 1 or v < floor:
                    good = False
                    break
                x[p] = int(v)
            if not good:
                continue
            n = self.n
            ws = [tuple(x[i * n:(i + 1) * n]) for i in range(self.k + 1)]
            prob = MultiplicityProblem(self.fd.system, tuple(ws[:-1]), ws[-1])
            assert on_face(self.fd, prob)
            return prob
        raise FaceError("no on-face sample found in the box; widen [lo, hi]")


class SemigroupSampler:
    """On-face problems with nonzero multiplicity.

    Tuples with positive multiplicity form a semigroup and the face equations
    are linear, so sums of small positive on-face tuples stay on the face with
    positive multiplicity. The generator pool comes from the box sampler run
    non-strictly, widening the box until every coordinate is covered.
    """

    def __init__(self, fd: FaceDatum, pool_hi: int = 2, pool_draws: int = 3000, seed: int = 0, max_hi: int = 6, min_pool: int = 12):
        self.fd = fd
        rng = random.Random(seed)
        seen: set = set()
        pool: list = []
        for hi in range(pool_hi, max(pool_hi, max_hi) + 1):
            box = FaceSampler(fd, 0, hi)
            for _ in range(pool_draws):
                try:
                    p = box.sample(rng, strict=False)
                except FaceError:
                    break
                key = self._flat(p)
                if key in seen or not any(key):
                    continue
                seen.add(key)
                if p.multiplicity() > 0:
                    pool.append(p)
                    if len(pool) >= min_pool and self._covers(pool):
                        break
            if len(pool) >= min_pool and self._covers(pool):
                break
        self.pool = pool
        if not pool:
            raise FaceError("no positive on-face generators found; raise max_hi")

    @classmethod
    def _covers(cls, pool):
        flats = [cls._flat(p) for p in pool]
        return all(any(col) for col in zip(*flats))

    @staticmethod
    def _flat(p):
        return tuple(v for f in p.factors for v in f) + tuple(p.target)

    def sample(self, rng: random.Random, strict: bool = True, max_terms: int = 3) -> MultiplicityProblem:
        # strict: greedy cover of the zero coordinates; otherwise a few random summands
        fd = self.fd
        n, k = fd.system.rank, fd.k
        tot = [0] * (n * (k + 1))
        if strict:
            for p in rng.sample(self.pool, len(self.pool)):
                v = self._flat(p)
                if any(t == 0 and x for t, x in zip(tot, v)):
                    tot = [a + b for a, b in zip(tot, v)]
                if min(tot) > 0:
                    break
            else:
                raise FaceError("generator pool does not cover a strictly dominant point; raise max_hi")
        else:
            for _ in range(rng.randint(1, max_terms)):
                tot = [a + b for a, b in zip(tot, self._flat(rng.choice(self.pool)))]
        facs = tuple(tuple(tot[i * n:(i + 1) * n]) for i in range(k))
        prob = MultiplicityProblem(fd.system, facs, tuple(tot[k * n:]))
        assert on_face(fd, prob)
        return prob


def random_on_face(
    fd: FaceDatum,
    count: int,
    seed: int = 0,
    lo: int = 1,
    hi: int = 4,
    strict: bool = True,
    method: str = "box",
) -> list[MultiplicityProblem]:
    """``count`` seeded random integral on-face problems (strictly dominant by default).

    ``method="box"`` samples the face equations directly (most such problems
    have multiplicity zero); ``method="semigroup"`` combines positive
    generators drawn from ``[0, hi]``, so multiplicities are nonzero.
    """
    rng = random.Random(seed)
    if method == "box":
        s = FaceSampler(fd, lo, hi)
    elif method == "semigroup":
        s = SemigroupSampler(fd, pool_hi=hi, seed=seed)
    else:
        raise ValueError(f"unknown sampling method {method!r}")
    return [s.sample(rng, strict) for _ in range(count)]
