"""Independent reference implementations used only by the test-suite.

Nothing here imports the package internals beyond the Cartan matrix; every
oracle recomputes its answer from first principles by a different route.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product


# ---------------------------------------------------------------------------
# root data by brute force


def cartan_of(kind: str, n: int) -> list[list[int]]:
    """Bourbaki Cartan matrix, C[i][j] = <alpha_i, alpha_j^vee>."""
    C = [[0] * n for _ in range(n)]
    for i in range(n):
        C[i][i] = 2
    for i in range(n - 1):
        C[i][i + 1] = C[i + 1][i] = -1
    if kind == "B":
        C[n - 2][n - 1] = -2
    elif kind == "C":
        C[n - 1][n - 2] = -2
    elif kind == "D":
        C[n - 2][n - 1] = C[n - 1][n - 2] = 0
        C[n - 3][n - 1] = C[n - 1][n - 3] = -1
    elif kind == "G":
        C[1][0] = -3
    return C


def reflect_root(C, beta, i):
    # root coordinates: s_i beta = beta - <beta, alpha_i^vee> alpha_i
    pair = sum(b * C[j][i] for j, b in enumerate(beta))
    out = list(beta)
    out[i] -= pair
    return tuple(out)


def positive_roots(C) -> list[tuple[int, ...]]:
    n = len(C)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    todo = list(simple)
    while todo:
        b = todo.pop()
        for i in range(n):
            r = reflect_root(C, b, i)
            if all(x >= 0 for x in r) and r not in seen:
                seen.add(r)
                todo.append(r)
    return sorted(seen, key=lambda r: (sum(r), r))


def reflect_weight(C, mu, i):
    return tuple(m - mu[i] * C[i][j] for j, m in enumerate(mu))


def weyl_group(C):
    """All elements as (reduced word, image of a regular weight), by BFS."""
    n = len(C)
    rho = tuple([1] * n)
    seen = {rho: ()}
    frontier = [rho]
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(n):
                # left multiplication: s_i w, acting by s_i after w
                u = reflect_weight(C, v, i)
                if u not in seen:
                    seen[u] = (i + 1,) + seen[v]
                    nxt.append(u)
        frontier = nxt
    return [(word, key) for key, word in seen.items()]


def apply_word_root(C, word, beta):
    for i in reversed(word):
        beta = reflect_root(C, beta, i - 1)
    return beta


def apply_word_weight(C, word, mu):
    for i in reversed(word):
        mu = reflect_weight(C, mu, i - 1)
    return tuple(mu)


def inversions(C, word):
    return {b for b in positive_roots(C) if any(x < 0 for x in apply_word_root(C, word, b))}


def half_lengths(C):
    """e_j = (alpha_j, alpha_j) / 2, so that (alpha_i, alpha_j) = C[i][j] e_j; min e = 1."""
    n = len(C)
    e = [None] * n
    e[0] = Fraction(1)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(n):
                if e[i] is not None and e[j] is None and C[i][j]:
                    e[j] = e[i] * C[j][i] / C[i][j]
                    changed = True
    m = min(e)
    return [x / m for x in e]


def weyl_dimension(C, lam):
    n = len(C)
    e = half_lengths(C)
    num = den = Fraction(1)
    for beta in positive_roots(C):
        norm = sum(beta[i] * beta[j] * C[i][j] * e[j] for i in range(n) for j in range(n))
        # <v, beta^vee> = 2 (v, beta) / (beta, beta), with (omega_j, alpha_j) = e_j
        num *= 2 * sum((lam[j] + 1) * beta[j] * e[j] for j in range(n)) / norm
        den *= 2 * sum(beta[j] * e[j] for j in range(n)) / norm
    q = num / den
    assert q.denominator == 1
    return int(q)


# ---------------------------------------------------------------------------
# Littlewood-Richardson coefficients by counting tableaux


def sl_to_partition(mu, extra=0):
    """Fundamental-weight coordinates of SL_{n+1} to a partition with n+1 parts."""
    parts = [0]
    for m in reversed(mu):
        parts.append(parts[-1] + m)
    return tuple(p + extra for p in reversed(parts))


def lr_coefficient(lam, mu, nu) -> int:
    """c^nu_{lam, mu}: LR fillings of nu/lam with content mu."""
    lam = tuple(lam) + (0,) * (len(nu) - len(lam))
    if sum(nu) != sum(lam) + sum(mu) or any(l > n for l, n in zip(lam, nu)):
        return 0
    rows = [(lam[r], nu[r]) for r in range(len(nu))]
    mu = tuple(m for m in mu if m)

    def fill_row(r, prev_row, counts):
        if r == len(rows):
            return int(list(counts) == list(mu))
        a, b = rows[r]
        total = 0
        # fill cells a..b-1 of row r right to left (reading order), entries weakly increasing left to right
        width = b - a

        def rec(pos, cur, cnts, maxval):
            nonlocal total
            if pos < 0:
                total_here.append((tuple(cur), tuple(cnts)))
                return
            col = a + pos
            above = prev_row.get(col)
            for v in range(1, maxval + 1):
                if v > len(mu):
                    break
                if above is not None and v <= above:
                    continue
                # lattice condition while reading right to left, top to bottom
                if v > 1 and cnts[v - 1] + 1 > cnts[v - 2]:
                    continue
                if cnts[v - 1] + 1 > mu[v - 1]:
                    continue
                cnts[v - 1] += 1
                cur[pos] = v
                rec(pos - 1, cur, cnts, v)
                cnts[v - 1] -= 1

        total_here: list = []
        rec(width - 1, [0] * width, list(counts), len(mu))
        for cur, cnts in total_here:
            row_map = {a + p: v for p, v in enumerate(cur)}
            total += fill_row(r + 1, row_map, cnts)
        return total

    return fill_row(0, {}, [0] * len(mu))


def lr_sl(lam, mu, nu) -> int:
    """c^nu_{lam,mu} for SL_{n+1} weights in fundamental coordinates."""
    pl, pm = sl_to_partition(lam), sl_to_partition(mu)
    pn0 = sl_to_partition(nu)
    shift, r = divmod(sum(pl) + sum(pm) - sum(pn0), len(pn0))
    if r:
        return 0
    pn = tuple(p + shift for p in pn0)
    if min(pn) < 0:
        return 0
    return lr_coefficient(pl, pm, pn)


# ---------------------------------------------------------------------------
# type A Schubert polynomials with sympy


def _sympy():
    import sympy

    return sympy


@lru_cache(maxsize=None)
def schubert_poly_A(perm: tuple[int, ...]):
    """Lascoux-Schutzenberger polynomial of a permutation (one-line, 1-based)."""
    sp = _sympy()
    N = len(perm)
    xs = sp.symbols(f"x1:{N + 1}")
    w0 = tuple(range(N, 0, -1))
    if perm == w0:
        return sp.expand(sp.Mul(*[xs[i] ** (N - 1 - i) for i in range(N)]))
    for i in range(N - 1):
        if perm[i] < perm[i + 1]:
            up = list(perm)
            up[i], up[i + 1] = up[i + 1], up[i]
            f = schubert_poly_A(tuple(up))
            g = f.subs({xs[i]: xs[i + 1], xs[i + 1]: xs[i]}, simultaneous=True)
            return sp.expand(sp.cancel((f - g) / (xs[i] - xs[i + 1])))
    raise AssertionError("unreachable")


def word_to_perm(word, N):
    # swapping positions i, i+1 is right multiplication by s_i
    perm = list(range(1, N + 1))
    for i in word:
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return tuple(perm)


@lru_cache(maxsize=None)
def _coinvariant_basis(N):
    sp = _sympy()
    xs = sp.symbols(f"x1:{N + 1}")
    t = sp.Symbol("t")
    gen = sp.expand(sp.Mul(*[(1 + t * x) for x in xs]))
    elem = [gen.coeff(t, k) for k in range(1, N + 1)]
    # x_N > ... > x_1 makes the standard monomials x^c with c_i <= N - i
    return xs, sp.groebner(elem, *reversed(xs), order="lex")


def schubert_expand_A(poly, N):
    """Class of ``poly`` in H^*(Fl_N) in the Schubert basis.

    Reduce modulo the symmetric ideal (lex normal forms are sub-staircase),
    then peel lex-leading monomials, which are Lehmer codes.
    """
    sp = _sympy()
    from itertools import permutations

    xs, G = _coinvariant_basis(N)
    basis = {}
    for perm in permutations(range(1, N + 1)):
        code = tuple(sum(1 for j in range(i + 1, N) if perm[j] < perm[i]) for i in range(N))
        basis[code] = perm
    out = {}
    _, nf = G.reduce(sp.expand(poly))
    rem = sp.Poly(nf, *xs)
    while not rem.is_zero:
        mono, coeff = max(rem.terms(), key=lambda t: t[0])
        perm = basis[tuple(mono)]
        out[perm] = out.get(perm, 0) + coeff
        rem = rem - sp.Poly(coeff * schubert_poly_A(perm), *xs)
    return out


# ---------------------------------------------------------------------------
# closed-form face conditions and restrictions of the worked rules
# (a, b, c are the fundamental coordinates of mu_1, mu_2, mu; 1-based in the formulas)


def cond_grassmannian_a5(a, b, c):
    return c[0] + 2 * c[1] + c[2] + c[4] == (a[0] + 2 * a[1] + a[2] + 2 * a[3] + a[4]) + (
        b[0] + 2 * b[1] + b[2] + 2 * b[3] + b[4]
    )


def restrict_grassmannian_a5(v):
    return (v[0], v[1] + v[2]), (v[2] + v[3], v[4])


def restrict_grassmannian_a5_target(c):
    return (c[0], c[1] + c[2] + c[3]), (c[2], c[3] + c[4])


def projective_side(n, v, m):
    return (n + 1) * sum(v[r - 1] for r in range(m + 1, n + 1)) - sum(r * v[r - 1] for r in range(1, n + 1))


def cond_projective(n, i, j, k, a, b, c):
    return projective_side(n, c, k) == projective_side(n, a, i) + projective_side(n, b, j)


def restrict_projective(v, i):
    v = list(v) + [0]
    n = len(v) - 1
    if i == 0:
        return tuple(v[1:n])
    out = v[:i - 1] + [v[i - 1] + v[i]] + v[i + 1:n]
    return tuple(out)


def cond_gl_delete(ents, target_entry):
    return target_entry == sum(ents)


def cond_two_step(a, b, c):
    a1, a2, a3, a4 = a
    b1, b2, b3, b4 = b
    c1, c2, c3, c4 = c
    e1 = 2 * c1 - c2 - 4 * c3 - 2 * c4 == (2 * a1 + 4 * a2 + a3 + 3 * a4) + (2 * b1 - b2 + b3 - 2 * b4)
    e2 = c1 - 3 * c2 - 2 * c3 - c4 == (a1 + 2 * a2 - 2 * a3 - a4) + (b1 + 2 * b2 + 3 * b3 - b4)
    return e1 and e2


def restrict_two_step(a, b, c):
    return (a[0], a[1] + a[2]), (b[0] + b[1], b[2] + b[3]), (c[0] + c[1] + c[2], c[3])


def cond_dn(n, i, j, k, a, b, c):
    def side(v, m):
        return 2 * sum(v[r - 1] for r in range(m + 1, n - 1)) + v[n - 2] + v[n - 1]

    return side(c, k) == side(a, i) + side(b, j)


def cond_cn(n, a, b, c):
    def s(v):
        return sum(r * v[r - 1] for r in range(1, n + 1))

    return s(c) - 2 * c[n - 2] - 4 * c[n - 1] == (s(a) - 2 * a[n - 1]) + (s(b) - 2 * b[n - 2] - 2 * b[n - 1])


def restrict_cn(a, b, c):
    n = len(a)
    ra = tuple(a[: n - 2]) + (a[n - 2] + 2 * a[n - 1],)
    rb = tuple(b[: n - 3]) + (b[n - 3] + b[n - 2], b[n - 2] + 2 * b[n - 1])
    rc = tuple(c[: n - 3]) + (c[n - 3] + c[n - 2] + 2 * c[n - 1], c[n - 2])
    return ra, rb, rc


def all_dominant(n, hi):
    return list(product(range(hi + 1), repeat=n))
