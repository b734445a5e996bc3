"""The vertex-basis product on classes of projectives.

A pair of vertices is multiplied by gluing the in-between blocks with the
two-term resolutions of its adjacent increasing pairs, with an h-power
tracking how many far-apart transpositions occurred.  Setting h = -1 gives
an associative product whose length-one generators satisfy Clifford
relations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .laurent import LaurentZ, LaurentZH
from . import vertices as vx


def glue(parts):
    """Concatenate vertex masks; None unless strictly decreasing across
    every junction (empty parts always pass)."""
    out = 0
    prev_min = None
    for part in parts:
        if part is None:
            return None
        if part == 0:
            continue
        if prev_min is not None and vx.vmax(part) >= prev_min:
            return None
        out |= part
        prev_min = vx.vmin(part)
    return out


def mu_single(a, b):
    if a < b - 1:
        return -1 if (a + b) % 2 == 0 else 1
    return 0


@dataclass(frozen=True)
class PairData:
    x: int
    y: int
    mu: int
    s: tuple  # pair-lows, decreasing
    alpha: tuple  # p+1 blocks, each a vertex mask or None (repetition)

    @property
    def p(self):
        return len(self.s)


@lru_cache(maxsize=None)
def pair_data(x, y):
    mu = 0
    for a in vx.seq(x):
        for b in vx.seq(y):
            mu += mu_single(a, b)
    pairs = tuple(s for s in reversed(vx.seq(x)) if y >> (s + 1) & 1)
    pairs = tuple(sorted(pairs, reverse=True))
    alphas = []
    bounds = (None,) + pairs + (None,)  # sentinels +inf, -inf
    for i in range(len(pairs) + 1):
        hi = bounds[i]  # s_i (None = +inf)
        lo = bounds[i + 1]  # s_{i+1} (None = -inf)
        xs = [a for a in vx.seq(x) if (lo is None or a >= lo + 1) and (hi is None or a < hi)]
        ys = [b for b in vx.seq(y) if (lo is None or b > lo + 1) and (hi is None or b <= hi)]
        if set(xs) & set(ys):
            alphas.append(None)
        else:
            alphas.append(vx.from_seq(xs) | vx.from_seq(ys))
    return PairData(x, y, mu, pairs, tuple(alphas))


def eta(n, pd, subset):
    return sum(2 * s + 1 - n for i, s in enumerate(pd.s, start=1) if i not in subset)


def slice_monomial(pd, subset):
    """The glued vertex for a chosen resolution of the pairs, or None."""
    parts = [pd.alpha[0]]
    for i, s in enumerate(pd.s, start=1):
        parts.append(vx.from_seq((s + 1, s)) if i in subset else 0)
        parts.append(pd.alpha[i])
    return glue(parts)


def m_slices(n, x, y):
    """All (k, A, eta, monomial-or-None) of the h,q expansion of the product."""
    pd = pair_data(x, y)
    if any(a is None for a in pd.alpha):
        return []
    out = []
    for size in range(pd.p + 1):
        k = pd.mu + size
        for A in combinations(range(1, pd.p + 1), size):
            subset = frozenset(A)
            out.append((k, subset, eta(n, pd, subset), slice_monomial(pd, subset)))
    return out


def higher_mult(n, x, y):
    """Product with the h-grading kept, as {vertex: LaurentZH}."""
    out = {}
    for k, _, e, mon in m_slices(n, x, y):
        if mon is None:
            continue
        cur = out.get(mon, LaurentZH())
        out[mon] = cur + LaurentZH.monomial(e, k)
    return {v: c for v, c in out.items() if c}


def beta(n, s):
    if not 0 <= s <= n - 1:
        raise ValueError(f"s={s} out of range [0, {n - 1}]")
    return {0: LaurentZH.monomial(2 * s + 1 - n, 0), vx.from_seq((s + 1, s)): LaurentZH.monomial(0, 1)}


def higher_mult_kh(n, a, b):
    """Bilinear extension of higher_mult to {vertex: LaurentZH} arguments."""
    out = {}
    for xv, xc in a.items():
        for yv, yc in b.items():
            c = xc * yc
            for mon, coeff in higher_mult(n, xv, yv).items():
                cur = out.get(mon, LaurentZH())
                out[mon] = cur + c * coeff
    return {v: c for v, c in out.items() if c}


def mult_mono(n, x, y):
    """Specialized product of two vertices, as {vertex: LaurentZ}."""
    return {v: c.specialize_h(-1) for v, c in higher_mult(n, x, y).items() if c.specialize_h(-1)}


def mult(n, a, b):
    """Bilinear product on {vertex: LaurentZ} classes."""
    out = {}
    for xv, xc in a.items():
        for yv, yc in b.items():
            c = xc * yc
            for mon, coeff in mult_mono(n, xv, yv).items():
                cur = out.get(mon, LaurentZ())
                out[mon] = cur + c * coeff
    return {v: c for v, c in out.items() if c}


def kclass(v, coeff=None):
    return {v: coeff if coeff is not None else LaurentZ.unit()}


def kclass_add(a, b):
    out = dict(a)
    for v, c in b.items():
        cur = out.get(v, LaurentZ())
        out[v] = cur + c
    return {v: c for v, c in out.items() if c}


def kclass_scale(a, coeff):
    return {v: coeff * c for v, c in a.items() if coeff * c}


# ---------------------------------------------------------------------------
# Clifford structure checks and the quantum-group inclusion


def clifford_check(n, rng=None, samples=0):
    """Verify the Clifford presentation on the length-one generators.

    Returns a list of failure descriptions (empty = pass).
    """
    failures = []
    gens = [kclass(vx.from_seq((i,))) for i in range(n + 1)]
    unit = kclass(0)

    def anti(i, j):
        return kclass_add(mult(n, gens[i], gens[j]), mult(n, gens[j], gens[i]))

    for i in range(n + 1):
        if mult(n, gens[i], gens[i]):
            failures.append(f"X_{i}^2 != 0")
    for i in range(n + 1):
        for j in range(i + 2, n + 1):
            if anti(i, j):
                failures.append(f"X_{i}X_{j} + X_{j}X_{i} != 0")
    for i in range(n):
        want = kclass_scale(unit, LaurentZ.q_power(2 * i + 1 - n))
        if anti(i, i + 1) != want:
            failures.append(f"X_{i}X_{i + 1} + X_{i + 1}X_{i} != q^{2 * i + 1 - n}")
    if rng is not None:
        for _ in range(samples):
            coeffs = [rng.randint(-9, 9) for _ in range(n + 1)]
            v = {}
            for i, c in enumerate(coeffs):
                if c:
                    v = kclass_add(v, kclass_scale(gens[i], LaurentZ({0: c})))
            sq = mult(n, v, v)
            qform = LaurentZ()
            for i in range(n):
                qform = qform + LaurentZ.q_power(2 * i + 1 - n, coeffs[i] * coeffs[i + 1])
            want = kclass_scale(unit, qform)
            if sq != want:
                failures.append(f"quadratic form mismatch for a={coeffs}")
    return failures


def iota_letter(n, letter):
    if letter == "E":
        return {vx.from_seq((i,)): LaurentZ.unit() for i in range(0, n + 1, 2)}
    if letter == "F":
        return {vx.from_seq((i,)): LaurentZ.unit() for i in range(1, n + 1, 2)}
    if letter in ("1", "One"):
        return kclass(0)
    if letter in ("q", "Q"):
        return kclass(0, LaurentZ.q_power(1))
    if letter in ("q-1", "Qinv"):
        return kclass(0, LaurentZ.q_power(-1))
    raise ValueError(f"unknown letter {letter!r}")


def iota(n, word):
    """Image of a word over {E, F, q, Qinv, One}, folded left to right."""
    acc = kclass(0)
    for letter in word:
        acc = mult(n, acc, iota_letter(n, letter))
    return acc


def fmt_kclass(a):
    if not a:
        return "0"
    parts = []
    for v in sorted(a, key=vx.seq):
        for exps, coeff in a[v].items():
            if not isinstance(exps, tuple):
                exps = (exps,)
            factors = []
            for name, e in zip(("q", "h"), exps):
                if e:
                    factors.append(name if e == 1 else f"{name}^{e}")
            if abs(coeff) != 1:
                factors.insert(0, str(abs(coeff)))
            factors.append(vx.fmt(v))
            term = "*".join(factors)
            parts.append("-" + term if coeff < 0 else term)
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out
