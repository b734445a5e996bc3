"""The pair-insertion algebra on one quiver and its tensor square.

Hom-spaces between two vertices are at most one-dimensional over F2: a basis
monomial exists from x to w exactly when w contains x and every maximal run
of consecutive integers in w - x has even length.  Products of composable
monomials never vanish, so multiplication is composition of spans.  A brute
force path enumeration modulo the commutation relation double-checks both
facts (oracle_dim_r).
"""

from __future__ import annotations

from functools import lru_cache

from . import quiver as qv
from . import vertices as vx

# ---------------------------------------------------------------------------
# normal-form monomials


def run_decomposition(diff):
    """Maximal runs of consecutive integers in the mask diff, as (start, len)."""
    runs = []
    s = 0
    m = diff
    while m:
        if m & 1:
            start = s
            ln = 0
            while m & 1:
                m >>= 1
                s += 1
                ln += 1
            runs.append((start, ln))
        else:
            m >>= 1
            s += 1
    return runs


@lru_cache(maxsize=None)
def forced_pairs(x, w):
    """Pair-lows of the unique pair decomposition of w - x, or None.

    None when x is not contained in w or some run of w - x has odd length.
    """
    if x & ~w:
        return None
    pairs = []
    for start, ln in run_decomposition(w & ~x):
        if ln % 2:
            return None
        pairs.extend(range(start, start + ln, 2))
    return tuple(pairs)


def basis_mon_r(n, x, w):
    """The basis monomial of e(x)*R*e(w), or None if that Hom-space is zero."""
    if forced_pairs(x, w) is None:
        return None
    return (x, w)


def mono_qdeg_r(n, mono):
    x, w = mono
    return sum(n - 1 - 2 * s for s in forced_pairs(x, w))


def mult_mono_r(n, m1, m2):
    """Compose two monomials; None if targets mismatch.

    Composable products never vanish: the relations only reorder pair
    insertions.  The composite Hom-space is therefore nonzero, which the
    assert (and oracle_dim_r in tests) guards.
    """
    x1, w1 = m1
    x2, w2 = m2
    if w1 != x2:
        return None
    out = basis_mon_r(n, x1, w2)
    assert out is not None, (m1, m2)
    return out


# F2 elements are frozensets of monomials


def elem(*monos):
    out = set()
    for m in monos:
        if m is None:
            continue
        out.symmetric_difference_update([m])
    return frozenset(out)


def mult_r(n, a, b):
    out = set()
    for m1 in a:
        for m2 in b:
            m = mult_mono_r(n, m1, m2)
            if m is not None:
                out.symmetric_difference_update([m])
    return frozenset(out)


# ---------------------------------------------------------------------------
# path-engine oracle

ORACLE_BOUND = 5


def _paths(n, x, w):
    """All directed paths x -> w as tuples of pair-lows, in insertion order."""
    if x == w:
        return [()]
    out = []
    for s, y in qv.arrow_targets(n, x):
        if y & ~w:
            continue
        for rest in _paths(n, y, w):
            out.append((s,) + rest)
    return out


@lru_cache(maxsize=None)
def oracle_dim_r(n, x, w, bound=ORACLE_BOUND):
    """dim e(x)*R*e(w) by enumerating paths modulo adjacent-swap relations."""
    if n > bound:
        raise ValueError(f"oracle bound {bound} exceeded for n={n}")
    paths = _paths(n, x, w)
    if not paths:
        return 0
    index = {p: i for i, p in enumerate(paths)}
    parent = list(range(len(paths)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for p, i in index.items():
        for k in range(len(p) - 1):
            swapped = p[:k] + (p[k + 1], p[k]) + p[k + 2 :]
            j = index.get(swapped)
            if j is not None:
                parent[find(i)] = find(j)
    return len({find(i) for i in range(len(paths))})


# ---------------------------------------------------------------------------
# tensor square: monomials are pairs of R monomials


def mono_rr(left, right):
    return (left, right)


def mult_mono_rr(n, m1, m2):
    l1, r1 = m1
    l2, r2 = m2
    if l1[1] != l2[0] or r1[1] != r2[0]:
        return None
    return (mult_mono_r(n, l1, l2), mult_mono_r(n, r1, r2))


def mult_rr(n, a, b):
    out = set()
    for m1 in a:
        for m2 in b:
            m = mult_mono_rr(n, m1, m2)
            if m is not None:
                out.symmetric_difference_update([m])
    return frozenset(out)


def dim_rr(n, src_pair, tgt_pair):
    (x1, y1), (x2, y2) = src_pair, tgt_pair
    d1 = 0 if basis_mon_r(n, x1, x2) is None else 1
    d2 = 0 if basis_mon_r(n, y1, y2) is None else 1
    return d1 * d2


def fmt_mono_r(mono):
    x, w = mono
    if x == w:
        return f"e{vx.fmt(x)}"
    return f"r({vx.fmt(x)}->{vx.fmt(w)})"
