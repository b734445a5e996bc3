"""Vertices of the quivers: strictly decreasing sequences in {0..n}.

A vertex is stored as an int bitmask over {0..n}; bit s set means the
integer s occurs in the sequence.  The empty vertex [] is the mask 0.
"""

from __future__ import annotations


def seq(v):
    """Decreasing tuple of elements of the vertex mask v."""
    out = []
    s = 0
    m = v
    while m:
        if m & 1:
            out.append(s)
        m >>= 1
        s += 1
    return tuple(reversed(out))


def from_seq(elems, n=None):
    """Build a vertex mask from an iterable of distinct integers."""
    mask = 0
    for e in elems:
        e = int(e)
        if e < 0 or (n is not None and e > n):
            raise ValueError(f"element {e} out of range [0, {n}]")
        if mask >> e & 1:
            raise ValueError(f"repeated element {e}")
        mask |= 1 << e
    return mask


def length(v):
    return bin(v).count("1")


def euler(v):
    """Alternating-sign count: sum of (-1)^s over elements s."""
    even = bin(v & 0x5555555555555555).count("1")
    return 2 * even - length(v)


def vmin(v):
    """Least element, or None for the empty vertex."""
    if v == 0:
        return None
    return (v & -v).bit_length() - 1


def vmax(v):
    if v == 0:
        return None
    return v.bit_length() - 1


def fmt(v):
    return "[" + ",".join(str(e) for e in seq(v)) + "]"


def parse(text, n=None):
    """Parse '[2,1,0]' or '[]' into a vertex mask."""
    t = "".join(text.split())
    if not (t.startswith("[") and t.endswith("]")):
        raise ValueError(f"bad vertex syntax: {text!r}")
    body = t[1:-1]
    elems = [int(p) for p in body.split(",")] if body else []
    if elems != sorted(elems, reverse=True):
        raise ValueError(f"sequence not strictly decreasing: {text!r}")
    return from_seq(elems, n)


def all_vertices(n):
    """All 2^(n+1) vertex masks over {0..n}."""
    return range(1 << (n + 1))


def fmt_pair(xy):
    x, y = xy
    return f"({fmt(x)},{fmt(y)})"
