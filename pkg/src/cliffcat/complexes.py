"""Twisted complexes of shifted projectives over the three algebras.

A complex is a list of summands P(v){a}[b] (b is the cohomological position)
plus a sparse differential matrix whose (j, i) entry is an F2 element of
e(v_i) * A * e(v_j); the map P(v_i) -> P(v_j) is right multiplication.  The
validity condition is d(delta) + delta^2 = 0 together with the degree
contract cohdeg(entry) + b_j - b_i = 1 and qdeg(entry) = a_j - a_i.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import gf2
from . import ralgebra as ra
from . import vertices as vx
from .boxalgebra import box_algebra
from .laurent import LaurentZ


class LiftError(Exception):
    """A tensor-square complex admitted no valid diagonal correction."""


# ---------------------------------------------------------------------------
# uniform algebra operations


class RAlgebraOps:
    tag = "R"

    def __init__(self, n):
        self.n = n

    def mono_source(self, m):
        return m[0]

    def mono_target(self, m):
        return m[1]

    def mono_qdeg(self, m):
        return ra.mono_qdeg_r(self.n, m)

    def mono_cohdeg(self, m):
        return 0

    def idempotent(self, v):
        return (v, v)

    def mult(self, a, b):
        return ra.mult_r(self.n, a, b)

    def diff(self, a):
        return frozenset()

    def mono_json(self, m):
        return [list(vx.seq(m[0])), list(vx.seq(m[1]))]

    def mono_from_json(self, data):
        return (vx.from_seq(data[0]), vx.from_seq(data[1]))

    def vertex_json(self, v):
        return list(vx.seq(v))

    def vertex_from_json(self, data):
        return vx.from_seq(data)

    def fmt_mono(self, m):
        return ra.fmt_mono_r(m)


class RRAlgebraOps:
    tag = "RR"

    def __init__(self, n):
        self.n = n

    def mono_source(self, m):
        return (m[0][0], m[1][0])

    def mono_target(self, m):
        return (m[0][1], m[1][1])

    def mono_qdeg(self, m):
        return ra.mono_qdeg_r(self.n, m[0]) + ra.mono_qdeg_r(self.n, m[1])

    def mono_cohdeg(self, m):
        return 0

    def idempotent(self, v):
        x, y = v
        return ((x, x), (y, y))

    def mult(self, a, b):
        return ra.mult_rr(self.n, a, b)

    def diff(self, a):
        return frozenset()

    def mono_json(self, m):
        return [[list(vx.seq(e)) for e in m[0]], [list(vx.seq(e)) for e in m[1]]]

    def mono_from_json(self, data):
        left, right = data
        return (
            (vx.from_seq(left[0]), vx.from_seq(left[1])),
            (vx.from_seq(right[0]), vx.from_seq(right[1])),
        )

    def vertex_json(self, v):
        return [list(vx.seq(v[0])), list(vx.seq(v[1]))]

    def vertex_from_json(self, data):
        return (vx.from_seq(data[0]), vx.from_seq(data[1]))

    def fmt_mono(self, m):
        return f"{ra.fmt_mono_r(m[0])}(x){ra.fmt_mono_r(m[1])}"


class BoxAlgebraOps:
    tag = "Box"

    def __init__(self, n):
        self.n = n
        self.algebra = box_algebra(n)

    def mono_source(self, m):
        return m[0]

    def mono_target(self, m):
        from .boxalgebra import path_target

        return path_target(m[0], m[1])

    def mono_qdeg(self, m):
        return self.algebra.qdeg(m[1])

    def mono_cohdeg(self, m):
        return self.algebra.cohdeg(m[1])

    def idempotent(self, v):
        return (v, ())

    def mult(self, a, b):
        return self.algebra.mult(a, b)

    def diff(self, a):
        return self.algebra.diff(a)

    def mono_json(self, m):
        (x, y), arrows = m
        return {
            "source": [list(vx.seq(x)), list(vx.seq(y))],
            "arrows": [[kind, s] for kind, s in arrows],
        }

    def mono_from_json(self, data):
        source = (vx.from_seq(data["source"][0]), vx.from_seq(data["source"][1]))
        arrows = tuple((kind, int(s)) for kind, s in data["arrows"])
        return (source, self.algebra.normal_form(source, arrows))

    def vertex_json(self, v):
        return [list(vx.seq(v[0])), list(vx.seq(v[1]))]

    def vertex_from_json(self, data):
        return (vx.from_seq(data[0]), vx.from_seq(data[1]))

    def fmt_mono(self, m):
        from .boxalgebra import fmt_mono_box

        return fmt_mono_box(m)


def ops_for(tag, n):
    return {"R": RAlgebraOps, "RR": RRAlgebraOps, "Box": BoxAlgebraOps}[tag](n)


# ---------------------------------------------------------------------------
# complexes


@dataclass(frozen=True)
class Summand:
    vertex: object
    qshift: int
    cohshift: int


@dataclass
class ProjComplex:
    ops: object
    summands: tuple
    delta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.summands = tuple(self.summands)
        self.delta = {k: frozenset(v) for k, v in self.delta.items() if v}


def projective(ops, v, qshift=0, cohshift=0):
    return ProjComplex(ops, (Summand(v, qshift, cohshift),), {})


def zero_complex(ops):
    return ProjComplex(ops, (), {})


def entry_degrees(ops, e):
    """(qdeg, cohdeg, source, target) of a homogeneous element; raises if mixed."""
    degs = {
        (ops.mono_qdeg(m), ops.mono_cohdeg(m), ops.mono_source(m), ops.mono_target(m))
        for m in e
    }
    if len(degs) != 1:
        raise ValueError(f"inhomogeneous entry: {sorted(map(ops.fmt_mono, e))}")
    return next(iter(degs))


def delta_square(c):
    """Entries of d(delta) + delta*delta, as {(j, i): elem}."""
    ops = c.ops
    out = {}
    for (j, i), e in c.delta.items():
        de = ops.diff(e)
        if de:
            out[(j, i)] = out.get((j, i), frozenset()) ^ de
    by_source = {}
    for (j, i), e in c.delta.items():
        by_source.setdefault(i, []).append((j, e))
    for (j, i), e1 in c.delta.items():
        for k, e2 in by_source.get(j, []):
            prod = ops.mult(e1, e2)
            if prod:
                out[(k, i)] = out.get((k, i), frozenset()) ^ prod
    return {key: e for key, e in out.items() if e}


def verify_mc(c, check_square=True):
    """Validity of a twisted complex; returns (ok, witness-or-None)."""
    ops = c.ops
    for (j, i), e in c.delta.items():
        if i >= len(c.summands) or j >= len(c.summands):
            return False, f"entry ({j},{i}) out of range"
        si, sj = c.summands[i], c.summands[j]
        try:
            qd, cd, src, tgt = entry_degrees(ops, e)
        except ValueError as exc:
            return False, str(exc)
        if src != si.vertex or tgt != sj.vertex:
            return False, f"entry ({j},{i}) endpoints do not match summands"
        if cd + sj.cohshift - si.cohshift != 1:
            return False, f"entry ({j},{i}) violates the cohomological contract"
        if qd != sj.qshift - si.qshift:
            return False, f"entry ({j},{i}) violates the q contract"
    if check_square:
        sq = delta_square(c)
        if sq:
            (j, i), e = sorted(sq.items())[0]
            return False, (
                f"d(delta)+delta^2 nonzero at ({j},{i}): "
                + " + ".join(sorted(c.ops.fmt_mono(m) for m in e))
            )
    return True, None


def k0_class(c):
    """Sum over summands of (-1)^cohshift q^qshift [vertex]."""
    out = {}
    for s in c.summands:
        coeff = LaurentZ.q_power(s.qshift, -1 if s.cohshift % 2 else 1)
        cur = out.get(s.vertex, LaurentZ())
        out[s.vertex] = cur + coeff
    return {v: coeff for v, coeff in out.items() if coeff}


@dataclass
class ChainMap:
    source: ProjComplex
    target: ProjComplex
    entries: dict = field(default_factory=dict)  # (j in target, i in source)

    def __post_init__(self):
        self.entries = {k: frozenset(v) for k, v in self.entries.items() if v}


def chain_map_defect(f):
    """Entries of d(f) + delta_N o f + f o delta_M (zero iff f is closed)."""
    ops = f.source.ops
    out = {}
    for (j, i), e in f.entries.items():
        de = ops.diff(e)
        if de:
            out[(j, i)] = out.get((j, i), frozenset()) ^ de
    for (j, i), e in f.entries.items():
        for (k, j2), d in f.target.delta.items():
            if j2 == j:
                prod = ops.mult(e, d)
                if prod:
                    out[(k, i)] = out.get((k, i), frozenset()) ^ prod
    for (j, i), d in f.source.delta.items():
        for (k, j2), e in f.entries.items():
            if j2 == j:
                prod = ops.mult(d, e)
                if prod:
                    out[(k, i)] = out.get((k, i), frozenset()) ^ prod
    return {key: e for key, e in out.items() if e}


def is_closed_map(f, degree=(0, 0)):
    qdeg, cohdeg = degree
    ops = f.source.ops
    for (j, i), e in f.entries.items():
        si = f.source.summands[i]
        sj = f.target.summands[j]
        qd, cd, src, tgt = entry_degrees(ops, e)
        if src != si.vertex or tgt != sj.vertex:
            return False
        if cd + sj.cohshift - si.cohshift != cohdeg:
            return False
        if qd - sj.qshift + si.qshift != qdeg:
            return False
    return not chain_map_defect(f)


def cone(f):
    """Mapping cone of a closed degree-(0,0) map f: M -> N.

    Summands are N followed by M shifted one position down; the M block maps
    into the N block through f.
    """
    if not is_closed_map(f):
        raise ValueError("cone requires a closed degree-(0,0) chain map")
    M, N = f.source, f.target
    off = len(N.summands)
    summands = list(N.summands) + [
        Summand(s.vertex, s.qshift, s.cohshift - 1) for s in M.summands
    ]
    delta = dict(N.delta)
    for (j, i), e in M.delta.items():
        delta[(off + j, off + i)] = e
    for (j, i), e in f.entries.items():
        delta[(j, off + i)] = delta.get((j, off + i), frozenset()) ^ e
    out = ProjComplex(f.source.ops, summands, delta)
    ok, witness = verify_mc(out)
    assert ok, witness
    return out


def shift(c, dq=0, dcoh=0):
    """{dq} and [dcoh] shifts: qshift + dq, cohshift - dcoh."""
    return ProjComplex(
        c.ops,
        [Summand(s.vertex, s.qshift + dq, s.cohshift - dcoh) for s in c.summands],
        dict(c.delta),
    )


def direct_sum(a, b):
    off = len(a.summands)
    delta = dict(a.delta)
    for (j, i), e in b.delta.items():
        delta[(off + j, off + i)] = e
    return ProjComplex(a.ops, tuple(a.summands) + tuple(b.summands), delta)


# ---------------------------------------------------------------------------
# tensor over the ground field and the diagonal lift


def tensor_f2(m, nc):
    """Tensor two complexes over R into one over the tensor square."""
    n = m.ops.n
    ops = RRAlgebraOps(n)
    pairs = [(i, j) for i in range(len(m.summands)) for j in range(len(nc.summands))]
    index = {p: k for k, p in enumerate(pairs)}
    summands = []
    for i, j in pairs:
        si, sj = m.summands[i], nc.summands[j]
        summands.append(
            Summand((si.vertex, sj.vertex), si.qshift + sj.qshift, si.cohshift + sj.cohshift)
        )
    delta = {}
    for (j, i), e in m.delta.items():
        for j2 in range(len(nc.summands)):
            ident = (nc.summands[j2].vertex, nc.summands[j2].vertex)
            entry = frozenset((mo, ident) for mo in e)
            delta[(index[(j, j2)], index[(i, j2)])] = entry
    for (j, i), e in nc.delta.items():
        for i2 in range(len(m.summands)):
            ident = (m.summands[i2].vertex, m.summands[i2].vertex)
            entry = frozenset((ident, mo) for mo in e)
            key = (index[(i2, j)], index[(i2, i)])
            delta[key] = delta.get(key, frozenset()) ^ entry
    out = ProjComplex(ops, summands, delta)
    ok, witness = verify_mc(out)
    assert ok, witness
    return out


def lift_to_box(c, max_rounds=10):
    """Lift a tensor-square complex to the DG thickening.

    Entries are lifted through the side-generator section; diagonal-generator
    corrections of lower cohomological degree are then solved for round by
    round until the validity condition holds.  Raises LiftError if some
    residual entry is not a boundary in its Hom-space.
    """
    assert c.ops.tag == "RR"
    n = c.ops.n
    ops = BoxAlgebraOps(n)
    alg = ops.algebra
    delta = {}
    for (j, i), e in c.delta.items():
        delta[(j, i)] = frozenset(alg.section_rr(mo) for mo in e)
    out = ProjComplex(ops, c.summands, delta)
    for _ in range(max_rounds):
        residual = delta_square(out)
        if not residual:
            break
        new_delta = dict(out.delta)
        for (j, i), e in sorted(residual.items()):
            _, cd, src, tgt = entry_degrees(ops, e)
            basis = alg.hom_basis(src, tgt, cohdeg=cd - 1)
            columns = []
            index = {}
            for p in alg.hom_basis(src, tgt, cohdeg=cd):
                index[(src, p)] = len(index)
            for p in basis:
                vec = 0
                for mono in alg.diff_mono((src, p)):
                    vec ^= 1 << index[mono]
                columns.append(vec)
            target_vec = 0
            for mono in e:
                target_vec ^= 1 << index[mono]
            combo = gf2.solve(columns, target_vec)
            if combo is None:
                raise LiftError(
                    f"unliftable complex: residual at ({j},{i}) is not a boundary"
                )
            correction = frozenset(
                (src, basis[b]) for b in range(len(basis)) if combo >> b & 1
            )
            key = (j, i)
            new_delta[key] = new_delta.get(key, frozenset()) ^ correction
        out = ProjComplex(ops, out.summands, new_delta)
    else:
        raise LiftError("diagonal correction search did not converge")
    ok, witness = verify_mc(out)
    if not ok:
        raise LiftError(witness)
    return out


# ---------------------------------------------------------------------------
# structural isomorphism up to summand relabeling


def find_relabeling(c1, c2):
    """A permutation sigma with identical summand/delta data, or None."""
    if len(c1.summands) != len(c2.summands):
        return None
    groups = {}
    for k, s in enumerate(c2.summands):
        groups.setdefault(s, []).append(k)
    slots = []
    for s in c1.summands:
        if s not in groups:
            return None
        slots.append(groups[s])

    sigma = [None] * len(c1.summands)
    used = set()

    def compatible(i, k):
        for (j2, i2), e in c1.delta.items():
            if i2 == i and sigma[j2] is not None:
                if c2.delta.get((sigma[j2], k), frozenset()) != e:
                    return False
            if j2 == i and sigma[i2] is not None:
                if c2.delta.get((k, sigma[i2]), frozenset()) != e:
                    return False
        return True

    def extend(i):
        if i == len(c1.summands):
            # full check
            mapped = {(sigma[j], sigma[i2]): e for (j, i2), e in c1.delta.items()}
            return mapped == dict(c2.delta)
        for k in slots[i]:
            if k in used or not compatible(i, k):
                continue
            sigma[i] = k
            used.add(k)
            if extend(i + 1):
                return True
            sigma[i] = None
            used.discard(k)
        return False

    if extend(0):
        return list(sigma)
    return None


# ---------------------------------------------------------------------------
# serialization


def complex_to_json(c):
    return {
        "algebra": c.ops.tag,
        "n": c.ops.n,
        "summands": [
            {"vertex": c.ops.vertex_json(s.vertex), "qshift": s.qshift, "cohshift": s.cohshift}
            for s in c.summands
        ],
        "delta": [
            {"row": j, "col": i, "monomials": [c.ops.mono_json(m) for m in sorted(e, key=repr)]}
            for (j, i), e in sorted(c.delta.items())
        ],
    }


def complex_from_json(data):
    ops = ops_for(data["algebra"], int(data["n"]))
    summands = [
        Summand(ops.vertex_from_json(s["vertex"]), int(s["qshift"]), int(s["cohshift"]))
        for s in data["summands"]
    ]
    delta = {}
    for item in data["delta"]:
        entry = frozenset(ops.mono_from_json(m) for m in item["monomials"])
        delta[(int(item["row"]), int(item["col"]))] = entry
    return ProjComplex(ops, summands, delta)
