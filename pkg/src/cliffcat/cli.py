"""Command-line entry point: object dumps, verification suites, JSON export.

Exit codes: 0 on success, 1 when a suite reports failures, 2 on usage errors.
All JSON output has stable key and list orderings so reruns are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from dataclasses import asdict, dataclass, field

from . import bimodule as bm
from . import boxalgebra as bx
from . import catun as cu
from . import complexes as cx
from . import kzero as kz
from . import quiver as qv
from . import ralgebra as ra
from . import vertices as vx
from .laurent import LaurentZH

# default n caps per suite, tuned so `verify --suite all` stays at desk scale
SUITE_BOUNDS = {
    "quiver": 5,
    "algebra": 4,
    "box": 3,
    "clifford": 5,
    "kzero": 5,
    "bimodule": 4,
    "catun": 3,
}


@dataclass
class SuiteReport:
    suite: str
    n: int
    checks: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self):
        return not self.failures


# ---------------------------------------------------------------------------
# verification suites


def suite_quiver(n, rng):
    rep = SuiteReport("quiver", n)
    g = qv.build_gamma(n)
    if len(g.vertices) != 1 << (n + 1):
        rep.failures.append("vertex count")
    rep.checks += 1
    for v, arrs in g.out_arrows.items():
        for s, w in arrs:
            rep.checks += 1
            if vx.length(w) != vx.length(v) + 2:
                rep.failures.append(f"arrow {vx.fmt(v)}->{vx.fmt(w)}: length")
            if w != (v | qv.pair_mask(s)) or v & qv.pair_mask(s):
                rep.failures.append(f"arrow {vx.fmt(v)}->{vx.fmt(w)}: shape")
    for comp in qv.components(g):
        rep.checks += 1
        if len({vx.euler(v) for v in comp}) != 1:
            rep.failures.append("Euler grading not constant on a component")
    if n == 2:
        comps = qv.components(g)
        sizes = sorted(len(c) for c in comps)
        eulers = sorted(vx.euler(c[0]) for c in comps)
        rep.checks += 1
        if sizes != [1, 1, 3, 3] or eulers != [-1, 0, 1, 2]:
            rep.failures.append("n=2 component structure")
    return rep


def suite_algebra(n, rng):
    rep = SuiteReport("algebra", n)
    for x in vx.all_vertices(n):
        for w in vx.all_vertices(n):
            rep.checks += 1
            d = 0 if ra.basis_mon_r(n, x, w) is None else 1
            if d != ra.oracle_dim_r(n, x, w):
                rep.failures.append(f"dim mismatch at {vx.fmt(x)}->{vx.fmt(w)}")
    # composable triples: the product of basis monomials is the basis monomial
    for x in vx.all_vertices(n):
        for w in vx.all_vertices(n):
            if ra.basis_mon_r(n, x, w) is None:
                continue
            for v in vx.all_vertices(n):
                if ra.basis_mon_r(n, w, v) is None:
                    continue
                rep.checks += 1
                got = ra.mult_mono_r(n, (x, w), (w, v))
                if got != (x, v) or ra.oracle_dim_r(n, x, v) != 1:
                    rep.failures.append(
                        f"product at {vx.fmt(x)}->{vx.fmt(w)}->{vx.fmt(v)}"
                    )
    return rep


def suite_box(n, rng):
    rep = SuiteReport("box", n)
    alg = bx.box_algebra(n)
    monos = list(alg.all_monomials())
    for m in monos:
        rep.checks += 1
        dm = alg.diff_mono(m)
        if alg.diff(dm):
            rep.failures.append(f"d^2 != 0 at {bx.fmt_mono_box(m)}")
        cd, qd = alg.cohdeg(m[1]), alg.qdeg(m[1])
        for dmono in dm:
            if alg.cohdeg(dmono[1]) != cd + 1 or alg.qdeg(dmono[1]) != qd:
                rep.failures.append(f"d bidegree at {bx.fmt_mono_box(m)}")
    for x1 in vx.all_vertices(n):
        for y1 in vx.all_vertices(n):
            for x2 in vx.all_vertices(n):
                for y2 in vx.all_vertices(n):
                    rep.checks += 1
                    dims = alg.cohomology_dims((x1, y1), (x2, y2))
                    want = ra.dim_rr(n, (x1, y1), (x2, y2))
                    if dims != ({0: want} if want else {}):
                        rep.failures.append(
                            f"cohomology at {vx.fmt_pair((x1, y1))}->{vx.fmt_pair((x2, y2))}"
                        )
    from .boxalgebra import path_target

    by_source = {}
    for m in monos:
        by_source.setdefault(m[0], []).append(m)
    for m1 in monos:
        tgt = path_target(m1[0], m1[1])
        for m2 in by_source.get(tgt, []):
            rep.checks += 1
            p = alg.mult_mono(m1, m2)
            lhs = alg.h_map(frozenset([p]))
            rhs = ra.mult_rr(n, alg.h_map(frozenset([m1])), alg.h_map(frozenset([m2])))
            if lhs != rhs:
                rep.failures.append(
                    f"H not multiplicative at {bx.fmt_mono_box(m1)} * {bx.fmt_mono_box(m2)}"
                )
    return rep


def suite_clifford(n, rng, samples=1000):
    rep = SuiteReport("clifford", n)
    rep.failures = kz.clifford_check(n, rng, samples)
    rep.checks = (n + 1) + (n + 1) * n // 2 + n + samples
    return rep


def _local_lemma_failures(n):
    out = []
    one = LaurentZH.unit()
    h = LaurentZH.monomial(0, 1)
    for s in range(n):
        a, b = 1 << s, 1 << (s + 1)
        lhs = kz.higher_mult_kh(n, {a: one}, kz.higher_mult(n, a, b))
        want = {a: (one + h) * LaurentZH.monomial(2 * s + 1 - n, 0)}
        if lhs != want:
            out.append(f"local (1) at s={s}")
        if kz.higher_mult_kh(n, kz.higher_mult(n, a, a), {b: one}):
            out.append(f"local (1) rhs at s={s}")
        lhs2 = kz.higher_mult_kh(n, {a: one}, kz.higher_mult(n, b, b))
        rhs2 = kz.higher_mult_kh(n, kz.higher_mult(n, a, b), {b: one})
        if any(c.specialize_h(-1) for c in lhs2.values()) or any(
            c.specialize_h(-1) for c in rhs2.values()
        ):
            out.append(f"local (2) at s={s}")
    for s in range(1, n):
        a, b, c = 1 << (s - 1), 1 << s, 1 << (s + 1)
        lhs = kz.higher_mult_kh(n, {a: one}, kz.higher_mult(n, b, c))
        rhs = kz.higher_mult_kh(n, kz.higher_mult(n, a, b), {c: one})
        if lhs != rhs:
            out.append(f"local (3) at s={s}")
    return out


def suite_kzero(n, rng, random_triples=100000):
    rep = SuiteReport("kzero", n)
    rep.failures.extend(_local_lemma_failures(n))
    rep.checks += 3 * n
    # special cases of the product on single letters
    for a in range(n + 1):
        for b in range(n + 1):
            rep.checks += 1
            got = kz.higher_mult(n, 1 << a, 1 << b)
            if a > b:
                want = {(1 << a) | (1 << b): LaurentZH.unit()}
            elif a == b:
                want = {}
            elif a < b - 1:
                want = {(1 << a) | (1 << b): LaurentZH.monomial(0, (-1) ** (a + b + 1))}
            else:
                want = {
                    0: LaurentZH.monomial(2 * a + 1 - n, 0),
                    (1 << a) | (1 << b): LaurentZH.monomial(0, 1),
                }
            if got != want:
                rep.failures.append(f"special case M([{a}],[{b}])")
    # associativity: exhaustive at small n, sampled above
    if n <= 3:
        triples = (
            (a, b, c)
            for a in vx.all_vertices(n)
            for b in vx.all_vertices(n)
            for c in vx.all_vertices(n)
        )
    else:
        triples = (
            tuple(rng.randrange(1 << (n + 1)) for _ in range(3))
            for _ in range(random_triples)
        )
    for a, b, c in triples:
        rep.checks += 1
        lhs = kz.mult(n, kz.mult_mono(n, a, b), kz.kclass(c))
        rhs = kz.mult(n, kz.kclass(a), kz.mult_mono(n, b, c))
        if lhs != rhs:
            rep.failures.append(
                f"associativity at {vx.fmt(a)},{vx.fmt(b)},{vx.fmt(c)}"
            )
            if len(rep.failures) > 20:
                break
    return rep


def suite_bimodule(n, rng):
    rep = SuiteReport("bimodule", n)
    rep.failures = bm.verify_bimodule(n, seed=rng.randrange(1 << 30))
    rep.checks = (1 << (n + 1)) ** 2 if n <= 3 else 200
    # categorified product: k0 of each T equals the specialized product
    cap = min(n, 4)
    for x in vx.all_vertices(cap):
        for y in vx.all_vertices(cap):
            rep.checks += 1
            tp = bm.t_pair(cap, x, y)
            if cx.k0_class(tp.complex) != kz.mult_mono(cap, x, y):
                rep.failures.append(f"k0(T{vx.fmt_pair((x, y))}) != m")
    return rep


def suite_catun(n, rng):
    rep = SuiteReport("catun", n)
    rep.failures.extend(cu.ee_shape_check(n))
    rep.checks += 2
    for letter in ("E", "F"):
        rep.checks += 1
        c = cu.letter_complex(n, letter)
        if cx.k0_class(c) != kz.iota_letter(n, letter):
            rep.failures.append(f"k0 of {letter}")
        rep.failures.extend(
            f"{letter}: {msg}" for msg in cu.unit_law_check(n, c)
        )
        rep.checks += 2
    letters = ("E", "F", "Q", "Qinv")
    words = [(l,) for l in letters]
    words += [(a, b) for a in letters for b in letters]
    words += [(a, b, c) for a in letters for b in letters for c in letters]
    for w in words:
        for tree in cu._all_trees(0, len(w)):
            rep.checks += 1
            word = cu.Word(w, tree if len(w) > 1 else None)
            lifted = cu.lift_word(n, word)
            ok, witness = cx.verify_mc(lifted)
            if not ok:
                rep.failures.append(f"lift of {''.join(w)}: {witness}")
            want = _fold_m(n, w, tree)
            if cx.k0_class(lifted) != want:
                rep.failures.append(f"k0 of lift of {''.join(w)} assoc {tree}")
        if rep.failures and len(rep.failures) > 20:
            break
    return rep


def _fold_m(n, letters, tree):
    if isinstance(tree, int):
        return kz.iota_letter(n, letters[tree])
    left, right = tree
    return kz.mult(n, _fold_m(n, letters, left), _fold_m(n, letters, right))


SUITES = {
    "quiver": suite_quiver,
    "algebra": suite_algebra,
    "box": suite_box,
    "clifford": suite_clifford,
    "kzero": suite_kzero,
    "bimodule": suite_bimodule,
    "catun": suite_catun,
}


def run_suite(name, n, seed, bound_override=False):
    bound = SUITE_BOUNDS[name]
    if n > bound and not bound_override:
        n = bound
    rng = random.Random(seed)
    t0 = time.time()
    rep = SUITES[name](n, rng)
    rep.seconds = round(time.time() - t0, 3)
    return rep


# ---------------------------------------------------------------------------
# object dumps


def _class_json(a):
    out = []
    for v in sorted(a, key=vx.seq):
        out.append({"vertex": vx.fmt(v), "coeff": a[v].to_json()})
    return out


def cmd_quiver(args):
    if args.box:
        data = qv.box_quiver_json(qv.build_gamma_box(args.n))
    else:
        data = qv.quiver_json(qv.build_gamma(args.n))
    if args.json:
        _emit(data)
    else:
        print(f"n={args.n}: {len(data['vertices'])} vertices, {len(data['arrows'])} arrows")
        if not args.box:
            for comp in data["components"]:
                print(f"  euler {comp['euler']:+d}: {' '.join(comp['vertices'])}")
    return 0


def cmd_algebra(args):
    n = args.n
    if args.source is None or args.target is None:
        total = sum(
            1
            for x in vx.all_vertices(n)
            for w in vx.all_vertices(n)
            if ra.basis_mon_r(n, x, w)
        )
        data = {"n": n, "nonzero_hom_spaces": total, "vertices": 1 << (n + 1)}
        _emit(data) if args.json else print(
            f"n={n}: {total} nonzero Hom-spaces among {(1 << (n + 1)) ** 2}"
        )
        return 0
    x, w = vx.parse(args.source, n), vx.parse(args.target, n)
    mono = ra.basis_mon_r(n, x, w)
    data = {
        "n": n,
        "source": vx.fmt(x),
        "target": vx.fmt(w),
        "dim": 0 if mono is None else 1,
        "qdeg": None if mono is None else ra.mono_qdeg_r(n, mono),
    }
    _emit(data) if args.json else print(
        "0" if mono is None else f"{ra.fmt_mono_r(mono)}  qdeg={data['qdeg']}"
    )
    return 0


def cmd_multiply(args):
    n = args.n
    x, y = vx.parse(args.x, n), vx.parse(args.y, n)
    if args.keep_h:
        result = kz.higher_mult(n, x, y)
    else:
        result = kz.mult_mono(n, x, y)
    if args.json:
        _emit({"n": n, "x": vx.fmt(x), "y": vx.fmt(y), "keep_h": bool(args.keep_h),
               "result": _class_json(result)})
    else:
        print(kz.fmt_kclass(result))
    return 0


def cmd_bimodule(args):
    n = args.n
    x, y = vx.parse(args.pair[0], n), vx.parse(args.pair[1], n)
    tp = bm.t_pair(n, x, y)
    data = cx.complex_to_json(tp.complex)
    data["pair"] = [vx.fmt(x), vx.fmt(y)]
    data["k0"] = _class_json(cx.k0_class(tp.complex))
    if args.json:
        _emit(data)
    else:
        for k, A, e, mon in tp.slices:
            print(f"slice {k}: P({vx.fmt(mon)}){{{e}}}  A={sorted(A)}")
        print("k0 =", kz.fmt_kclass(cx.k0_class(tp.complex)))
    return 0


def cmd_complex(args):
    with open(args.file) as fh:
        c = cx.complex_from_json(json.load(fh))
    ok, witness = cx.verify_mc(c)
    k0 = cx.k0_class(c) if c.ops.tag == "R" else None
    if args.json:
        _emit({"valid": ok, "witness": witness,
               "k0": None if k0 is None else _class_json(k0)})
    else:
        print("valid" if ok else f"INVALID: {witness}")
        if k0 is not None:
            print("k0 =", kz.fmt_kclass(k0))
    return 0 if ok else 1


def cmd_lift(args):
    n = args.n
    word = cu.parse_word(args.word, args.assoc)
    c = cu.lift_word(n, word)
    if args.json:
        data = cx.complex_to_json(c)
        data["word"] = list(word.letters)
        data["k0"] = _class_json(cx.k0_class(c))
        _emit(data)
    else:
        for s in sorted(c.summands, key=lambda s: (s.cohshift, vx.seq(s.vertex), s.qshift)):
            print(f"P({vx.fmt(s.vertex)}){{{s.qshift}}} at position {s.cohshift}")
        print("delta entries:", len(c.delta))
        print("k0 =", kz.fmt_kclass(cx.k0_class(c)))
    return 0


def cmd_verify(args):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = [run_suite(s, args.n, args.seed, args.bound_override) for s in names]
    if args.json:
        _emit([asdict(r) for r in reports])
    else:
        for r in reports:
            status = "ok" if r.ok else f"FAIL ({len(r.failures)})"
            print(f"{r.suite:10s} n={r.n}  checks={r.checks:<7d} {status}  [{r.seconds}s]")
            for f in r.failures[:10]:
                print(f"    {f}")
    return 0 if all(r.ok for r in reports) else 1


def cmd_export_all(args):
    n = args.n
    os.makedirs(args.out, exist_ok=True)

    def dump(name, data):
        path = os.path.join(args.out, name)
        with open(path, "w") as fh:
            json.dump(data, fh, indent=1, sort_keys=True)
            fh.write("\n")
        print("wrote", path)

    dump(f"quiver_n{n}.json", qv.quiver_json(qv.build_gamma(n)))
    if n <= 3:
        dump(f"box_quiver_n{n}.json", qv.box_quiver_json(qv.build_gamma_box(n)))
    table = []
    for x in vx.all_vertices(n):
        for y in vx.all_vertices(n):
            table.append(
                {"x": vx.fmt(x), "y": vx.fmt(y),
                 "m": _class_json(kz.mult_mono(n, x, y)),
                 "M": [[vx.fmt(v), c.to_json()] for v, c in
                       sorted(kz.higher_mult(n, x, y).items(), key=lambda t: vx.seq(t[0]))]}
            )
    dump(f"multiplication_n{n}.json", {"n": n, "table": table})
    if n <= 3:
        complexes = []
        for x in vx.all_vertices(n):
            for y in vx.all_vertices(n):
                data = cx.complex_to_json(bm.t_pair(n, x, y).complex)
                data["pair"] = [vx.fmt(x), vx.fmt(y)]
                complexes.append(data)
        dump(f"t_complexes_n{n}.json", complexes)
    for word in ("E", "F", "EF", "FE"):
        c = cu.lift_word(n, cu.parse_word(word))
        data = cx.complex_to_json(c)
        data["word"] = list(word)
        dump(f"lift_{word}_n{n}.json", data)
    return 0


def _emit(data):
    json.dump(data, sys.stdout, indent=1, sort_keys=True)
    sys.stdout.write("\n")


# ---------------------------------------------------------------------------


def build_parser():
    ap = argparse.ArgumentParser(prog="cliffcat")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("quiver", help="dump a quiver")
    common(p)
    p.add_argument("--box", action="store_true")
    p.set_defaults(func=cmd_quiver)

    p = sub.add_parser("algebra", help="Hom-space data of the base algebra")
    common(p)
    p.add_argument("--source")
    p.add_argument("--target")
    p.set_defaults(func=cmd_algebra)

    p = sub.add_parser("multiply", help="product of two vertex classes")
    common(p)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--keep-h", action="store_true", dest="keep_h")
    p.set_defaults(func=cmd_multiply)

    p = sub.add_parser("bimodule", help="the per-pair complex T(x,y)")
    common(p)
    p.add_argument("--pair", nargs=2, required=True, metavar=("X", "Y"))
    p.set_defaults(func=cmd_bimodule)

    p = sub.add_parser("complex", help="verify a complex JSON file")
    p.add_argument("--file", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_complex)

    p = sub.add_parser("lift", help="lift a word to a complex")
    common(p)
    p.add_argument("--word", required=True)
    p.add_argument("--assoc")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("verify", help="run a verification suite")
    common(p)
    p.add_argument("--suite", default="all", choices=["all"] + sorted(SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound-override", action="store_true", dest="bound_override")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-all", help="write all JSON artifacts")
    common(p)
    p.add_argument("--out", default="export")
    p.set_defaults(func=cmd_export_all)

    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if getattr(args, "n", 1) <= 0:
        print("error: --n must be positive", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
