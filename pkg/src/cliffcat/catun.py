"""Word liftings: complexes categorifying products of generators.

The generators E and F lift to direct sums of single projectives; a word over
{One, Q, Qinv, E, F} lifts by folding the composite product rho (tensor over
the ground field, lift to the DG thickening, tensor with the bimodule) over a
chosen association tree.  On Grothendieck classes rho is the vertex product.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kzero as kz
from . import vertices as vx
from .bimodule import tensor_T
from .complexes import (
    RAlgebraOps,
    direct_sum,
    find_relabeling,
    k0_class,
    lift_to_box,
    projective,
    shift,
    tensor_f2,
    zero_complex,
)

LETTERS = ("One", "Q", "Qinv", "E", "F")


def make_E(n):
    ops = RAlgebraOps(n)
    c = zero_complex(ops)
    for i in range(0, n + 1, 2):
        c = direct_sum(c, projective(ops, vx.from_seq((i,))))
    return c


def make_F(n):
    ops = RAlgebraOps(n)
    c = zero_complex(ops)
    for i in range(1, n + 1, 2):
        c = direct_sum(c, projective(ops, vx.from_seq((i,))))
    return c


def letter_complex(n, letter):
    ops = RAlgebraOps(n)
    if letter == "One":
        return projective(ops, 0)
    if letter == "Q":
        return projective(ops, 0, qshift=1)
    if letter == "Qinv":
        return projective(ops, 0, qshift=-1)
    if letter == "E":
        return make_E(n)
    if letter == "F":
        return make_F(n)
    raise ValueError(f"unknown letter {letter!r}")


def rho(m, nc):
    """The lifted product of two complexes over the base algebra."""
    return tensor_T(lift_to_box(tensor_f2(m, nc)))


# ---------------------------------------------------------------------------
# words and association trees


@dataclass(frozen=True)
class Word:
    letters: tuple
    association: object = None  # nested pair tree of leaf indices, or None

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if letter not in LETTERS:
                raise ValueError(f"unknown letter {letter!r}")
        if self.association is not None:
            if _leaves(self.association) != tuple(range(len(self.letters))):
                raise ValueError("association leaves do not match the letters")


def _leaves(tree):
    if isinstance(tree, int):
        return (tree,)
    left, right = tree
    return _leaves(left) + _leaves(right)


def left_fold_tree(k):
    """The association ((..(01)2)..k-1)."""
    if k == 0:
        raise ValueError("empty word")
    tree = 0
    for i in range(1, k):
        tree = (tree, i)
    return tree


def parse_association(text):
    """Parse '((..).)' into a nested pair tree with leaves numbered in order."""
    pos = 0
    counter = [0]

    def parse():
        nonlocal pos
        if pos >= len(text):
            raise ValueError("unbalanced association string")
        ch = text[pos]
        if ch == ".":
            pos += 1
            leaf = counter[0]
            counter[0] += 1
            return leaf
        if ch != "(":
            raise ValueError(f"unexpected {ch!r} in association string")
        pos += 1
        left = parse()
        right = parse()
        if pos >= len(text) or text[pos] != ")":
            raise ValueError("unbalanced association string")
        pos += 1
        return (left, right)

    tree = parse()
    if pos != len(text):
        raise ValueError("trailing characters in association string")
    return tree


def parse_word(text, assoc=None):
    """Parse a word like 'EFE' or 'q E q-1' into a Word."""
    aliases = {"E": "E", "F": "F", "1": "One", "q": "Q", "q-1": "Qinv"}
    parts = text.split() if any(c.isspace() for c in text) else list(text)
    if parts and any(p not in aliases and p not in LETTERS for p in parts):
        # allow compact 'qEq-1' style only via whitespace; else letter-by-letter
        raise ValueError(f"cannot parse word {text!r}")
    letters = tuple(aliases.get(p, p) for p in parts)
    tree = parse_association(assoc) if assoc else None
    return Word(letters, tree)


def lift_word(n, word):
    """Fold rho over the association tree (default: left fold)."""
    letters = word.letters
    tree = word.association
    if tree is None:
        tree = left_fold_tree(len(letters))

    def build(t):
        if isinstance(t, int):
            return letter_complex(n, letters[t])
        left, right = t
        return rho(build(left), build(right))

    return build(tree)


def word_letters_k0(n, word):
    return kz.iota(n, word.letters)


# ---------------------------------------------------------------------------
# structural checks


def unit_law_check(n, c):
    """rho(c, P([0-vertex])) and rho(unit, c) are relabelings of c."""
    ops = RAlgebraOps(n)
    unit = projective(ops, 0)
    failures = []
    if find_relabeling(rho(c, unit), c) is None:
        failures.append("right unit law fails")
    if find_relabeling(rho(unit, c), c) is None:
        failures.append("left unit law fails")
    return failures


def ee_shape_check(n):
    """The squared-generator complexes: two equal slices, zero differential.

    Lifting EE (resp. FF) must give summands at positions -1 and 0, each the
    sum of P([i,j]) over same-parity i > j, with no delta entries.
    Returns a list of failure strings.
    """
    failures = []
    for name, parity in (("EE", 0), ("FF", 1)):
        c = lift_word(n, Word((name[0], name[0])))
        want_verts = sorted(
            vx.from_seq((i, j))
            for i in range(parity, n + 1, 2)
            for j in range(parity, i, 2)
        )
        for pos in (-1, 0):
            got = sorted(s.vertex for s in c.summands if s.cohshift == pos)
            if got != want_verts:
                failures.append(f"{name}: slice {pos} summands differ")
        extra = [s for s in c.summands if s.cohshift not in (-1, 0)]
        if extra:
            failures.append(f"{name}: unexpected slice positions")
        if c.delta:
            failures.append(f"{name}: differential not zero")
    return failures


def association_k0_check(n, letters):
    """k0 of the lifting is independent of the association."""
    trees = _all_trees(0, len(letters))
    classes = [k0_class(lift_word(n, Word(letters, t))) for t in trees]
    return all(c == classes[0] for c in classes), len(trees)


def _all_trees(lo, hi):
    if hi - lo == 1:
        return [lo]
    out = []
    for mid in range(lo + 1, hi):
        for left in _all_trees(lo, mid):
            for right in _all_trees(mid, hi):
                out.append((left, right))
    return out
