"""Exact Laurent polynomial arithmetic over the integers.

Two flavours: one variable q (LaurentZ) and two variables q, h (LaurentZH),
both stored as sparse maps from exponents to nonzero integer coefficients.
Python integers are arbitrary precision, so no overflow handling is needed.
"""

from __future__ import annotations


def _trim(coeffs):
    return {e: c for e, c in coeffs.items() if c != 0}


class LaurentZ:
    """Laurent polynomial in q with integer coefficients, dict {exp: coeff}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = _trim(dict(coeffs or {}))

    @classmethod
    def unit(cls):
        return cls({0: 1})

    @classmethod
    def q_power(cls, e, coeff=1):
        return cls({e: coeff})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentZ({0: other})
        return isinstance(other, LaurentZ) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentZ(out)

    def __neg__(self):
        return LaurentZ({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = LaurentZ({0: other})
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentZ(out)

    __rmul__ = __mul__

    def items(self):
        return sorted(self.coeffs.items())

    def to_json(self):
        return [[e, c] for e, c in self.items()]

    @classmethod
    def from_json(cls, data):
        return cls({int(e): int(c) for e, c in data})

    def __repr__(self):
        return f"LaurentZ({dict(self.items())})"

    def __str__(self):
        return format_laurent(self.items(), ("q",))


class LaurentZH:
    """Laurent polynomial in q and h, dict {(qexp, hexp): coeff}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = _trim(dict(coeffs or {}))

    @classmethod
    def unit(cls):
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, qexp, hexp, coeff=1):
        return cls({(qexp, hexp): coeff})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentZH({(0, 0): other})
        return isinstance(other, LaurentZH) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentZH(out)

    def __neg__(self):
        return LaurentZH({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = LaurentZH({(0, 0): other})
        out = {}
        for (q1, h1), c1 in self.coeffs.items():
            for (q2, h2), c2 in other.coeffs.items():
                e = (q1 + q2, h1 + h2)
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentZH(out)

    __rmul__ = __mul__

    def items(self):
        return sorted(self.coeffs.items())

    def specialize_h(self, value=-1):
        """Substitute h := value (a ring map); h^-1 goes to value^-1 = value
        since only value = +-1 is meaningful here."""
        if value not in (1, -1):
            raise ValueError("h can only be specialized at a unit of Z")
        out = {}
        for (qe, he), c in self.coeffs.items():
            out[qe] = out.get(qe, 0) + c * (value ** (he % 2 if value == -1 else 0))
        return LaurentZ(out)

    def to_json(self):
        return [[qe, he, c] for (qe, he), c in self.items()]

    @classmethod
    def from_json(cls, data):
        return cls({(int(qe), int(he)): int(c) for qe, he, c in data})

    def __repr__(self):
        return f"LaurentZH({dict(self.items())})"

    def __str__(self):
        return format_laurent(
            [((qe, he), c) for (qe, he), c in self.items()], ("q", "h")
        )


def format_laurent(items, names):
    """Render sorted (exponents, coeff) pairs as e.g. '-q^2*h + 3'."""
    if not items:
        return "0"
    parts = []
    for exps, coeff in items:
        if not isinstance(exps, tuple):
            exps = (exps,)
        factors = []
        for name, e in zip(names, exps):
            if e == 0:
                continue
            factors.append(name if e == 1 else f"{name}^{e}")
        mag = abs(coeff)
        if mag != 1 or not factors:
            factors.insert(0, str(mag))
        term = "*".join(factors)
        if coeff < 0:
            term = "-" + term
        parts.append(term)
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out
