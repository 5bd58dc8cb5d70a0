"""Exact arithmetic in Z[Q1,Q2] and sparse combinations of Schubert classes.

Coefficients are Python ints, so arithmetic is arbitrary precision.  Both
containers keep a canonical form: zero coefficients are never stored, and
iteration order is fixed (exponents sorted lexicographically, classes sorted
by basis position) so serialized output is bit-stable.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .basis import SchubertIndex, check_index, check_rank, linear_index
from .errors import RankMismatch

CurveDegree = tuple[int, int]

DEGREE_ZERO: CurveDegree = (0, 0)
DEGREE_L1: CurveDegree = (1, 0)
DEGREE_L2: CurveDegree = (0, 1)
DEGREE_L1L2: CurveDegree = (1, 1)


def c1_pairing(deg: CurveDegree, n: int) -> int:
    """Integral of the first Chern class of the tangent bundle over d1*l1 + d2*l2."""
    d1, d2 = deg
    return (d1 + d2) * (n - 1)


class NovikovPolynomial:
    """Finitely supported map (d1, d2) -> nonzero int, i.e. an element of Z[Q1,Q2]."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[CurveDegree, int] | None = None):
        clean: dict[CurveDegree, int] = {}
        if terms:
            for (d1, d2), c in terms.items():
                if d1 < 0 or d2 < 0:
                    raise ValueError(f"negative curve degree ({d1},{d2})")
                if c:
                    clean[(d1, d2)] = clean.get((d1, d2), 0) + c
            clean = {d: c for d, c in clean.items() if c}
        self._terms = clean

    @classmethod
    def zero(cls) -> "NovikovPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "NovikovPolynomial":
        return cls({DEGREE_ZERO: 1})

    @classmethod
    def monomial(cls, deg: CurveDegree, coeff: int = 1) -> "NovikovPolynomial":
        return cls({deg: coeff})

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, deg: CurveDegree) -> int:
        return self._terms.get(deg, 0)

    def constant_term(self) -> int:
        return self._terms.get(DEGREE_ZERO, 0)

    def terms(self) -> Iterator[tuple[CurveDegree, int]]:
        """Terms in (d1, d2)-lexicographic order."""
        for deg in sorted(self._terms):
            yield deg, self._terms[deg]

    def degree_support(self) -> set[CurveDegree]:
        return set(self._terms)

    def __add__(self, other) -> "NovikovPolynomial":
        other = _as_poly(other)
        merged = dict(self._terms)
        for deg, c in other._terms.items():
            merged[deg] = merged.get(deg, 0) + c
        return NovikovPolynomial(merged)

    def __radd__(self, other) -> "NovikovPolynomial":
        return self.__add__(other)

    def __sub__(self, other) -> "NovikovPolynomial":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "NovikovPolynomial":
        return _as_poly(other) + (-self)

    def __neg__(self) -> "NovikovPolynomial":
        return NovikovPolynomial({deg: -c for deg, c in self._terms.items()})

    def __mul__(self, other) -> "NovikovPolynomial":
        other = _as_poly(other)
        out: dict[CurveDegree, int] = {}
        for (a1, a2), ca in self._terms.items():
            for (b1, b2), cb in other._terms.items():
                deg = (a1 + b1, a2 + b2)
                out[deg] = out.get(deg, 0) + ca * cb
        return NovikovPolynomial(out)

    def __rmul__(self, other) -> "NovikovPolynomial":
        return self.__mul__(other)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = _as_poly(other)
        if not isinstance(other, NovikovPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._terms.items())))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"NovikovPolynomial({dict(sorted(self._terms.items()))!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for deg, c in self.terms():
            mono = monomial_str(deg)
            if mono:
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            else:
                body = str(abs(c))
            parts.append(("- " if c < 0 else "+ " if parts else "") + body)
        return " ".join(parts)


def _as_poly(x) -> NovikovPolynomial:
    if isinstance(x, NovikovPolynomial):
        return x
    if isinstance(x, int):
        return NovikovPolynomial({DEGREE_ZERO: x}) if x else NovikovPolynomial()
    raise TypeError(f"cannot coerce {type(x).__name__} to NovikovPolynomial")


def monomial_str(deg: CurveDegree) -> str:
    """Render (d1, d2) as Q1^d1 Q2^d2; empty string for (0, 0)."""
    d1, d2 = deg
    part1 = "" if d1 == 0 else "Q1" if d1 == 1 else f"Q1^{d1}"
    part2 = "" if d2 == 0 else "Q2" if d2 == 1 else f"Q2^{d2}"
    return part1 + part2


def poly_to_json(p: NovikovPolynomial) -> list[dict]:
    """[{"d1": ..., "d2": ..., "coeff": ...}, ...] in degree order."""
    return [{"d1": d1, "d2": d2, "coeff": c} for (d1, d2), c in p.terms()]


def poly_from_json(items: Iterable[Mapping]) -> NovikovPolynomial:
    return NovikovPolynomial({(int(t["d1"]), int(t["d2"])): int(t["coeff"]) for t in items})


class QKClass:
    """Finitely supported map SchubertIndex -> NovikovPolynomial.

    An element of the small quantum K-ring for a fixed n.  A classical
    K-class is the special case where every polynomial is constant.
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping | None = None):
        check_rank(n)
        self.n = n
        clean: dict[SchubertIndex, NovikovPolynomial] = {}
        if terms:
            for w, p in terms.items():
                w = check_index(w, n)
                p = _as_poly(p)
                if w in clean:
                    p = clean[w] + p
                if p.is_zero:
                    clean.pop(w, None)
                else:
                    clean[w] = p
        self._terms = clean

    @classmethod
    def zero(cls, n: int) -> "QKClass":
        return cls(n)

    @classmethod
    def basis_element(cls, w, n: int, poly=1) -> "QKClass":
        return cls(n, {check_index(w, n): poly})

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, w) -> NovikovPolynomial:
        return self._terms.get(SchubertIndex(*w), NovikovPolynomial.zero())

    def support(self) -> list[SchubertIndex]:
        return [w for w, _ in self.items()]

    def items(self) -> list[tuple[SchubertIndex, NovikovPolynomial]]:
        """(class, polynomial) pairs in basis order."""
        return sorted(self._terms.items(), key=lambda kv: linear_index(kv[0], self.n))

    def _check_same_rank(self, other: "QKClass") -> None:
        if self.n != other.n:
            raise RankMismatch(f"mixing classes for n={self.n} and n={other.n}")

    def __add__(self, other: "QKClass") -> "QKClass":
        self._check_same_rank(other)
        merged: dict[SchubertIndex, NovikovPolynomial] = dict(self._terms)
        for w, p in other._terms.items():
            merged[w] = merged.get(w, NovikovPolynomial.zero()) + p
        return QKClass(self.n, merged)

    def __sub__(self, other: "QKClass") -> "QKClass":
        return self + (-other)

    def __neg__(self) -> "QKClass":
        return QKClass(self.n, {w: -p for w, p in self._terms.items()})

    def scaled(self, factor) -> "QKClass":
        """Multiply every coefficient by an integer or Novikov polynomial."""
        factor = _as_poly(factor)
        return QKClass(self.n, {w: p * factor for w, p in self._terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, QKClass):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n, tuple(sorted(self._terms.items()))))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def classical_limit(self) -> "QKClass":
        """Keep the Q-degree (0,0) part of every coefficient."""
        return QKClass(self.n, {w: p.constant_term() for w, p in self._terms.items()})

    def degree_part(self, deg: CurveDegree) -> "QKClass":
        """The classical coefficient class of Q^deg."""
        return QKClass(self.n, {w: p.coefficient(deg) for w, p in self._terms.items()})

    def degree_support(self) -> set[CurveDegree]:
        out: set[CurveDegree] = set()
        for p in self._terms.values():
            out |= p.degree_support()
        return out

    def is_classical(self) -> bool:
        return self.degree_support() <= {DEGREE_ZERO}

    def __repr__(self) -> str:
        return f"QKClass(n={self.n}, {dict(self.items())!r})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return " ".join(
            ("- " if c < 0 else "+ " if k else "")
            + _term_str(abs(c), deg, w)
            for k, (w, deg, c) in enumerate(self.sorted_monomials())
        )

    def sorted_monomials(self) -> list[tuple[SchubertIndex, CurveDegree, int]]:
        """Flat (class, degree, coeff) triples: degree asc, positives first, basis order."""
        flat = [
            (w, deg, c)
            for w, p in self._terms.items()
            for deg, c in p.terms()
        ]
        flat.sort(key=lambda t: (t[1], 0 if t[2] > 0 else 1, linear_index(t[0], self.n)))
        return flat


def _term_str(mag: int, deg: CurveDegree, w: SchubertIndex) -> str:
    mono = monomial_str(deg)
    head = "" if mag == 1 else f"{mag}*"
    return head + (mono + "*" if mono else "") + w.label()


def zero_class(n: int) -> QKClass:
    return QKClass.zero(n)


def class_to_json(c: QKClass) -> dict:
    return {
        "n": c.n,
        "terms": [{"w": [w.i, w.j], "poly": poly_to_json(p)} for w, p in c.items()],
    }


def class_from_json(obj: Mapping) -> QKClass:
    n = int(obj["n"])
    terms = {
        (int(t["w"][0]), int(t["w"][1])): poly_from_json(t["poly"])
        for t in obj["terms"]
    }
    return QKClass(n, terms)
