"""Chevalley operators and the star-multiplication table of QK_s(Fl(1, n-1)).

Multiplication by a basis class O_u is stored as an N x N operator over
Z[Q1,Q2] (N = n(n-1)), kept columnwise: column v is the class O_u * O_v.
The full table is built from the two hyperplane operators H1, H2 by the
iteration

    (a) M_{n,1} = Id;  M_{k,1} = H1 . M_{k+1,1}            for k = n-1 .. 2
    (b) M_{k,p} = H2 . M_{k,p-1}                           for k > p >= 2
    (c) M_{1,2} = H1 . M_{2,1} - Q1 (Id - H?)              see step_c below
    (d) M_{p,p+1} = H1 . M_{p+1,p} + (H2 - Id) . M_{p-1,p} for 2 <= p < n
    (e) M_{k,p} = H1 . M_{k+1,p}                           for k < p, k != p-1

Step (c) subtracts the quantum part of O_h1 * O_{2,1}; the hyperplane class
appearing in that correction can be taken as h2 (matching the corrections
used to seed H1, H2) or as h1 (an alternative convention).  The two choices
agree in the classical limit but produce different tables, so
``build_table`` arbitrates them against the classical-limit and
commutativity oracles and records the outcome.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .basis import (
    SchubertIndex,
    basis_size,
    check_index,
    check_rank,
    enumerate_basis,
    h1_index,
    h2_index,
    linear_index,
)
from .errors import RankMismatch
from .kring import k_product
from .poly import (
    DEGREE_L1,
    DEGREE_L1L2,
    DEGREE_L2,
    CurveDegree,
    NovikovPolynomial,
    QKClass,
    poly_to_json,
)

Q1 = NovikovPolynomial.monomial(DEGREE_L1)
Q2 = NovikovPolynomial.monomial(DEGREE_L2)
Q1Q2 = NovikovPolynomial.monomial(DEGREE_L1L2)

CHEVALLEY_DEGREES: frozenset[CurveDegree] = frozenset({(0, 0), (1, 0), (0, 1), (1, 1)})


class Operator:
    """A linear endomorphism of the Schubert basis over Z[Q1,Q2]."""

    __slots__ = ("n", "cols")

    def __init__(self, n: int, cols: list[QKClass]):
        check_rank(n)
        if len(cols) != basis_size(n):
            raise ValueError(f"expected {basis_size(n)} columns, got {len(cols)}")
        self.n = n
        self.cols = cols

    @classmethod
    def identity(cls, n: int) -> "Operator":
        return cls(n, [QKClass.basis_element(w, n) for w in enumerate_basis(n)])

    @classmethod
    def from_columns(cls, n: int, col_of) -> "Operator":
        return cls(n, [col_of(w) for w in enumerate_basis(n)])

    def column(self, v) -> QKClass:
        return self.cols[linear_index(v, self.n)]

    def entry(self, w, v) -> NovikovPolynomial:
        return self.column(v).coefficient(w)

    def apply(self, c: QKClass) -> QKClass:
        if c.n != self.n:
            raise RankMismatch(f"operator for n={self.n} applied to class for n={c.n}")
        out = QKClass.zero(self.n)
        for w, p in c.items():
            out = out + self.cols[linear_index(w, self.n)].scaled(p)
        return out

    def compose(self, other: "Operator") -> "Operator":
        """self . other (apply other first)."""
        if other.n != self.n:
            raise RankMismatch("composing operators of different ranks")
        return Operator(self.n, [self.apply(col) for col in other.cols])

    def __add__(self, other: "Operator") -> "Operator":
        return Operator(self.n, [a + b for a, b in zip(self.cols, other.cols)])

    def __sub__(self, other: "Operator") -> "Operator":
        return Operator(self.n, [a - b for a, b in zip(self.cols, other.cols)])

    def scaled(self, factor) -> "Operator":
        return Operator(self.n, [c.scaled(factor) for c in self.cols])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Operator):
            return NotImplemented
        return self.n == other.n and self.cols == other.cols

    def degree_support(self) -> set[CurveDegree]:
        out: set[CurveDegree] = set()
        for col in self.cols:
            out |= col.degree_support()
        return out


def quantum_correction(h: str, v, n: int) -> QKClass:
    """Pure-Q part of O_h * O_v for a hyperplane class h in {"h1", "h2"}.

    Assembled from the degree-l1, l2 and l1+l2 contributions; the classical
    part is not included.
    """
    if h not in ("h1", "h2"):
        raise ValueError(f"h must be 'h1' or 'h2', got {h!r}")
    k, p = check_index(v, n)
    out = QKClass.zero(n)
    if h == "h1":
        if k == 1 and p == n:
            out = out + QKClass(n, {(n - 1, n): Q1})
        elif k == 1:
            out = out + QKClass(n, {(n, p): Q1})
        elif (k, p) == (2, 1):
            out = out + QKClass(n, {(n, 1): Q1, (n, 2): -Q1})
        if (k, p) == (1, n):
            out = out + QKClass(n, {(n, 1): Q1Q2, (n - 1, 1): -Q1Q2})
    else:
        if k == 1 and p == n:
            out = out + QKClass(n, {(1, 2): Q2})
        elif p == n:
            out = out + QKClass(n, {(k, 1): Q2})
        elif (k, p) == (n, n - 1):
            out = out + QKClass(n, {(n, 1): Q2, (n - 1, 1): -Q2})
        if (k, p) == (1, n):
            out = out + QKClass(n, {(n, 1): Q1Q2, (n, 2): -Q1Q2})
    return out


def chevalley_apply(h: str, v, n: int) -> QKClass:
    """O_h * O_v: classical product plus quantum correction."""
    hw = h1_index(n) if h == "h1" else h2_index(n)
    return k_product(hw, v, n) + quantum_correction(h, v, n)


def chevalley_operator(h: str, n: int) -> Operator:
    """Multiplication by O_h1 or O_h2 as an operator."""
    return Operator.from_columns(n, lambda v: chevalley_apply(h, v, n))


@dataclass
class MultiplicationTable:
    """All star-multiplication operators M_u in basis order."""

    n: int
    ops: list[Operator]
    step_c_variant: str
    arbitration: dict = field(default_factory=dict)

    def matrix(self, u) -> Operator:
        return self.ops[linear_index(u, self.n)]

    def product(self, u, v) -> QKClass:
        return self.matrix(u).column(v)


def _build_with_variant(n: int, variant: str) -> list[Operator]:
    N = basis_size(n)
    h1 = chevalley_operator("h1", n)
    h2 = chevalley_operator("h2", n)
    ident = Operator.identity(n)
    ops: list[Operator | None] = [None] * N

    def put(i, j, op):
        ops[linear_index((i, j), n)] = op

    def get(i, j) -> Operator:
        op = ops[linear_index((i, j), n)]
        assert op is not None, f"table order violated at ({i},{j})"
        return op

    put(n, 1, ident)
    for k in range(n - 1, 1, -1):
        put(k, 1, h1.compose(get(k + 1, 1)))
    for k in range(2, n + 1):
        for p in range(2, k):
            put(k, p, h2.compose(get(k, p - 1)))
    j = (h2 if variant == "h2" else h1) - ident
    put(1, 2, h1.compose(get(2, 1)) + j.scaled(Q1))
    for p in range(2, n):
        put(p, p + 1, h1.compose(get(p + 1, p)) + (h2 - ident).compose(get(p - 1, p)))
    for p in range(3, n + 1):
        for k in range(p - 2, 0, -1):
            put(k, p, h1.compose(get(k + 1, p)))
    assert all(op is not None for op in ops)
    return ops


def _classical_limit_ok(n: int, ops: list[Operator]) -> bool:
    basis = enumerate_basis(n)
    for u in basis:
        m = ops[linear_index(u, n)]
        for v in basis:
            if m.column(v).classical_limit() != k_product(u, v, n):
                return False
    return True


def _commutative_ok(n: int, ops: list[Operator]) -> bool:
    basis = enumerate_basis(n)
    for a, u in enumerate(basis):
        for v in basis[a + 1 :]:
            if ops[linear_index(u, n)].column(v) != ops[linear_index(v, n)].column(u):
                return False
    return True


def build_table(n: int, step_c: str = "auto") -> MultiplicationTable:
    """Build every multiplication operator M_u.

    ``step_c`` picks the hyperplane class subtracted in the M_{1,2} step:
    "h2" (matching the hyperplane-product corrections), "h1" (the variant
    stated alongside the iteration), or "auto" to test both against the
    classical-limit and commutativity oracles and keep the survivor.
    """
    check_rank(n)
    if step_c in ("h1", "h2"):
        return MultiplicationTable(n, _build_with_variant(n, step_c), step_c)
    if step_c != "auto":
        raise ValueError(f"step_c must be 'h1', 'h2' or 'auto', got {step_c!r}")

    outcomes: dict[str, dict] = {}
    built: dict[str, list[Operator]] = {}
    for variant in ("h2", "h1"):
        ops = _build_with_variant(n, variant)
        built[variant] = ops
        outcomes[variant] = {
            "classical_limit_ok": _classical_limit_ok(n, ops),
            "commutative_ok": _commutative_ok(n, ops),
        }
    chosen = None
    for variant in ("h2", "h1"):
        o = outcomes[variant]
        if o["classical_limit_ok"] and o["commutative_ok"]:
            chosen = variant
            break
    if chosen is None:  # pragma: no cover - both variants failing is unreachable
        raise RuntimeError(f"no step-c variant passes the oracles: {outcomes}")
    return MultiplicationTable(
        n,
        built[chosen],
        chosen,
        arbitration={"chosen": chosen, "outcomes": outcomes},
    )


def qk_product(u, v, n: int, table: MultiplicationTable) -> QKClass:
    """O_u * O_v read from a prebuilt table."""
    if table.n != n:
        raise RankMismatch(f"table built for n={table.n}, asked for n={n}")
    return table.product(check_index(u, n), check_index(v, n))


def degree_bound_check(table: MultiplicationTable):
    """Check the hyperplane operators stay within Q-support {1, Q1, Q2, Q1Q2}.

    Also reports the maximal (d1, d2) over the whole table.
    """
    from .verify import VerificationReport

    n = table.n
    counterexamples = []
    for h, hw in (("h1", h1_index(n)), ("h2", h2_index(n))):
        m = table.matrix(hw)
        for v in enumerate_basis(n):
            bad = m.column(v).degree_support() - CHEVALLEY_DEGREES
            for deg in sorted(bad):
                counterexamples.append(
                    {"h": h, "v": [v.i, v.j], "d1": deg[0], "d2": deg[1]}
                )
    max_deg = (0, 0)
    for op in table.ops:
        for deg in op.degree_support():
            max_deg = max(max_deg, deg)
    return VerificationReport(
        check="degree",
        n=n,
        passed=not counterexamples,
        counterexamples=counterexamples,
        details={"max_degree": {"d1": max_deg[0], "d2": max_deg[1]}},
    )


def table_entries(table: MultiplicationTable):
    """Yield (u, v, w, poly) for every nonzero structure constant, sorted."""
    basis = enumerate_basis(table.n)
    for u in basis:
        m = table.matrix(u)
        for v in basis:
            for w, p in m.column(v).items():
                yield u, v, w, p


def table_to_json(table: MultiplicationTable) -> dict:
    return {
        "n": table.n,
        "entries": [
            {
                "u": [u.i, u.j],
                "v": [v.i, v.j],
                "w": [w.i, w.j],
                "poly": poly_to_json(p),
            }
            for u, v, w, p in table_entries(table)
        ],
    }


def table_from_json(obj) -> MultiplicationTable:
    """Rebuild a table from the golden-file layout (no re-arbitration)."""
    from .poly import poly_from_json

    n = int(obj["n"])
    N = basis_size(n)
    acc: list[list[dict]] = [[{} for _ in range(N)] for _ in range(N)]
    for e in obj["entries"]:
        iu = linear_index(tuple(e["u"]), n)
        iv = linear_index(tuple(e["v"]), n)
        acc[iu][iv][SchubertIndex(*e["w"])] = poly_from_json(e["poly"])
    ops = [Operator(n, [QKClass(n, col) for col in cols]) for cols in acc]
    return MultiplicationTable(n, ops, step_c_variant="loaded")
