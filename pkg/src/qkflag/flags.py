"""Balanced splitting types for flags of bundles on P^1, and stabilization bounds.

An (I, d)-admissible set of sequences records the splitting type of a flag
of vector bundles on the projective line: row k is a nondecreasing sequence
of length i_k, dominated entrywise by row k-1, with row sum d_k.  The
balanced set is the unique admissible set minimizing the total pairwise
spread; it is produced directly by an iterative construction and checked
here against exhaustive search.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import BoundExceeded, InvalidIndex, NonUniqueMinimizer, ShapeMismatch


@dataclass(frozen=True)
class FlagShape:
    """Strictly increasing ranks 0 < i_1 < ... < i_m < n."""

    ranks: tuple[int, ...]
    n: int

    def __post_init__(self):
        r = tuple(self.ranks)
        object.__setattr__(self, "ranks", r)
        if not r:
            raise ShapeMismatch("flag shape needs at least one rank")
        if any(b <= a for a, b in zip((0,) + r, r)):
            raise ShapeMismatch(f"ranks must be strictly increasing and positive: {r}")
        if r[-1] >= self.n:
            raise ShapeMismatch(f"largest rank {r[-1]} must be < n={self.n}")

    @property
    def m(self) -> int:
        return len(self.ranks)


@dataclass(frozen=True)
class AdmissibleSequenceSet:
    """Rows a_{k,.} (lengths i_k) together with the degree vector d."""

    sequences: tuple[tuple[int, ...], ...]
    degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "sequences", tuple(tuple(row) for row in self.sequences)
        )
        object.__setattr__(self, "degrees", tuple(self.degrees))


def is_admissible(a: AdmissibleSequenceSet, shape: FlagShape) -> bool:
    """Conditions: rows nondecreasing and nonnegative, dominated by the
    previous row on shared positions, with prescribed row sums."""
    rows = a.sequences
    if len(rows) != shape.m or len(a.degrees) != shape.m:
        raise ShapeMismatch(
            f"{len(rows)} rows / {len(a.degrees)} degrees for an {shape.m}-step shape"
        )
    for k, row in enumerate(rows):
        if len(row) != shape.ranks[k]:
            raise ShapeMismatch(
                f"row {k + 1} has length {len(row)}, expected {shape.ranks[k]}"
            )
    for k, row in enumerate(rows):
        if any(x < 0 for x in row):
            return False
        if any(x > y for x, y in zip(row, row[1:])):
            return False
        if sum(row) != a.degrees[k]:
            return False
        if k > 0:
            prev = rows[k - 1]
            if any(row[j] > prev[j] for j in range(len(prev))):
                return False
    return True


def spread(a: AdmissibleSequenceSet) -> int:
    """Sum over rows of all pairwise gaps a_{k,p} - a_{k,l}, l < p."""
    total = 0
    for row in a.sequences:
        for l, p in combinations(range(len(row)), 2):
            total += row[p] - row[l]
    return total


def _fill(total: int, slots: int) -> tuple[int, ...]:
    """Nondecreasing slots summing to total, values in {q-1, q}, small first."""
    if slots == 0:
        if total:
            raise ValueError("cannot place a nonzero sum in zero slots")
        return ()
    q = -(-total // slots)
    low = slots * q - total  # number of entries equal to q-1
    return (q - 1,) * low + (q,) * (slots - low)


def balanced_construct(shape: FlagShape, degrees) -> AdmissibleSequenceSet:
    """The balanced (spread-minimizing) admissible set, built row by row.

    Row 1 spreads d_1 as evenly as possible.  For k > 1 the longest prefix
    of row k-1 whose entries fit under the row average d_k/i_k is carried
    over verbatim, the carry is then extended while further entries fit
    under the residual average, and the remaining slots are filled evenly
    with the leftover degree.
    """
    degrees = tuple(degrees)
    if len(degrees) != shape.m:
        raise ShapeMismatch(f"{len(degrees)} degrees for an {shape.m}-step shape")
    if any(d < 0 for d in degrees):
        raise ValueError(f"degrees must be nonnegative: {degrees}")

    rows: list[tuple[int, ...]] = [_fill(degrees[0], shape.ranks[0])]
    for k in range(1, shape.m):
        prev = rows[-1]
        ik = shape.ranks[k]
        dk = degrees[k]
        r = 0
        for j, val in enumerate(prev, start=1):
            if val * ik <= dk:
                r = j
            else:
                break
        # enlarge the carried prefix while some later previous-row entry
        # fits under the residual average; r strictly grows, so i_k passes
        # suffice (the cap only guards against an implementation error)
        for _ in range(ik):
            carried = sum(prev[:r])
            new_r = r
            for j in range(r + 1, len(prev) + 1):
                if prev[j - 1] * (ik - r) <= dk - carried:
                    new_r = j
                else:
                    break
            if new_r == r:
                break
            r = new_r
        carried = sum(prev[:r])
        row = prev[:r] + _fill(dk - carried, ik - r)
        rows.append(row)

    out = AdmissibleSequenceSet(tuple(rows), degrees)
    if not is_admissible(out, shape):  # pragma: no cover - construction invariant
        raise AssertionError(f"construction produced a non-admissible set: {out}")
    return out


def _admissible_rows(length: int, total: int, cap_row: tuple[int, ...] | None):
    """All nondecreasing nonnegative rows of given length and sum, dominated
    entrywise by cap_row on its positions."""

    def rec(pos: int, minimum: int, remaining: int, acc: list[int]):
        if pos == length:
            if remaining == 0:
                yield tuple(acc)
            return
        cap = remaining
        if cap_row is not None and pos < len(cap_row):
            cap = min(cap, cap_row[pos])
        for val in range(minimum, cap + 1):
            # the suffix is nondecreasing, so it needs at least val per slot
            if val * (length - pos) > remaining:
                break
            acc.append(val)
            yield from rec(pos + 1, val, remaining - val, acc)
            acc.pop()

    yield from rec(0, 0, total, [])


def enumerate_admissible(shape: FlagShape, degrees) -> list[AdmissibleSequenceSet]:
    """Every (I, d)-admissible set of sequences, in lexicographic order."""
    degrees = tuple(degrees)
    if len(degrees) != shape.m:
        raise ShapeMismatch(f"{len(degrees)} degrees for an {shape.m}-step shape")
    out: list[AdmissibleSequenceSet] = []

    def rec(k: int, rows: list[tuple[int, ...]]):
        if k == shape.m:
            out.append(AdmissibleSequenceSet(tuple(rows), degrees))
            return
        cap = rows[-1] if rows else None
        for row in _admissible_rows(shape.ranks[k], degrees[k], cap):
            rows.append(row)
            rec(k + 1, rows)
            rows.pop()

    rec(0, [])
    return out


def brute_force_balanced(shape: FlagShape, degrees, bound: int = 12) -> AdmissibleSequenceSet:
    """Exhaustive spread-minimizer; raises if the minimizer is not unique."""
    degrees = tuple(degrees)
    if sum(degrees) > bound:
        raise BoundExceeded(f"sum of degrees {sum(degrees)} exceeds enumeration bound {bound}")
    candidates = enumerate_admissible(shape, degrees)
    if not candidates:
        raise AssertionError(f"no admissible set for {shape} and {degrees}")
    best = min(spread(a) for a in candidates)
    minimizers = [a for a in candidates if spread(a) == best]
    if len(minimizers) > 1:
        raise NonUniqueMinimizer(
            f"{len(minimizers)} admissible sets share minimal spread {best}: {minimizers[:2]}..."
        )
    return minimizers[0]


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def splitting_predicate(shape: FlagShape, degrees, k: int) -> bool:
    """True when d_k >= i_k * ceil((d_p - d_{p-1}) / (i_p - i_{p-1})) for all p < k.

    Under this condition the balanced set carries row k-1 over verbatim:
    a_{k,j} = a_{k-1,j} for j <= i_{k-1}.
    """
    degrees = tuple(degrees)
    if len(degrees) != shape.m:
        raise ShapeMismatch(f"{len(degrees)} degrees for an {shape.m}-step shape")
    if not 1 < k <= shape.m:
        raise InvalidIndex(f"k must satisfy 1 < k <= {shape.m}, got {k}")
    ranks = (0,) + shape.ranks
    degs = (0,) + degrees
    ik = shape.ranks[k - 1]
    return all(
        degs[k] >= ik * _ceil_div(degs[p] - degs[p - 1], ranks[p] - ranks[p - 1])
        for p in range(1, k)
    )


@dataclass(frozen=True)
class StabilizationInput:
    """Numeric data for the correlator-stabilization bounds.

    Ranks n_1 < ... < n_m < n of the flag, degree vector d, the forgotten
    step k, and the number of marked points r.  Boundary conventions:
    d_0 = d_{m+1} = 0, n_0 = 0, n_{m+1} = n.
    """

    ranks: tuple[int, ...]
    n: int
    degrees: tuple[int, ...]
    k: int
    r: int

    def __post_init__(self):
        object.__setattr__(self, "ranks", tuple(self.ranks))
        object.__setattr__(self, "degrees", tuple(self.degrees))
        shape = FlagShape(self.ranks, self.n)  # validates monotonicity
        if len(self.degrees) != shape.m:
            raise ShapeMismatch(
                f"{len(self.degrees)} degrees for an {shape.m}-step shape"
            )
        if not 1 <= self.k <= shape.m:
            raise ShapeMismatch(f"k must lie in [1, {shape.m}], got {self.k}")
        if self.r < 0:
            raise ShapeMismatch(f"r must be nonnegative, got {self.r}")


def theorem_conditions(s: StabilizationInput) -> bool:
    """Sufficient numeric bounds for degree-d correlators to stabilize.

    Conjunction of, with k = s.k and the boundary conventions above:
      1. d_k >= n_k ceil((d_p - d_{p-1}) / (n_p - n_{p-1})) for all p < k;
      2. d_{k-1} <= floor(d_{k+1} / n_{k+1});
      3. d_k >= r (n_k - n_{k-1}) + d_{k-1}
              + (n_k - n_{k-1}) (floor((d_{k+1} - d_{k-1}) / (n_{k+1} - n_{k-1})) + 1).
    """
    ranks = (0,) + s.ranks + (s.n,)
    degs = (0,) + s.degrees + (0,)
    k = s.k
    nk = ranks[k]
    cond1 = all(
        degs[k] >= nk * _ceil_div(degs[p] - degs[p - 1], ranks[p] - ranks[p - 1])
        for p in range(1, k)
    )
    cond2 = degs[k - 1] <= degs[k + 1] // ranks[k + 1]
    step = nk - ranks[k - 1]
    cond3 = degs[k] >= (
        s.r * step
        + degs[k - 1]
        + step * ((degs[k + 1] - degs[k - 1]) // (ranks[k + 1] - ranks[k - 1]) + 1)
    )
    return cond1 and cond2 and cond3


def vandermonde_sum(n: int, m: int, big_n: int) -> int:
    """Sum of C(n,k) C(m,p) over k+p = big_n, by direct enumeration.

    Equals C(n+m, big_n); the closed form is asserted in tests, not here.
    """
    if n < 0 or m < 0 or big_n < 0:
        raise ValueError("arguments must be nonnegative")
    return sum(
        comb(n, k) * comb(m, big_n - k)
        for k in range(max(0, big_n - m), min(n, big_n) + 1)
    )


def alternating_decomposition_sum(d: int, delta: int, d0: int, delta0: int, cap: int = 64) -> int:
    """Sum of (-1)^r over ordered decompositions (d, delta) = (d0, delta0)
    + sum of r nonzero pairs.

    Vanishes whenever delta0 < delta - 1 or d0 < d - 1.
    """
    for v in (d, delta, d0, delta0):
        if v < 0:
            raise ValueError("arguments must be nonnegative")
    if d0 > d or delta0 > delta:
        return 0
    if d + delta > cap:
        raise BoundExceeded(f"d + delta = {d + delta} exceeds enumeration cap {cap}")
    memo: dict[tuple[int, int], int] = {}

    def g(x: int, y: int) -> int:
        # signed count of ordered tuples of nonzero pairs summing to (x, y)
        if (x, y) == (0, 0):
            return 1
        if (x, y) in memo:
            return memo[(x, y)]
        total = 0
        for a in range(x + 1):
            for b in range(y + 1):
                if (a, b) == (0, 0):
                    continue
                total -= g(x - a, y - b)
        memo[(x, y)] = total
        return total

    return g(d - d0, delta - delta0)
