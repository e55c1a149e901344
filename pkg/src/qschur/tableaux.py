"""Young diagram and tableau combinatorics.

Canonical basis order, used for every matrix in the package:

* partitions of n in descending lexicographic order;
* tableaux of one shape in lexicographic order of their row reading word
  (rows concatenated top to bottom).

Rows and columns are 1-based wherever they appear in the public API.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterator, NamedTuple, Sequence


class Partition(tuple):
    """A weakly decreasing tuple of positive integers; () is the empty partition."""

    def __new__(cls, parts: Sequence[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
            raise ValueError(f"partition must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def row(self, j: int) -> int:
        """Length of row j (1-based); 0 beyond the last row."""
        return self[j - 1] if 1 <= j <= len(self) else 0

    def contains(self, other: Sequence[int]) -> bool:
        return all(self.row(j) >= p for j, p in enumerate(other, start=1))

    def addable_rows(self, max_rows: int | None = None) -> list[int]:
        """Rows r such that adding a box at the end of row r gives a partition."""
        rows = [r for r in range(1, len(self) + 2) if r == 1 or self.row(r - 1) > self.row(r)]
        if max_rows is not None:
            rows = [r for r in rows if r <= max_rows]
        return rows

    def add_box(self, r: int) -> Partition:
        parts = list(self) + [0]
        parts[r - 1] += 1
        return Partition(parts)

    def remove_box(self, r: int) -> Partition:
        parts = list(self)
        parts[r - 1] -= 1
        return Partition(parts)

    def to_text(self) -> str:
        return "[" + ",".join(str(p) for p in self) + "]"

    @classmethod
    def from_text(cls, text: str) -> Partition:
        s = text.strip().strip("[]() ")
        if not s:
            return cls(())
        return cls(int(x) for x in s.split(","))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


class Box(NamedTuple):
    row: int
    col: int


class SkewShape(NamedTuple):
    outer: Partition
    inner: Partition

    def boxes(self) -> list[Box]:
        return [
            Box(r, c)
            for r in range(1, len(self.outer) + 1)
            for c in range(self.inner.row(r) + 1, self.outer.row(r) + 1)
        ]


def skew(outer: Sequence[int], inner: Sequence[int]) -> SkewShape:
    outer, inner = Partition(outer), Partition(inner)
    if not outer.contains(inner):
        raise ValueError(f"{inner} is not contained in {outer}")
    return SkewShape(outer, inner)


def covers(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """True when lam is mu plus exactly one box."""
    mu, lam = Partition(mu), Partition(lam)
    return lam.contains(mu) and lam.size == mu.size + 1


def is_horizontal_strip(s: SkewShape) -> bool:
    """At most one box in each column; equivalently the rows interlace."""
    outer, inner = s
    return all(inner.row(r) >= outer.row(r + 1) for r in range(1, len(outer) + 1))


def residue(b: Box) -> int:
    return b.col - b.row


def axial_distance(b: Box, b2: Box) -> int:
    return residue(b) - residue(b2)


def row_axial_distances(shape: SkewShape | Sequence[int]) -> dict[tuple[int, int], int]:
    """a_ij (i < j) between the last boxes of nonempty rows i and j of a shape."""
    if isinstance(shape, SkewShape):
        outer, inner = shape
        rows = [r for r in range(1, len(outer) + 1) if outer.row(r) > inner.row(r)]
    else:
        outer = Partition(shape)
        rows = list(range(1, len(outer) + 1))
    last = {r: Box(r, outer.row(r)) for r in rows}
    return {(i, j): axial_distance(last[i], last[j]) for i in rows for j in rows if i < j}


class Tableau(tuple):
    """A filling of a Young diagram, stored row-major as a tuple of row tuples."""

    def __new__(cls, rows: Sequence[Sequence[int]] = ()):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        rows = tuple(r for r in rows if r)
        self = super().__new__(cls, rows)
        Partition(len(r) for r in rows)
        self._validate()
        return self

    def _validate(self) -> None:
        pass

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self)

    def entries(self) -> list[int]:
        return [x for r in self for x in r]

    def reading_word(self) -> tuple[int, ...]:
        return tuple(self.entries())

    def max_entry(self) -> int:
        return max(self.entries(), default=0)

    def box_of(self, value: int) -> Box:
        """Position of the (unique) box holding value; for standard tableaux."""
        for r, row in enumerate(self, start=1):
            for c, x in enumerate(row, start=1):
                if x == value:
                    return Box(r, c)
        raise KeyError(value)

    def to_text(self) -> str:
        return "/".join(",".join(str(x) for x in r) for r in self)

    @classmethod
    def from_text(cls, text: str):
        s = text.strip()
        if not s:
            return cls(())
        return cls(tuple(int(x) for x in row.split(",")) for row in s.split("/"))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.to_text()!r})"


class SemiStandardTableau(Tableau):
    """Rows weakly increase, columns strictly increase, entries positive."""

    def _validate(self) -> None:
        if not is_semistandard(self):
            raise ValueError(f"not a semistandard tableau: {tuple(self)}")

    def restrict(self, k: int) -> SemiStandardTableau:
        """t^(k): drop every box holding a letter larger than k."""
        return SemiStandardTableau(tuple(x for x in r if x <= k) for r in self)

    def content_count(self, i: int) -> int:
        return sum(r.count(i) for r in self)

    def shape_at(self, k: int) -> Partition:
        return Partition(sum(1 for x in r if x <= k) for r in self)

    def strip(self, k: int) -> SkewShape:
        """The horizontal strip filled by the letter k."""
        return SkewShape(self.shape_at(k), self.shape_at(k - 1))


class StandardTableau(Tableau):
    """Entries 1..n, each once, increasing along rows and down columns."""

    def _validate(self) -> None:
        if sorted(self.entries()) != list(range(1, self.size + 1)) or not is_semistandard(self):
            raise ValueError(f"not a standard tableau: {tuple(self)}")


def is_semistandard(rows: Sequence[Sequence[int]]) -> bool:
    for r, row in enumerate(rows):
        if any(x < 1 for x in row):
            return False
        if any(row[c] > row[c + 1] for c in range(len(row) - 1)):
            return False
        if r > 0:
            above = rows[r - 1]
            if len(row) > len(above) or any(above[c] >= row[c] for c in range(len(row))):
                return False
    return True


def restrict(t: SemiStandardTableau, k: int) -> SemiStandardTableau:
    return t.restrict(k)


def content_count(t: SemiStandardTableau, i: int) -> int:
    return t.content_count(i)


@lru_cache(maxsize=None)
def partitions(n: int, max_length: int | None = None) -> tuple[Partition, ...]:
    """Partitions of n (optionally with at most max_length rows), descending lex."""

    def rec(m: int, cap: int) -> Iterator[tuple[int, ...]]:
        if m == 0:
            yield ()
            return
        for p in range(min(m, cap), 0, -1):
            for rest in rec(m - p, p):
                yield (p,) + rest

    return tuple(
        Partition(p) for p in rec(n, n) if max_length is None or len(p) <= max_length
    )


@lru_cache(maxsize=None)
def _ssyt(shape: Partition, d: int) -> tuple[SemiStandardTableau, ...]:
    # Build level by level: t^(k) grows by a horizontal strip of k's.
    out: list[tuple[tuple[int, ...], ...]] = []

    def strips(lower: Partition, k: int):
        # all partitions nu with lower subset nu subset shape, nu/lower a strip, len(nu) <= k
        ranges = []
        for r in range(1, k + 1):
            lo = lower.row(r)
            hi = min(shape.row(r), lower.row(r - 1) if r > 1 else shape.row(r))
            ranges.append(range(lo, hi + 1))
        for rows in product(*ranges):
            yield Partition(rows)

    def rec(k: int, lower: Partition, filling: list[list[int]]):
        if k == d:
            if lower == shape:
                out.append(tuple(tuple(r) for r in filling if r))
            return
        for nu in strips(lower, k + 1):
            if k + 1 == d and nu != shape:
                continue
            new = [list(r) for r in filling] + [[] for _ in range(len(nu) - len(filling))]
            for r in range(1, len(nu) + 1):
                new[r - 1].extend([k + 1] * (nu.row(r) - lower.row(r)))
            rec(k + 1, nu, new)

    if len(shape) <= d:
        rec(0, Partition(()), [])
    return tuple(SemiStandardTableau(t) for t in sorted(out, key=_word_key))


def _word_key(rows) -> tuple[int, ...]:
    return tuple(x for r in rows for x in r)


def enumerate_ssyt(lam: Sequence[int], d: int) -> tuple[SemiStandardTableau, ...]:
    """SSYT(lam, d) in canonical order."""
    lam = Partition(lam)
    if len(lam) > d:
        raise ValueError(f"shape {lam} has more than d={d} rows")
    return _ssyt(lam, d)


@lru_cache(maxsize=None)
def _syt(shape: Partition) -> tuple[StandardTableau, ...]:
    n = shape.size
    out = []

    def rec(cur: Partition, filling: list[list[int]], k: int):
        if k > n:
            out.append(tuple(tuple(r) for r in filling))
            return
        for r in cur.addable_rows():
            if cur.row(r) < shape.row(r):
                new = [list(x) for x in filling]
                if r > len(new):
                    new.append([])
                new[r - 1].append(k)
                rec(cur.add_box(r), new, k + 1)

    rec(Partition(()), [], 1)
    return tuple(StandardTableau(t) for t in sorted(out, key=_word_key))


def enumerate_syt(lam: Sequence[int]) -> tuple[StandardTableau, ...]:
    """SYT(lam) in canonical order."""
    return _syt(Partition(lam))


@lru_cache(maxsize=None)
def ssyt_index(lam: Partition, d: int) -> dict[SemiStandardTableau, int]:
    return {t: k for k, t in enumerate(enumerate_ssyt(lam, d))}


@lru_cache(maxsize=None)
def syt_index(lam: Partition) -> dict[StandardTableau, int]:
    return {t: k for k, t in enumerate(enumerate_syt(lam))}


def from_shapes(chain: Sequence[Sequence[int]]) -> SemiStandardTableau:
    """The SSYT whose restrictions t^(1), t^(2), ... have the given shapes."""
    rows: list[list[int]] = []
    prev = Partition(())
    for k, nu in enumerate(chain, start=1):
        nu = Partition(nu)
        while len(rows) < len(nu):
            rows.append([])
        for r in range(1, len(nu) + 1):
            rows[r - 1].extend([k] * (nu.row(r) - prev.row(r)))
        prev = nu
    return SemiStandardTableau(rows)


def add_entry(q: StandardTableau, row: int) -> StandardTableau:
    """Append the next entry n+1 at the end of the given row of a standard tableau."""
    rows = [list(r) for r in q] + [[]]
    rows[row - 1].append(q.size + 1)
    return StandardTableau(rows)
