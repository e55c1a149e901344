"""RSK, dual RSK and quantum insertion.

Words are sequences of 1-based letters. The word basis index used by the
transforms is big-endian and 0-based: ``word_index(w, d) = sum((w_j - 1) * d**(n-j))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, NamedTuple, Sequence

from .tableaux import Box, SemiStandardTableau, StandardTableau, add_entry


class Bump(NamedTuple):
    """A bumped letter moving from one row to another (rows 1-based)."""

    letter: int
    from_row: int
    to_row: int


@dataclass(frozen=True)
class InsertionOutcome:
    result: SemiStandardTableau
    new_box: Box
    path: tuple[Bump, ...] = ()

    @property
    def sign(self) -> int:
        return bumping_sign(self.path)


@dataclass(frozen=True)
class RskPair:
    P: SemiStandardTableau
    Q: StandardTableau

    def __post_init__(self):
        if self.P.shape != self.Q.shape:
            raise ValueError(f"shape mismatch: {self.P.shape} vs {self.Q.shape}")


def bumping_sign(path: Sequence[Bump]) -> int:
    """-1 for every letter that moves to a lower row."""
    sign = 1
    for b in path:
        if b.to_row > b.from_row:
            sign = -sign
    return sign


def _rows(t) -> list[list[int]]:
    return [list(r) for r in t]


def rsk_insert(t: SemiStandardTableau, i: int) -> InsertionOutcome:
    """Row insertion: i bumps the leftmost entry > i, cascading downwards."""
    rows = _rows(t)
    x, r = i, 0
    path: list[Bump] = []
    while True:
        if r == len(rows):
            rows.append([x])
            break
        row = rows[r]
        c = next((c for c, v in enumerate(row) if v > x), None)
        if c is None:
            row.append(x)
            break
        row[c], x = x, row[c]
        path.append(Bump(x, r + 1, r + 2))
        r += 1
    return InsertionOutcome(SemiStandardTableau(rows), Box(r + 1, len(rows[r])), tuple(path))


def dual_rsk_insert(t: SemiStandardTableau, i: int) -> InsertionOutcome:
    """Column insertion: i bumps the topmost entry >= i of a column.

    A letter displaced by an equal letter does not change the tableau, so such
    steps are not recorded as bumps. Every recorded bump moves weakly up, hence
    the sign is always +1.
    """
    rows = _rows(t)
    x, c = i, 0
    path: list[Bump] = []
    while True:
        height = sum(1 for row in rows if len(row) > c)
        r = next((r for r in range(height) if rows[r][c] >= x), None)
        if r is None:
            if height == len(rows):
                rows.append([])
            rows[height].append(x)
            new_box = Box(height + 1, c + 1)
            break
        rows[r][c], y = x, rows[r][c]
        if y != x:
            path.append(Bump(y, r + 1, 0))
        x = y
        c += 1
    # Fill in the destination row of each bumped letter: the row where the
    # next displaced letter sat, or the new box for the last one.
    fixed: list[Bump] = []
    for k, b in enumerate(path):
        dest = path[k + 1].from_row if k + 1 < len(path) else new_box.row
        fixed.append(Bump(b.letter, b.from_row, dest))
    return InsertionOutcome(SemiStandardTableau(rows), new_box, tuple(fixed))


def _fits(rows: list[list[int | None]], r: int, c: int) -> bool:
    """Check the entry at (r, c) against its filled neighbours; None marks the hole."""
    v = rows[r][c]
    if v is None:
        return True
    if c > 0 and rows[r][c - 1] is not None and rows[r][c - 1] > v:
        return False
    if c + 1 < len(rows[r]) and rows[r][c + 1] is not None and rows[r][c + 1] < v:
        return False
    if r > 0 and c < len(rows[r - 1]) and rows[r - 1][c] is not None and rows[r - 1][c] >= v:
        return False
    if r + 1 < len(rows) and c < len(rows[r + 1]) and rows[r + 1][c] is not None and rows[r + 1][c] <= v:
        return False
    return True


def q_insert(t: SemiStandardTableau, i: int) -> list[InsertionOutcome]:
    """All outcomes of quantum insertion of i into t.

    Exhaustive search: choose the row of the new box, then repeatedly either
    drop the carried letter into the new box or let it replace a larger letter
    and carry that one on. Outcomes are keyed by (result, new box); the first
    path found is kept.
    """
    base = _rows(t)
    seen: dict[tuple, InsertionOutcome] = {}
    rows_avail = t.shape.addable_rows()

    def search(rows: list[list[int | None]], hole: tuple[int, int], x: int, from_row: int | None, path: list[Bump]):
        hr, hc = hole
        # Take the new box.
        rows[hr][hc] = x
        if _fits(rows, hr, hc):
            full = [list(r) for r in rows]
            res = SemiStandardTableau(full)
            rec = path + ([Bump(x, from_row, hr + 1)] if from_row is not None else [])
            key = (res, Box(hr + 1, hc + 1))
            if key not in seen:
                seen[key] = InsertionOutcome(res, key[1], tuple(rec))
        rows[hr][hc] = None
        # Replace a larger letter.
        for r, row in enumerate(rows):
            for c, y in enumerate(row):
                if y is None or y <= x:
                    continue
                row[c] = x
                if _fits(rows, r, c):
                    rec = path + ([Bump(x, from_row, r + 1)] if from_row is not None else [])
                    search(rows, hole, y, r + 1, rec)
                row[c] = y

    for r in rows_avail:
        rows: list[list[int | None]] = [list(row) for row in base] + [[]]
        rows[r - 1].append(None)
        rows = [row for row in rows if row]
        search(rows, (r - 1, len(rows[r - 1]) - 1), i, None, [])
    return sorted(seen.values(), key=lambda o: (o.new_box.row, o.result.reading_word()))


def rsk_word(w: Sequence[int]) -> RskPair:
    """Insert w_1, w_2, ... in turn; Q records where each new box appeared."""
    P = SemiStandardTableau(())
    Q = StandardTableau(())
    for x in w:
        out = rsk_insert(P, x)
        P = out.result
        Q = add_entry(Q, out.new_box.row)
    return RskPair(P, Q)


def dual_rsk_word(w: Sequence[int]) -> RskPair:
    """Column insertion of w_1, w_2, ... with the same recording convention as rsk_word."""
    P = SemiStandardTableau(())
    Q = StandardTableau(())
    for x in w:
        out = dual_rsk_insert(P, x)
        P = out.result
        Q = add_entry(Q, out.new_box.row)
    return RskPair(P, Q)


def rsk_word_sign(w: Sequence[int]) -> int:
    """Product of the bumping signs of the successive row insertions."""
    P = SemiStandardTableau(())
    sign = 1
    for x in w:
        out = rsk_insert(P, x)
        sign *= out.sign
        P = out.result
    return sign


def _reverse_bump(rows: list[list[int]], r: int) -> int:
    """Remove the last box of row r (0-based) and reverse-bump up to row 0."""
    x = rows[r].pop()
    if not rows[r]:
        rows.pop(r)
    for k in range(r - 1, -1, -1):
        row = rows[k]
        c = max(c for c, v in enumerate(row) if v < x)
        row[c], x = x, row[c]
    return x


def rsk_inverse(pair: RskPair) -> tuple[int, ...]:
    P, Q = pair.P, pair.Q
    if P.shape != Q.shape:
        raise ValueError("P and Q must have the same shape")
    rows = _rows(P)
    n = Q.size
    out = []
    for k in range(n, 0, -1):
        r = Q.box_of(k).row - 1
        out.append(_reverse_bump(rows, r))
    return tuple(reversed(out))


def q_insert_word(w: Sequence[int]) -> list[tuple[SemiStandardTableau, StandardTableau, int]]:
    """Cumulative quantum insertion of a word: (P, Q, sign) for every insertion path."""
    states = [(SemiStandardTableau(()), StandardTableau(()), 1)]
    for x in w:
        nxt = []
        for P, Q, sign in states:
            for out in q_insert(P, x):
                nxt.append((out.result, add_entry(Q, out.new_box.row), sign * out.sign))
        states = nxt
    return states


def word_index(w: Sequence[int], d: int) -> int:
    idx = 0
    for x in w:
        if not 1 <= x <= d:
            raise ValueError(f"letter {x} outside 1..{d}")
        idx = idx * d + (x - 1)
    return idx


def index_word(idx: int, n: int, d: int) -> tuple[int, ...]:
    letters = []
    for _ in range(n):
        idx, r = divmod(idx, d)
        letters.append(r + 1)
    return tuple(reversed(letters))


def words(n: int, d: int) -> Iterator[tuple[int, ...]]:
    """All words of length n in canonical (word_index) order."""
    return product(range(1, d + 1), repeat=n)


def parse_word(text: str) -> tuple[int, ...]:
    s = text.strip()
    if not s:
        return ()
    w = tuple(int(x) for x in s.split(","))
    if any(x < 1 for x in w):
        raise ValueError(f"letters must be positive: {text!r}")
    return w
