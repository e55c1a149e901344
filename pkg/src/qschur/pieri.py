"""Wigner coefficients and Pieri transforms V^lambda (x) V -> (+)_mu V^mu.

A target tableau s of the coefficient <s|t,i> is fixed by the rows in which
its shapes exceed those of t: sh(s^(m)) = sh(t^(m)) + e_{r_m} for every
level m >= i, and s^(m) = t^(m) below i. The coefficient factors over levels.

Level data. At level m put lam = sh(t^(m)), lam' = sh(t^(m-1)),
l_j = lam_j - j, strip_j = lam_j - lam'_j and a(j, r) = l_j - l_r - 1, the
axial distance from the last box of row j to the cell added to row r.

* Type zero (level m = i, new cell in row r):
  q^{(res(b) - x_i(t))/2} sqrt| prod_{j<m} [a(j,r) - strip_j]
                              / prod_{j<=m, j!=r} [a(j,r) + 1] |
  with res(b) the residue of the new cell and x_i(t) counted in t.
* Type one (level m > i, row r1 at level m-1, row r2 at level m): equal to 1
  when r1 = r2 and no m sits in row r1; otherwise, with L = strip_{r1},
  sgn * q^{(res_old - res_new)/2} sqrt| prod_{j<=m, j!=r2} [a(j,r1)+L+1]/[a(j,r2)+1]
                                   * prod_{j<m, j!=r1} [a(j,r2)-strip_j]/[a(j,r1)+L-strip_j] |
  where sgn = -1 if r2 > r1, res_old = lam'_{r1} + 1 - r1, res_new = lam_{r2} + 1 - r2.

Each factor is carried as (sign, exponent, numerator and denominator
quantum-integer arguments) so the same data feeds finite evaluation in the
log domain and the exact crystal limits.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np
import scipy.sparse as sp

from .insertion import q_insert
from .matrices import LabeledMatrix
from .qarith import ONE, ZERO, DivergentLimitError, LogScalar, QParam, as_q, product, qint_signed, qpow_half
from .tableaux import (
    Partition,
    SemiStandardTableau,
    enumerate_ssyt,
    from_shapes,
    is_horizontal_strip,
    partitions,
    skew,
    ssyt_index,
)


@dataclass(frozen=True)
class Factor:
    """sign * q^{exponent/2} * sqrt(|prod [num] / prod [den]|) with signed quantum integers."""

    sign: int = 1
    exponent: int = 0
    num: tuple[int, ...] = ()
    den: tuple[int, ...] = ()

    @property
    def vanishes(self) -> bool:
        return 0 in self.num

    def evaluate(self, q) -> LogScalar:
        q = as_q(q)
        if q.is_symbolic:
            return limit_value(self, q.kind)
        if self.vanishes:
            return ZERO
        if 0 in self.den:
            raise ZeroDivisionError(f"vanishing denominator in {self}")
        mag = product(qint_signed(a, q) for a in self.num) / product(qint_signed(a, q) for a in self.den)
        mag = LogScalar(abs(mag.sign), mag.log_mag).sqrt()
        return (ONE if self.sign > 0 else -ONE) * qpow_half(self.exponent, q) * mag


def limit_value(f: Factor, limit: str) -> LogScalar:
    """Exact limit of a factor at q = 0 or q = inf by counting leading exponents.

    [n] ~ q^{|n|-1} at infinity and q^{-(|n|-1)} at zero, with unit leading
    coefficient, so a factor tends to 0, to its sign, or diverges.
    """
    if f.vanishes:
        return ZERO
    n = sum(abs(a) - 1 for a in f.num) - sum(abs(a) - 1 for a in f.den)
    # the factor behaves like q^{power/2}
    power = f.exponent + n if limit == "infinity" else f.exponent - n
    grows = power > 0 if limit == "infinity" else power < 0
    if power == 0:
        return ONE if f.sign > 0 else -ONE
    if grows:
        raise DivergentLimitError(f"{f} diverges at q={limit}")
    return ZERO


@dataclass(frozen=True)
class Level:
    """Shapes of t at levels m and m-1."""

    m: int
    lam: Partition
    lamp: Partition

    def l(self, j: int) -> int:
        return self.lam.row(j) - j

    def strip(self, j: int) -> int:
        return self.lam.row(j) - self.lamp.row(j)

    def a(self, j: int, r: int) -> int:
        return self.l(j) - self.l(r) - 1

    @property
    def x(self) -> int:
        return self.lam.size - self.lamp.size


def type0_factor(lv: Level, r: int) -> Factor:
    m = lv.m
    res_b = lv.lam.row(r) + 1 - r
    num = tuple(lv.a(j, r) - lv.strip(j) for j in range(1, m))
    den = tuple(lv.a(j, r) + 1 for j in range(1, m + 1) if j != r)
    return Factor(1, res_b - lv.x, num, den)


def type1_factor(lv: Level, r1: int, r2: int) -> Factor:
    m = lv.m
    if r1 == r2 and lv.strip(r1) == 0:
        return Factor()
    L = lv.strip(r1)
    res_old = lv.lamp.row(r1) + 1 - r1
    res_new = lv.lam.row(r2) + 1 - r2
    num = tuple(lv.a(j, r1) + L + 1 for j in range(1, m + 1) if j != r2)
    num += tuple(lv.a(j, r2) - lv.strip(j) for j in range(1, m) if j != r1)
    den = tuple(lv.a(j, r2) + 1 for j in range(1, m + 1) if j != r2)
    den += tuple(lv.a(j, r1) + L - lv.strip(j) for j in range(1, m) if j != r1)
    return Factor(-1 if r2 > r1 else 1, res_old - res_new, num, den)


@dataclass(frozen=True)
class WignerContext:
    """The data of <s|t,i>: row r_m of the added cell at each level m >= i."""

    t: SemiStandardTableau
    i: int
    s: SemiStandardTableau
    rows: tuple[int, ...]
    steps: tuple[tuple[int, int, int], ...] = field(default=())

    @property
    def top(self) -> int:
        return self.i + len(self.rows) - 1

    def level(self, m: int) -> Level:
        return Level(m, self.t.shape_at(m), self.t.shape_at(m - 1))

    @property
    def chain(self) -> tuple[int, ...]:
        """Letters taking part in the insertion: i and every non-trivially moved letter."""
        return (self.i,) + tuple(m for m, r1, r2 in self.steps if not self._trivial(m, r1, r2))

    def _trivial(self, m: int, r1: int, r2: int) -> bool:
        return r1 == r2 and self.level(m).strip(r1) == 0

    def factors(self) -> list[Factor]:
        out = [type0_factor(self.level(self.i), self.rows[0])]
        out += [type1_factor(self.level(m), r1, r2) for m, r1, r2 in self.steps]
        return out


def _top_level(t: SemiStandardTableau, i: int) -> int:
    return max(t.max_entry(), i)


def wigner_context(s: SemiStandardTableau, t: SemiStandardTableau, i: int) -> WignerContext | None:
    """Context for <s|t,i>, or None if s is not of the right form."""
    if s.size != t.size + 1:
        return None
    top = max(_top_level(t, i), s.max_entry())
    rows = []
    for m in range(1, top + 1):
        a, b = t.shape_at(m), s.shape_at(m)
        if m < i:
            if a != b:
                return None
            continue
        if b.size != a.size + 1 or not b.contains(a):
            return None
        rows.append(next(r for r in range(1, len(b) + 1) if b.row(r) != a.row(r)))
    if s.restrict(i - 1) != t.restrict(i - 1):
        return None
    steps = tuple((i + k, rows[k - 1], rows[k]) for k in range(1, len(rows)))
    return WignerContext(t, i, s, tuple(rows), steps)


def _context_from_rows(t: SemiStandardTableau, i: int, rows: Sequence[int]) -> WignerContext | None:
    chain = [t.shape_at(m) for m in range(1, i)]
    for k, r in enumerate(rows):
        mu = t.shape_at(i + k)
        if r > 1 and mu.row(r - 1) <= mu.row(r):
            return None
        chain.append(mu.add_box(r))
    prev = Partition(())
    for nu in chain:
        if not nu.contains(prev) or not is_horizontal_strip(skew(nu, prev)):
            return None
        prev = nu
    s = from_shapes(chain)
    steps = tuple((i + k, rows[k - 1], rows[k]) for k in range(1, len(rows)))
    return WignerContext(t, i, s, tuple(rows), steps)


def contexts(t: SemiStandardTableau, i: int) -> Iterator[WignerContext]:
    """Every candidate s for <s|t,i> in order of the row sequence."""
    top = _top_level(t, i)

    def rec(m: int, rows: list[int]):
        if m > top:
            ctx = _context_from_rows(t, i, rows)
            if ctx is not None:
                yield ctx
            return
        for r in range(1, m + 1):
            yield from rec(m + 1, rows + [r])

    yield from rec(i, [])


def w0(ctx: WignerContext, q) -> float:
    """Type zero reduced coefficient of the inserted letter."""
    return float(type0_factor(ctx.level(ctx.i), ctx.rows[0]).evaluate(q))


def w1(ctx: WignerContext, step: int, q) -> float:
    """Type one reduced coefficient at level ``step`` (i < step <= top)."""
    m, r1, r2 = ctx.steps[step - ctx.i - 1]
    return float(type1_factor(ctx.level(m), r1, r2).evaluate(q))


def w0_limit(ctx: WignerContext, limit: str) -> int:
    """Crystal limit of the type zero coefficient.

    infinity: 1 if the letter lands in row 1, else 0.
    zero: 1 if lam_{j+1} = lam'_j for every j in [r, i-1] (shapes of t at
    levels i and i-1), else 0.
    """
    lv, r = ctx.level(ctx.i), ctx.rows[0]
    if type0_factor(lv, r).vanishes:
        return 0
    if limit == "infinity":
        return int(r == 1)
    if limit == "zero":
        return int(all(lv.lam.row(j + 1) == lv.lamp.row(j) for j in range(r, ctx.i)))
    raise ValueError(f"unknown limit {limit!r}")


def w1_limit(ctx: WignerContext, step: int, limit: str) -> int:
    """Crystal limit of the type one coefficient at level ``step``.

    infinity: -1 if the letter moves one row down, 1 for an untouched row, else 0.
    zero: 1 if r1 = r2, or r1 > r2 and lam_{j+1} = lam'_j for every j in
    [r2, r1-1]; else 0.
    """
    m, r1, r2 = ctx.steps[step - ctx.i - 1]
    lv = ctx.level(m)
    f = type1_factor(lv, r1, r2)
    if f.vanishes:
        return 0
    if r1 == r2 and lv.strip(r1) == 0:
        return 1
    if limit == "infinity":
        return -1 if r2 == r1 + 1 else 0
    if limit == "zero":
        if r1 == r2:
            return 1
        return int(r1 > r2 and all(lv.lam.row(j + 1) == lv.lamp.row(j) for j in range(r2, r1)))
    raise ValueError(f"unknown limit {limit!r}")


def _wigner_log(ctx: WignerContext, q: QParam) -> LogScalar:
    if q.is_symbolic:
        v = w0_limit(ctx, q.kind)
        for m, _, _ in ctx.steps:
            v *= w1_limit(ctx, m, q.kind)
        return LogScalar.from_float(float(v))
    return product(f.evaluate(q) for f in ctx.factors())


def wigner(s: SemiStandardTableau, t: SemiStandardTableau, i: int, q) -> float:
    """<s|t,i>: W_0 of the inserted letter times W_1 of each moved letter."""
    ctx = wigner_context(s, t, i)
    if ctx is None:
        return 0.0
    return float(_wigner_log(ctx, as_q(q)))


def wigner_recursive(s: SemiStandardTableau, t: SemiStandardTableau, i: int, q, d: int | None = None) -> float:
    """<s|t,i> by peeling the top letter: W_1(d) <s^(d-1)|t^(d-1),i>, ending in W_0(i)."""
    q = as_q(q)
    if d is None:
        d = max(_top_level(t, i), s.max_entry())
    if d < i:
        return 0.0
    lam, lamp = t.shape_at(d), t.shape_at(d - 1)
    mu, mup = s.shape_at(d), s.shape_at(d - 1)
    if mu.size != lam.size + 1 or not mu.contains(lam):
        return 0.0
    r2 = next(r for r in range(1, len(mu) + 1) if mu.row(r) != lam.row(r))
    lv = Level(d, lam, lamp)
    if d == i:
        if mup != lamp or s.restrict(d - 1) != t.restrict(d - 1):
            return 0.0
        f = type0_factor(lv, r2)
        return float(f.evaluate(q)) if not q.is_symbolic else float(_limit_single(t, i, s, q))
    if mup.size != lamp.size + 1 or not mup.contains(lamp):
        return 0.0
    r1 = next(r for r in range(1, len(mup) + 1) if mup.row(r) != lamp.row(r))
    if q.is_symbolic:
        ctx = wigner_context(s, t, i)
        return 0.0 if ctx is None else float(_wigner_log(ctx, q))
    rest = wigner_recursive(s.restrict(d - 1), t.restrict(d - 1), i, q, d - 1)
    return float(type1_factor(lv, r1, r2).evaluate(q)) * rest


def _limit_single(t, i, s, q) -> LogScalar:
    ctx = wigner_context(s, t, i)
    return ZERO if ctx is None else _wigner_log(ctx, q)


def pieri_column(t: SemiStandardTableau, i: int, q) -> list[tuple[SemiStandardTableau, float]]:
    """Nonzero <s|t,i> over all s, ordered by the row sequence."""
    q = as_q(q)
    out = []
    for ctx in contexts(t, i):
        v = float(_wigner_log(ctx, q))
        if v != 0.0:
            out.append((ctx.s, v))
    return out


def covering_shapes(lam: Sequence[int], d: int) -> list[Partition]:
    """Shapes mu covering lam with at most d rows, in canonical order."""
    lam = Partition(lam)
    out = [lam.add_box(r) for r in lam.addable_rows(max_rows=d)]
    order = {p: k for k, p in enumerate(partitions(lam.size + 1))}
    return sorted(out, key=order.__getitem__)


@dataclass
class PieriMatrix:
    """The Pieri transform of V^lambda (x) V, one block per covering shape mu.

    Columns are (t, i) with flat index t_index * d + (i - 1); block rows are
    SSYT(mu, d) in canonical order.
    """

    lam: Partition
    d: int
    q: QParam
    blocks: dict[Partition, sp.csr_matrix]

    @property
    def shapes(self) -> list[Partition]:
        return list(self.blocks)

    def dense(self) -> np.ndarray:
        return np.vstack([b.toarray() for b in self.blocks.values()])

    def row_labels(self) -> list[str]:
        return [f"{mu.to_text()}:{s.to_text()}" for mu in self.blocks for s in enumerate_ssyt(mu, self.d)]

    def col_labels(self) -> list[str]:
        return [f"{t.to_text()}|{i}" for t in enumerate_ssyt(self.lam, self.d) for i in range(1, self.d + 1)]

    def labeled(self) -> LabeledMatrix:
        meta = {"lambda": self.lam.to_text(), "d": self.d, "q": self.q.tag()}
        return LabeledMatrix(self.dense(), self.row_labels(), self.col_labels(), meta)


@lru_cache(maxsize=None)
def _pieri_blocks(lam: Partition, d: int, q: QParam) -> dict[Partition, sp.csr_matrix]:
    basis = enumerate_ssyt(lam, d)
    shapes = covering_shapes(lam, d)
    entries: dict[Partition, tuple[list[int], list[int], list[float]]] = {mu: ([], [], []) for mu in shapes}
    for ti, t in enumerate(basis):
        for i in range(1, d + 1):
            for s, v in pieri_column(t, i, q):
                if s.max_entry() > d:
                    continue
                mu = s.shape
                rr, cc, vv = entries[mu]
                rr.append(ssyt_index(mu, d)[s])
                cc.append(ti * d + i - 1)
                vv.append(v)
    ncol = len(basis) * d
    out = {}
    for mu in shapes:
        rr, cc, vv = entries[mu]
        m = sp.csr_matrix((vv, (rr, cc)), shape=(len(enumerate_ssyt(mu, d)), ncol))
        m.sort_indices()
        out[mu] = m
    return out


def pieri_matrix(lam: Sequence[int], d: int, q) -> PieriMatrix:
    """Pieri transform of V^lambda (x) V; symbolic q gives the crystal limit."""
    lam, q = Partition(lam), as_q(q)
    if len(lam) > d:
        raise ValueError(f"shape {lam} has more than d={d} rows")
    return PieriMatrix(lam, d, q, _pieri_blocks(lam, d, q))


def reduced_wigner_transform(lam: Sequence[int], mu_prev: Sequence[int], m: int, q, pad: bool = False) -> LabeledMatrix:
    """Reduced Wigner coefficients at one level, controlled on two shapes.

    The control is lam = sh(t^(m)) and mu_prev = sh(s^(m-1)). Inputs are the
    rows j where the cell of level m-1 went (so sh(t^(m-1)) = mu_prev - e_j),
    plus "m" for the letter m itself (sh(t^(m-1)) = mu_prev). Outputs are the
    rows r <= m receiving the cell at level m. With ``pad`` the matrix is
    embedded in an m x m identity-bordered block (inputs 1..m-1 then "m").
    """
    lam, mu_prev, q = Partition(lam), Partition(mu_prev), as_q(q)
    inputs: list[tuple[str, Partition, int | None]] = []
    for j in range(1, m):
        if mu_prev.row(j) == 0 or (j < len(mu_prev) and mu_prev.row(j) == mu_prev.row(j + 1)):
            continue
        lamp = mu_prev.remove_box(j)
        if lam.contains(lamp) and is_horizontal_strip(skew(lam, lamp)) and len(lamp) <= m - 1:
            inputs.append((str(j), lamp, j))
    if lam.contains(mu_prev) and is_horizontal_strip(skew(lam, mu_prev)) and len(mu_prev) <= m - 1:
        inputs.append((str(m), mu_prev, None))
    outputs = []
    for r in lam.addable_rows(max_rows=m):
        nu = lam.add_box(r)
        if nu.contains(mu_prev) and is_horizontal_strip(skew(nu, mu_prev)):
            outputs.append(r)
    M = np.zeros((len(outputs), len(inputs)))
    for c, (_, lamp, j) in enumerate(inputs):
        lv = Level(m, lam, lamp)
        for rr, r in enumerate(outputs):
            f = type0_factor(lv, r) if j is None else type1_factor(lv, j, r)
            M[rr, c] = float(f.evaluate(q))
    rows = [str(r) for r in outputs]
    cols = [lab for lab, _, _ in inputs]
    if pad:
        full = np.zeros((m, m))
        rpos = [r - 1 for r in outputs]
        cpos = [int(lab) - 1 for lab in cols]
        full[np.ix_(rpos, cpos)] = M
        free_r = [k for k in range(m) if k not in rpos]
        free_c = [k for k in range(m) if k not in cpos]
        for r, c in zip(free_r, free_c):
            full[r, c] = 1.0
        M, rows, cols = full, [str(k) for k in range(1, m + 1)], [str(k) for k in range(1, m + 1)]
    meta = {"lambda": lam.to_text(), "mu_prev": mu_prev.to_text(), "level": m, "q": q.tag()}
    return LabeledMatrix(M, rows, cols, meta)


def q_insert_support(t: SemiStandardTableau, i: int) -> set[SemiStandardTableau]:
    return {o.result for o in q_insert(t, i)}
