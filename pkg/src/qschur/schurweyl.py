"""The quantum Schur-Weyl transform as a cascade of Pieri transforms.

Letters are consumed left to right: w_1 is inserted first and every later
letter is the right tensor factor of a Pieri step. After k steps the state of
the cascade is a shape lambda, a tableau P in SSYT(lambda, d) and the
recording tableau Q in SYT(lambda) of the covers taken so far.

Output rows are ordered by lambda (canonical order), then Q, then P, which
realizes (+)_lambda R^lambda (x) V^lambda.
"""

from __future__ import annotations

import os
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple, Sequence

import numpy as np

from .gtj import Generator, _generator_array, word_generator_array, word_labels
from .hecke import t_action_array, yyh_array
from .insertion import dual_rsk_word, index_word, rsk_word, rsk_word_sign, word_index, words
from .matrices import LabeledMatrix
from .pieri import pieri_column, pieri_matrix
from .qarith import QParam, as_q
from .tableaux import (
    Partition,
    SemiStandardTableau,
    StandardTableau,
    add_entry,
    enumerate_ssyt,
    enumerate_syt,
    partitions,
)

DENSE_CAP = 4096
STREAM_WARN = 10**6


class SchurBasisLabel(NamedTuple):
    lam: Partition
    P: SemiStandardTableau
    Q: StandardTableau

    def to_text(self) -> str:
        return f"{self.lam.to_text()};{self.P.to_text()};{self.Q.to_text()}"


def threads() -> int:
    """Worker count for library parallelism, capped by QSCHUR_THREADS (default 1)."""
    try:
        return max(1, int(os.environ.get("QSCHUR_THREADS", "1")))
    except ValueError:
        return 1


def shapes(n: int, d: int) -> tuple[Partition, ...]:
    return partitions(n, d)


@lru_cache(maxsize=None)
def schur_basis(n: int, d: int) -> tuple[SchurBasisLabel, ...]:
    """All (lambda, P, Q) in canonical order; there are d**n of them."""
    out = []
    for lam in shapes(n, d):
        for Q in enumerate_syt(lam):
            for P in enumerate_ssyt(lam, d):
                out.append(SchurBasisLabel(lam, P, Q))
    return tuple(out)


@lru_cache(maxsize=None)
def schur_index(n: int, d: int) -> dict[tuple[SemiStandardTableau, StandardTableau], int]:
    return {(b.P, b.Q): k for k, b in enumerate(schur_basis(n, d))}


def block_slices(n: int, d: int) -> dict[Partition, slice]:
    """Row range of each lambda block in the canonical order."""
    out, start = {}, 0
    for lam in shapes(n, d):
        size = len(enumerate_syt(lam)) * len(enumerate_ssyt(lam, d))
        out[lam] = slice(start, start + size)
        start += size
    return out


@lru_cache(maxsize=4096)
def _column_cached(P: SemiStandardTableau, x: int, q: QParam) -> tuple[tuple[SemiStandardTableau, int, float], ...]:
    out = []
    for s, v in pieri_column(P, x, q):
        row = next(r for r in range(1, len(s) + 1) if s.shape.row(r) != P.shape.row(r))
        out.append((s, row, v))
    return tuple(out)


def transform_column(w: Sequence[int], q) -> dict[tuple[SemiStandardTableau, StandardTableau], float]:
    """Image of the word basis vector |w> as a map (P, Q) -> amplitude."""
    q = as_q(q)
    state = {(SemiStandardTableau(()), StandardTableau(())): 1.0}
    for x in w:
        nxt: dict = {}
        for (P, Q), amp in state.items():
            for s, row, v in _column_cached(P, x, q):
                key = (s, add_entry(Q, row))
                nxt[key] = nxt.get(key, 0.0) + amp * v
        state = nxt
    return state


@dataclass
class SchurTransform:
    n: int
    d: int
    q: QParam
    matrix: np.ndarray
    labels: tuple[SchurBasisLabel, ...] = field(repr=False)

    def labeled(self) -> LabeledMatrix:
        meta = {"n": self.n, "d": self.d, "q": self.q.tag()}
        return LabeledMatrix(self.matrix, [b.to_text() for b in self.labels], word_labels(self.n, self.d), meta)


def schur_transform_dense(n: int, d: int, q, cap: int = DENSE_CAP) -> SchurTransform:
    """The d^n x d^n transform, one word column at a time."""
    q = as_q(q)
    N = d**n
    if N > cap:
        raise ValueError(f"d^n = {N} exceeds the dense cap {cap}")
    idx = schur_index(n, d)
    U = np.zeros((N, N))
    for c, w in enumerate(words(n, d)):
        for key, v in transform_column(w, q).items():
            U[idx[key], c] = v
    return SchurTransform(n, d, q, U, schur_basis(n, d))


def schur_matrix(n: int, d: int, q, cap: int = DENSE_CAP) -> np.ndarray:
    return schur_transform_dense(n, d, q, cap).matrix


def _map(fn, items):
    k = threads()
    if k == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=k) as ex:
        return list(ex.map(fn, items))


def schur_apply(
    state: np.ndarray, n: int, d: int, q, direction: str = "forward", stats: dict | None = None
) -> np.ndarray:
    """Apply the transform (or its transpose) stage by stage without forming it.

    Each stage contracts the next letter against the sparse Pieri blocks of
    every current shape. ``stats`` (if given) receives "ops", the number of
    multiply-adds, and "stages".
    """
    q = as_q(q)
    v = np.asarray(state, dtype=float)
    if v.shape != (d**n,):
        raise ValueError(f"state must have length d^n = {d**n}, got shape {v.shape}")
    if d**n > STREAM_WARN:
        warnings.warn(f"streaming {d**n} amplitudes; this may be slow", RuntimeWarning, stacklevel=2)
    if direction == "forward":
        out, ops = _forward(v, n, d, q)
    elif direction == "inverse":
        out, ops = _inverse(v, n, d, q)
    else:
        raise ValueError(f"direction must be 'forward' or 'inverse', not {direction!r}")
    if stats is not None:
        stats["ops"] = stats.get("ops", 0) + ops
        stats["stages"] = n
    return out


def _forward(v: np.ndarray, n: int, d: int, q: QParam) -> tuple[np.ndarray, int]:
    blocks: dict[StandardTableau, np.ndarray] = {StandardTableau(()): v.reshape(1, d**n)}
    ops = 0
    for k in range(n):
        rem = d ** (n - k - 1)

        def step(item):
            Q, X = item
            lam = Q.shape
            pm = pieri_matrix(lam, d, q)
            Xs = X.reshape(X.shape[0] * d, rem)
            res, cost = [], 0
            for mu, B in pm.blocks.items():
                row = next(r for r in range(1, len(mu) + 1) if mu.row(r) != lam.row(r))
                res.append((add_entry(Q, row), B @ Xs))
                cost += B.nnz * rem
            return res, cost

        nxt = {}
        for res, cost in _map(step, list(blocks.items())):
            ops += cost
            nxt.update(res)
        blocks = nxt
    out = np.zeros(d**n)
    idx = schur_index(n, d)
    for Q, X in blocks.items():
        for P, x in zip(enumerate_ssyt(Q.shape, d), X[:, 0]):
            out[idx[(P, Q)]] = x
    return out, ops


def _parent(Q: StandardTableau) -> tuple[StandardTableau, int]:
    n = Q.size
    row = Q.box_of(n).row
    rows = [[x for x in r if x != n] for r in Q]
    return StandardTableau(rows), row


def _inverse(v: np.ndarray, n: int, d: int, q: QParam) -> tuple[np.ndarray, int]:
    idx = schur_index(n, d)
    blocks: dict[StandardTableau, np.ndarray] = {}
    for lam in shapes(n, d):
        ssyt = enumerate_ssyt(lam, d)
        for Q in enumerate_syt(lam):
            blocks[Q] = np.array([v[idx[(P, Q)]] for P in ssyt]).reshape(len(ssyt), 1)
    ops = 0
    for k in range(n, 0, -1):
        cols = d ** (n - k)
        children: dict[StandardTableau, list[tuple[int, np.ndarray]]] = {}
        for Q, Y in blocks.items():
            parent, row = _parent(Q)
            children.setdefault(parent, []).append((row, Y))

        def step(item):
            parent, kids = item
            lam = parent.shape
            pm = pieri_matrix(lam, d, q)
            X = np.zeros((len(enumerate_ssyt(lam, d)) * d, cols))
            cost = 0
            for row, Y in kids:
                B = pm.blocks[lam.add_box(row)]
                X += B.T @ Y
                cost += B.nnz * cols
            return parent, X.reshape(X.shape[0] // d, d * cols), cost

        blocks = {}
        for parent, X, cost in _map(step, list(children.items())):
            ops += cost
            blocks[parent] = X
    return blocks[StandardTableau(())].reshape(d**n), ops


def crystal_limit_transform(n: int, d: int, limit: str) -> dict[tuple[int, ...], tuple[SchurBasisLabel, int]]:
    """Word -> (label, sign) of the transform at q = 0 or q = inf.

    Raises if some column is not a single signed unit, which would contradict
    the crystal limit rules.
    """
    q = as_q(limit)
    if not q.is_symbolic:
        raise ValueError("limit must be 'zero' or 'infinity'")
    out = {}
    for w in words(n, d):
        col = {k: v for k, v in transform_column(w, q).items() if v != 0.0}
        if len(col) != 1:
            raise AssertionError(f"column of {w} has {len(col)} nonzero entries at q={limit}")
        (P, Q), v = next(iter(col.items()))
        if abs(v) != 1.0:
            raise AssertionError(f"entry {v} for {w} is not a signed unit")
        out[w] = (SchurBasisLabel(P.shape, P, Q), int(v))
    return out


def crystal_reference(n: int, d: int, limit: str) -> dict[tuple[int, ...], tuple[SchurBasisLabel, int]]:
    """The same table from RSK (with bumping signs) or dual RSK (all +1)."""
    out = {}
    for w in words(n, d):
        if limit == "infinity":
            pair, sign = rsk_word(w), rsk_word_sign(w)
        elif limit == "zero":
            pair, sign = dual_rsk_word(w), 1
        else:
            raise ValueError(f"unknown limit {limit!r}")
        out[w] = (SchurBasisLabel(pair.P.shape, pair.P, pair.Q), sign)
    return out


def crystal_matrix(n: int, d: int, limit: str) -> np.ndarray:
    idx = schur_index(n, d)
    M = np.zeros((d**n, d**n))
    for w, (b, sign) in crystal_limit_transform(n, d, limit).items():
        M[idx[(b.P, b.Q)], word_index(w, d)] = sign
    return M


# Verification of the two commuting actions.


@dataclass
class IntertwinerReport:
    n: int
    d: int
    q: float
    off_block: float
    hecke: float
    qgroup: float
    h_exact: float
    signs: dict[Partition, np.ndarray] = field(repr=False)

    @property
    def residual(self) -> float:
        return max(self.off_block, self.hecke, self.qgroup, self.h_exact)

    def as_dict(self) -> dict:
        return {
            "n": self.n, "d": self.d, "q": self.q, "off_block": self.off_block,
            "hecke": self.hecke, "qgroup": self.qgroup, "h_exact": self.h_exact,
        }


def _targets(lam: Partition, n: int, d: int, q: QParam):
    """Expected block matrices: T_i as YYH (x) I and generators as I (x) GTJ."""
    nQ, nP = len(enumerate_syt(lam)), len(enumerate_ssyt(lam, d))
    hecke = [np.kron(yyh_array(lam, i, q), np.eye(nP)) for i in range(1, n)]
    gens = {}
    for i in range(1, d):
        for kind in "ef":
            gens[(kind, i)] = np.kron(np.eye(nQ), np.asarray(_generator_array(lam, d, Generator(kind, i), q)))
    hs = {("h", i): np.kron(np.eye(nQ), np.asarray(_generator_array(lam, d, Generator("h", i), q))) for i in range(1, d + 1)}
    return hecke, gens, hs


def recover_signs(pairs: Sequence[tuple[np.ndarray, np.ndarray]], size: int, tol: float = 1e-8) -> np.ndarray:
    """Diagonal signs D with D A D ~ B for every (A, B), by search over B's nonzero links."""
    D = np.zeros(size)
    adj: dict[int, list[tuple[int, float]]] = {k: [] for k in range(size)}
    for A, B in pairs:
        rr, cc = np.nonzero(np.abs(B) > tol)
        for r, c in zip(rr, cc):
            if r != c and abs(A[r, c]) > tol:
                adj[r].append((c, np.sign(A[r, c]) * np.sign(B[r, c])))
    for root in range(size):
        if D[root]:
            continue
        D[root] = 1.0
        stack = [root]
        while stack:
            r = stack.pop()
            for c, s in adj[r]:
                if not D[c]:
                    D[c] = D[r] * s
                    stack.append(c)
    return D


def verify_intertwiners(n: int, d: int, q, U: np.ndarray | None = None) -> IntertwinerReport:
    """Check that the transform block-diagonalizes both actions, with one sign matrix per lambda."""
    q = as_q(q)
    if q.is_symbolic:
        raise ValueError("intertwining is checked at finite q only")
    if U is None:
        U = schur_matrix(n, d, q)
    slices = block_slices(n, d)
    conj_T = [U @ t_action_array(n, d, i, q) @ U.T for i in range(1, n)]
    conj_g = {(k, i): U @ word_generator_array(n, d, (k, i), q) @ U.T for i in range(1, d) for k in "ef"}
    conj_h = {("h", i): U @ word_generator_array(n, d, ("h", i), q) @ U.T for i in range(1, d + 1)}
    mask = np.zeros((d**n, d**n), dtype=bool)
    for sl in slices.values():
        mask[sl, sl] = True
    off = max(
        [float(np.abs(M[~mask]).max(initial=0)) for M in conj_T + list(conj_g.values()) + list(conj_h.values())],
        default=0.0,
    )
    hecke = qgroup = hexact = 0.0
    signs = {}
    for lam, sl in slices.items():
        hecke_t, gens_t, hs_t = _targets(lam, n, d, q)
        blocks_T = [M[sl, sl] for M in conj_T]
        blocks_g = {k: M[sl, sl] for k, M in conj_g.items()}
        pairs = list(zip(blocks_T, hecke_t)) + [(blocks_g[k], gens_t[k]) for k in gens_t]
        D = recover_signs(pairs, sl.stop - sl.start)
        signs[lam] = D
        for A, B in zip(blocks_T, hecke_t):
            hecke = max(hecke, float(np.abs(D[:, None] * A * D[None, :] - B).max(initial=0)))
        for k, B in gens_t.items():
            A = blocks_g[k]
            qgroup = max(qgroup, float(np.abs(D[:, None] * A * D[None, :] - B).max(initial=0)))
        for k, B in hs_t.items():
            hexact = max(hexact, float(np.abs(conj_h[k][sl, sl] - B).max(initial=0)))
    return IntertwinerReport(n, d, q.value, off, hecke, qgroup, hexact, signs)


def verify_intertwiner_hecke(n: int, d: int, q) -> float:
    r = verify_intertwiners(n, d, q)
    return max(r.off_block, r.hecke)


def verify_intertwiner_qgroup(n: int, d: int, q) -> float:
    r = verify_intertwiners(n, d, q)
    return max(r.off_block, r.qgroup, r.h_exact)


def unitarity_residual(U: np.ndarray) -> float:
    return float(np.abs(U.T @ U - np.eye(len(U))).max(initial=0))


def words_of(n: int, d: int) -> list[tuple[int, ...]]:
    return [index_word(k, n, d) for k in range(d**n)]
