"""Hecke algebra H_q(n): YYH matrices on R^lambda and the word-basis action.

Generators satisfy (T_i - q^{-1})(T_i + q) = 0 and the braid relations. On
R^lambda, with a = res(box of i+1) - res(box of i) in the SYT t,

    T_i |t> = (q^{-a} / [a]) |t> + sqrt(1 - 1/[a]^2) |s_i t>,

where s_i t swaps i and i+1 and is absent when |a| = 1. On words T_i acts on
tensor factors i, i+1 by |bb> -> q^{-1}|bb>, |bc> -> |cb> for b < c and
|bc> -> (q^{-1} - q)|bc> + |cb> for b > c.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Sequence

import numpy as np

from .gtj import word_labels
from .matrices import LabeledMatrix
from .qarith import QParam, as_q, qint_float, qpow_half
from .tableaux import Partition, StandardTableau, enumerate_syt, residue, syt_index


def _require_finite(q) -> QParam:
    q = as_q(q)
    if q.is_symbolic:
        raise ValueError("Hecke matrices need a finite q")
    return q


def swap_entries(t: StandardTableau, i: int) -> StandardTableau | None:
    """s_i t, or None when i and i+1 share a row or a column."""
    rows = [[i + 1 if x == i else i if x == i + 1 else x for x in r] for r in t]
    try:
        return StandardTableau(rows)
    except ValueError:
        return None


def yyh_axial_distance(t: StandardTableau, i: int) -> int:
    return residue(t.box_of(i + 1)) - residue(t.box_of(i))


@lru_cache(maxsize=None)
def _yyh_array(lam: Partition, i: int, q: QParam) -> np.ndarray:
    basis = enumerate_syt(lam)
    n = lam.size
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range 1..{n - 1}")
    idx = syt_index(lam)
    T = np.zeros((len(basis), len(basis)))
    for col, t in enumerate(basis):
        a = yyh_axial_distance(t, i)
        qa = qint_float(a, q)
        T[col, col] = float(qpow_half(-2 * a, q)) / qa
        s = swap_entries(t, i)
        if s is None:
            assert abs(a) == 1
            continue
        T[idx[s], col] = math.sqrt(1.0 - 1.0 / qa**2)
    T.setflags(write=False)
    return T


def yyh_array(lam: Sequence[int], i: int, q) -> np.ndarray:
    return np.array(_yyh_array(Partition(lam), i, _require_finite(q)))


def t_matrix_yyh(lam: Sequence[int], i: int, q) -> LabeledMatrix:
    """Matrix of T_i on R^lambda in canonical SYT order."""
    lam, q = Partition(lam), _require_finite(q)
    labels = tuple(t.to_text() for t in enumerate_syt(lam))
    return LabeledMatrix(yyh_array(lam, i, q), labels, labels, {"generator": f"T_{i}", "q": q.tag()})


def t_action_array(n: int, d: int, i: int, q) -> np.ndarray:
    """T_i on the word basis of V^{(x) n} (factors i, i+1, 1-based)."""
    q = _require_finite(q)
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range 1..{n - 1}")
    qi = 1.0 / q.value
    local = np.zeros((d * d, d * d))
    for b in range(d):
        for c in range(d):
            src = b * d + c
            if b == c:
                local[src, src] = qi
            else:
                local[c * d + b, src] = 1.0
                if b > c:
                    local[src, src] = qi - q.value
    return np.kron(np.kron(np.eye(d ** (i - 1)), local), np.eye(d ** (n - i - 1)))


def t_action_word(n: int, d: int, i: int, q) -> LabeledMatrix:
    labels = word_labels(n, d)
    return LabeledMatrix(t_action_array(n, d, i, q), labels, labels, {"generator": f"T_{i}", "q": as_q(q).tag()})


def hecke_residuals(T: Sequence[np.ndarray], q) -> dict[str, float]:
    """Quadratic, braid and far-commutation residuals of a list T_1..T_{n-1}."""
    q = _require_finite(q)
    qv = q.value
    res = {"quadratic": 0.0, "braid": 0.0, "far": 0.0}
    for k, A in enumerate(T):
        I = np.eye(len(A))
        res["quadratic"] = max(res["quadratic"], float(np.abs((A - I / qv) @ (A + qv * I)).max(initial=0)))
        for j in range(k + 1, len(T)):
            B = T[j]
            if j == k + 1:
                r = np.abs(A @ B @ A - B @ A @ B).max(initial=0)
                res["braid"] = max(res["braid"], float(r))
            else:
                res["far"] = max(res["far"], float(np.abs(A @ B - B @ A).max(initial=0)))
    return res


def verify_hecke_relations(lam: Sequence[int], q) -> float:
    """Max relation residual of the YYH matrices on R^lambda."""
    lam, q = Partition(lam), _require_finite(q)
    return max(hecke_residuals([yyh_array(lam, i, q) for i in range(1, lam.size)], q).values())


def verify_word_hecke_relations(n: int, d: int, q) -> float:
    """Max relation residual of the word-basis action on V^{(x) n}."""
    q = _require_finite(q)
    return max(hecke_residuals([t_action_array(n, d, i, q) for i in range(1, n)], q).values())


def branching_blocks(lam: Sequence[int]) -> dict[Partition, list[int]]:
    """SYT indices grouped by the shape left after removing the entry n."""
    lam = Partition(lam)
    groups: dict[Partition, list[int]] = {}
    for k, t in enumerate(enumerate_syt(lam)):
        groups.setdefault(lam.remove_box(t.box_of(lam.size).row), []).append(k)
    return groups
