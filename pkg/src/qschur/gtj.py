"""U_q(d) generators on irreducibles V^lambda (GTJ basis) and on words V^{(x) n}.

Conventions. ``h_i`` acts on the basis vector of an SSYT t by the letter count
x_i(t); ``k_i = h_i - h_{i+1}``; ``e_i`` is the transpose of ``f_i``; the
relations are [e_i, f_i] = [k_i] and the quantum Serre relations. The
coproduct is Delta(f_i) = f_i (x) q^{-k_i/2} + q^{k_i/2} (x) f_i, likewise for
e_i, and Delta(q^{h_i/2}) = q^{h_i/2} (x) q^{h_i/2}.

GTJ matrix element of f_i. Let l_{j,m} = sh(t^{(m)})_j - j and let the last i
in row k of t become i+1. Then

    <t_k|f_i|t>^2 = - prod_{j=1}^{i+1} [l_{j,i+1} - l_{k,i} + 1]
                      prod_{j=1}^{i-1} [l_{j,i-1} - l_{k,i}]
                    / prod_{j<=i, j!=k} [l_{j,i} - l_{k,i} + 1] [l_{j,i} - l_{k,i}]

with signed quantum integers. The l differences are axial distances between
row ends of the restricted shapes t^{(i-1)}, t^{(i)}, t^{(i+1)}.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple, Sequence

import numpy as np

from .matrices import LabeledMatrix
from .qarith import QParam, as_q, product, qint_float, qint_signed, qpow_half
from .tableaux import Partition, SemiStandardTableau, enumerate_ssyt, ssyt_index
from .insertion import words


class Generator(NamedTuple):
    """A Chevalley generator: kind in {"e", "f", "h"} ("h" means q^{h_i/2}) and 1-based index."""

    kind: str
    index: int

    @classmethod
    def parse(cls, g) -> Generator:
        if isinstance(g, Generator):
            return g
        if isinstance(g, tuple):
            return cls(*g)
        s = str(g).replace("_", "").replace("q^h", "h").replace("/2", "")
        kind, idx = s[0], int(s[1:])
        if kind not in "efh":
            raise ValueError(f"unknown generator {g!r}")
        return cls(kind, idx)

    def __str__(self) -> str:
        return f"q^{{h_{self.index}/2}}" if self.kind == "h" else f"{self.kind}_{self.index}"


def _require_finite(q) -> QParam:
    q = as_q(q)
    if q.is_symbolic:
        raise ValueError("generator matrices need a finite q")
    return q


def h_eigenvalue(t: SemiStandardTableau, i: int, q) -> float:
    """Eigenvalue q^{x_i(t)/2} of q^{h_i/2} on the basis vector of t."""
    return float(qpow_half(t.content_count(i), q))


def lowered(t: SemiStandardTableau, k: int, i: int) -> SemiStandardTableau | None:
    """t_k: the last i in row k turned into i+1, or None if not an SSYT."""
    if not 1 <= k <= len(t):
        return None
    row = t[k - 1]
    if i not in row:
        return None
    c = max(c for c, v in enumerate(row) if v == i)
    if k < len(t) and c < len(t[k]) and t[k][c] <= i + 1:
        return None
    rows = [list(r) for r in t]
    rows[k - 1][c] = i + 1
    return SemiStandardTableau(rows)


def f_coefficient(t: SemiStandardTableau, k: int, i: int, q) -> float:
    """The matrix element <t_k| f_i |t>; 0 when t_k is not a valid tableau."""
    q = _require_finite(q)
    if k < 1:
        raise ValueError(f"row index must be positive, got {k}")
    if lowered(t, k, i) is None:
        return 0.0
    l = lambda j, m: t.shape_at(m).row(j) - j  # noqa: E731
    lk = l(k, i)
    num = [qint_signed(l(j, i + 1) - lk + 1, q) for j in range(1, i + 2)]
    num += [qint_signed(l(j, i - 1) - lk, q) for j in range(1, i)]
    den = [
        qint_signed(l(j, i) - lk + 1, q) * qint_signed(l(j, i) - lk, q)
        for j in range(1, i + 1)
        if j != k
    ]
    val = -(product(num) / product(den))
    return float(val.sqrt())


@lru_cache(maxsize=None)
def _generator_array(lam: Partition, d: int, g: Generator, q: QParam) -> np.ndarray:
    basis = enumerate_ssyt(lam, d)
    N = len(basis)
    if g.kind == "h":
        if not 1 <= g.index <= d:
            raise ValueError(f"h index out of range 1..{d}")
        return np.diag([h_eigenvalue(t, g.index, q) for t in basis])
    if not 1 <= g.index <= d - 1:
        raise ValueError(f"{g.kind} index out of range 1..{d - 1}")
    idx = ssyt_index(lam, d)
    F = np.zeros((N, N))
    for col, t in enumerate(basis):
        for k in range(1, len(t) + 1):
            s = lowered(t, k, g.index)
            if s is not None:
                F[idx[s], col] = f_coefficient(t, k, g.index, q)
    F.setflags(write=False)
    return F if g.kind == "f" else F.T


def generator_matrix(lam: Sequence[int], d: int, g, q) -> LabeledMatrix:
    """Matrix of e_i, f_i or q^{h_i/2} on V^lambda in canonical SSYT order."""
    lam, g, q = Partition(lam), Generator.parse(g), _require_finite(q)
    labels = tuple(t.to_text() for t in enumerate_ssyt(lam, d))
    data = np.array(_generator_array(lam, d, g, q))
    return LabeledMatrix(data, labels, labels, {"generator": str(g), "q": q.tag(), "d": d})


def _site_diag(d: int, i: int, q: QParam, power: int) -> np.ndarray:
    """Diagonal of q^{power * k_i / 2} on the defining representation."""
    e = np.zeros(d, dtype=int)
    e[i - 1] += 1
    if i < d:
        e[i] -= 1
    return np.array([float(qpow_half(power * x, q)) for x in e])


def word_generator_array(n: int, d: int, g, q) -> np.ndarray:
    """Iterated coproduct of g acting on the word basis of V^{(x) n}."""
    g, q = Generator.parse(g), _require_finite(q)
    if g.kind == "h":
        h = np.array([float(qpow_half(1 if x == g.index else 0, q)) for x in range(1, d + 1)])
        diag = np.ones(1)
        for _ in range(n):
            diag = np.kron(diag, h)
        return np.diag(diag)
    one = _generator_array(Partition((1,)), d, Generator(g.kind, g.index), q)
    left = np.diag(_site_diag(d, g.index, q, 1))
    right = np.diag(_site_diag(d, g.index, q, -1))
    out = np.zeros((d**n, d**n))
    for p in range(n):
        term = np.ones((1, 1))
        for s in range(n):
            term = np.kron(term, left if s < p else one if s == p else right)
        out += term
    return out


def word_labels(n: int, d: int) -> tuple[str, ...]:
    return tuple(",".join(map(str, w)) for w in words(n, d))


def word_generator_action(n: int, d: int, g, q) -> LabeledMatrix:
    g, q = Generator.parse(g), _require_finite(q)
    labels = word_labels(n, d)
    return LabeledMatrix(word_generator_array(n, d, g, q), labels, labels, {"generator": str(g), "q": q.tag()})


def _weight_qint(diag_pow: np.ndarray, q: QParam) -> np.ndarray:
    return np.diag([qint_float(int(m), q) for m in diag_pow])


def relation_residuals(
    E: Sequence[np.ndarray], F: Sequence[np.ndarray], H: Sequence[np.ndarray],
    weights: np.ndarray, q,
) -> dict[str, float]:
    """Residuals of the U_q(d) relations for matrices of e_i, f_i, q^{h_i/2}.

    ``weights`` holds the integer h-eigenvalues, shape (dim, d); it is needed
    to form [k_i] exactly at q = 1.
    """
    q = _require_finite(q)
    d = len(H)
    q2 = qint_float(2, q)
    res = {"cartan": 0.0, "weight": 0.0, "commutator": 0.0, "far": 0.0, "serre": 0.0}

    def upd(key, M):
        if M.size:
            res[key] = max(res[key], float(np.abs(M).max()))

    for a in range(d):
        for b in range(d):
            upd("cartan", H[a] @ H[b] - H[b] @ H[a])
    for i in range(d - 1):
        e, f = E[i], F[i]
        for a in range(d):
            shift = (1 if a == i else 0) - (1 if a == i + 1 else 0)
            c = float(qpow_half(shift, q))
            upd("weight", H[a] @ e - c * e @ H[a])
            upd("weight", H[a] @ f - f @ H[a] / c)
        for j in range(d - 1):
            if j == i:
                k = weights[:, i] - weights[:, i + 1]
                upd("commutator", e @ f - f @ e - _weight_qint(k, q))
            else:
                upd("commutator", e @ F[j] - F[j] @ e)
                if abs(i - j) > 1:
                    upd("far", e @ E[j] - E[j] @ e)
                    upd("far", f @ F[j] - F[j] @ f)
                else:
                    for X in (E, F):
                        xi, xj = X[i], X[j]
                        upd("serre", xi @ xi @ xj - q2 * xi @ xj @ xi + xj @ xi @ xi)
    return res


def verify_serre(lam: Sequence[int], d: int, q) -> float:
    """Max residual of all U_q(d) relations on V^lambda."""
    lam, q = Partition(lam), _require_finite(q)
    E = [np.asarray(_generator_array(lam, d, Generator("e", i), q)) for i in range(1, d)]
    F = [np.asarray(_generator_array(lam, d, Generator("f", i), q)) for i in range(1, d)]
    H = [np.asarray(_generator_array(lam, d, Generator("h", i), q)) for i in range(1, d + 1)]
    W = np.array([[t.content_count(i) for i in range(1, d + 1)] for t in enumerate_ssyt(lam, d)])
    W = W.reshape(len(W), d)
    return max(relation_residuals(E, F, H, W, q).values())


def verify_word_relations(n: int, d: int, q) -> float:
    """Max residual of the U_q(d) relations for the coproduct action on words."""
    q = _require_finite(q)
    E = [word_generator_array(n, d, ("e", i), q) for i in range(1, d)]
    F = [word_generator_array(n, d, ("f", i), q) for i in range(1, d)]
    H = [word_generator_array(n, d, ("h", i), q) for i in range(1, d + 1)]
    W = np.array([[w.count(i) for i in range(1, d + 1)] for w in words(n, d)]).reshape(d**n, d)
    return max(relation_residuals(E, F, H, W, q).values())


def branching_blocks(lam: Sequence[int], d: int) -> dict[Partition, list[int]]:
    """Basis indices grouped by sh(t^{(d-1)}), the U_q(d-1) irreducible they span.

    Within a group the basis is ordered as SSYT(mu, d-1), so the generators
    with indices below d-1 restrict to the GTJ matrices of V^mu.
    """
    groups: dict[Partition, list[int]] = {}
    for k, t in enumerate(enumerate_ssyt(Partition(lam), d)):
        groups.setdefault(t.shape_at(d - 1), []).append(k)
    return groups


def defining_rep_check(d: int, q) -> float:
    """Distance of the GTJ action on V^(1) from the defining representation."""
    q = _require_finite(q)
    worst = 0.0
    for i in range(1, d):
        F = np.asarray(_generator_array(Partition((1,)), d, Generator("f", i), q))
        target = np.zeros((d, d))
        target[i, i - 1] = 1.0
        worst = max(worst, float(np.abs(F - target).max()))
    return worst


__all__ = [
    "Generator", "h_eigenvalue", "lowered", "f_coefficient", "generator_matrix",
    "word_generator_action", "word_generator_array", "word_labels", "verify_serre",
    "verify_word_relations", "relation_residuals", "branching_blocks", "defining_rep_check",
]
