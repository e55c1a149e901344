"""Numerical verification suites, shared by the tests and the ``verify`` command."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Callable, Sequence

import numpy as np

from .gtj import verify_serre, verify_word_relations, word_generator_array
from .hecke import t_action_array, verify_hecke_relations, verify_word_hecke_relations
from .pieri import pieri_matrix, wigner, wigner_recursive
from .qarith import as_q, qint, qint_ratio
from .schurweyl import (
    crystal_limit_transform,
    crystal_reference,
    schur_apply,
    schur_matrix,
    unitarity_residual,
    verify_intertwiners,
)
from .tableaux import enumerate_ssyt, partitions

SUITES = ("qarith", "gtj", "hecke", "pieri", "schurweyl")


@dataclass
class Check:
    suite: str
    name: str
    params: dict
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.residual <= self.tolerance)

    def as_dict(self) -> dict:
        return {**asdict(self), "passed": self.passed}


def _qarith(n: int, d: int, qs: Sequence[float]) -> list[Check]:
    out = []
    for q in qs:
        rel = sym = chain = 0.0
        for m in range(1, 51):
            summed = sum(q ** (m - 1 - 2 * k) for k in range(m))
            v = float(qint(m, q))
            if q != 1.0:
                two_term = (q**m - q**-m) / (q - 1 / q)
                rel = max(rel, abs(two_term - summed) / summed)
            rel = max(rel, abs(v - summed) / summed)
            sym = max(sym, abs(v - float(qint(m, 1 / q))) / v)
        for a in range(1, 12):
            for b in range(1, 12):
                for c in range(1, 12):
                    lhs = float(qint_ratio(a, b, q)) * float(qint_ratio(b, c, q))
                    rhs = float(qint_ratio(a, c, q))
                    chain = max(chain, abs(lhs - rhs) / rhs)
        out.append(Check("qarith", "qint_forms", {"q": q}, rel, 1e-12))
        out.append(Check("qarith", "qint_symmetry", {"q": q}, sym, 1e-12))
        out.append(Check("qarith", "ratio_chain", {"q": q}, chain, 1e-12))
    return out


def _gtj(n: int, d: int, qs: Sequence[float]) -> list[Check]:
    out = []
    for q in qs:
        r = max(verify_serre(lam, d, q) for m in range(n + 1) for lam in partitions(m, d))
        out.append(Check("gtj", "irrep_relations", {"n_max": n, "d": d, "q": q}, r, 1e-9))
        out.append(Check("gtj", "word_relations", {"n": n, "d": d, "q": q}, verify_word_relations(n, d, q), 1e-9))
    return out


def _hecke(n: int, d: int, qs: Sequence[float]) -> list[Check]:
    out = []
    for q in qs:
        r = max(verify_hecke_relations(lam, q) for m in range(1, n + 1) for lam in partitions(m))
        out.append(Check("hecke", "yyh_relations", {"n_max": n, "q": q}, r, 1e-10))
        out.append(Check("hecke", "word_relations", {"n": n, "d": d, "q": q}, verify_word_hecke_relations(n, d, q), 1e-10))
        comm = 0.0
        gens = [(k, i) for i in range(1, d) for k in "ef"] + [("h", i) for i in range(1, d + 1)]
        for i in range(1, n):
            T = t_action_array(n, d, i, q)
            for g in gens:
                G = word_generator_array(n, d, g, q)
                comm = max(comm, float(np.abs(T @ G - G @ T).max(initial=0)))
        out.append(Check("hecke", "commutes_with_qgroup", {"n": n, "d": d, "q": q}, comm, 1e-10))
    return out


def _pieri(n: int, d: int, qs: Sequence[float]) -> list[Check]:
    out = []
    for q in qs:
        unit = fact = 0.0
        for m in range(max(n, 1)):
            for lam in partitions(m, d):
                P = pieri_matrix(lam, d, q).dense()
                unit = max(unit, float(np.abs(P @ P.T - np.eye(len(P))).max(initial=0)))
                for mu in pieri_matrix(lam, d, q).shapes:
                    for s in enumerate_ssyt(mu, d):
                        for t in enumerate_ssyt(lam, d):
                            for i in range(1, d + 1):
                                a = wigner(s, t, i, q)
                                if a:
                                    fact = max(fact, abs(a - wigner_recursive(s, t, i, q)))
        out.append(Check("pieri", "unitarity", {"n_max": n, "d": d, "q": q}, unit, 1e-9))
        out.append(Check("pieri", "recursive_form", {"n_max": n, "d": d, "q": q}, fact, 1e-12))
    return out


def _schurweyl(n: int, d: int, qs: Sequence[float]) -> list[Check]:
    out = []
    rng = np.random.default_rng(0)
    for q in qs:
        U = schur_matrix(n, d, q)
        out.append(Check("schurweyl", "unitarity", {"n": n, "d": d, "q": q}, unitarity_residual(U), 1e-9))
        rep = verify_intertwiners(n, d, q, U)
        out.append(Check("schurweyl", "intertwiner_hecke", {"n": n, "d": d, "q": q}, max(rep.off_block, rep.hecke), 1e-9))
        out.append(
            Check("schurweyl", "intertwiner_qgroup", {"n": n, "d": d, "q": q}, max(rep.off_block, rep.qgroup, rep.h_exact), 1e-9)
        )
        diff = 0.0
        for _ in range(3):
            v = rng.normal(size=d**n)
            v /= np.linalg.norm(v)
            diff = max(diff, float(np.abs(schur_apply(v, n, d, q) - U @ v).max()))
            diff = max(diff, float(np.abs(schur_apply(U @ v, n, d, q, "inverse") - v).max()))
        out.append(Check("schurweyl", "streaming_matches_dense", {"n": n, "d": d, "q": q}, diff, 1e-9))
    for limit in ("infinity", "zero"):
        got, ref = crystal_limit_transform(n, d, limit), crystal_reference(n, d, limit)
        mism = sum(got[w] != ref[w] for w in ref)
        out.append(Check("schurweyl", f"crystal_{limit}", {"n": n, "d": d}, float(mism), 0.0))
    return out


_RUNNERS: dict[str, Callable[[int, int, Sequence[float]], list[Check]]] = {
    "qarith": _qarith,
    "gtj": _gtj,
    "hecke": _hecke,
    "pieri": _pieri,
    "schurweyl": _schurweyl,
}


def run_suite(suite: str, n: int, d: int, qs: Sequence, tolerance: float | None = None) -> list[Check]:
    """Run one suite (or "all"); ``tolerance`` overrides every per-check tolerance."""
    qvals = [as_q(q).value for q in qs]
    if any(v is None for v in qvals):
        raise ValueError("verification runs at finite q only")
    names = SUITES if suite == "all" else (suite,)
    checks: list[Check] = []
    for name in names:
        if name not in _RUNNERS:
            raise ValueError(f"unknown suite {name!r}")
        checks.extend(_RUNNERS[name](n, d, qvals))
    if tolerance is not None:
        for c in checks:
            c.tolerance = tolerance
    return checks
