import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qschur.gtj import generator_matrix
from qschur.insertion import dual_rsk_insert, q_insert, rsk_insert
from qschur.pieri import (
    Factor,
    contexts,
    covering_shapes,
    limit_value,
    pieri_column,
    pieri_matrix,
    reduced_wigner_transform,
    type0_factor,
    w0,
    w0_limit,
    w1,
    w1_limit,
    wigner,
    wigner_context,
    wigner_recursive,
)
from qschur.qarith import DivergentLimitError
from qschur.tableaux import SemiStandardTableau, enumerate_ssyt, partitions

from oracles import intertwiner_nullspace, qnum

T = SemiStandardTableau.from_text
EX_T, EX_S = T("1,1,2/2,3"), T("1,1,2/2,2/3")


def all_columns(d, n_max):
    for n in range(n_max + 1):
        for lam in partitions(n, d):
            for t in enumerate_ssyt(lam, d):
                for i in range(1, d + 1):
                    yield t, i


@pytest.mark.parametrize("q", [0.5, 1.0, 2.0])
def test_worked_example_values(q):
    ctx = wigner_context(EX_S, EX_T, 2)
    assert ctx.rows == (2, 3) and ctx.chain == (2, 3)
    assert w0(ctx, q) == pytest.approx(q**-1 / math.sqrt(qnum(3, q)), rel=1e-12)
    assert w1(ctx, 3, q) == pytest.approx(-q * math.sqrt(qnum(4, q) / (qnum(2, q) * qnum(5, q))), rel=1e-12)
    expect = -math.sqrt(qnum(4, q) / (qnum(2, q) * qnum(3, q) * qnum(5, q)))
    assert wigner(EX_S, EX_T, 2, q) == pytest.approx(expect, rel=1e-12)


def test_listed_example_values_are_not_normalizable():
    # The listed values exceed 1 in magnitude at q = 1, impossible for an
    # entry of an orthogonal matrix; the computed column has unit norm.
    assert 4 * 2 / (3 * math.sqrt(5)) > 1
    col = dict(pieri_column(EX_T, 2, 1.0))
    assert sum(v * v for v in col.values()) == pytest.approx(1.0, abs=1e-12)


def test_trivial_cases():
    assert wigner(T("1"), T(""), 1, 2.0) == pytest.approx(1.0)
    assert wigner(T("3"), T(""), 3, 0.3) == pytest.approx(1.0)
    assert wigner(T("1,1"), T("1"), 2, 2.0) == 0.0
    assert wigner(T("1,2/3"), T("1,2"), 3, 2.0) == pytest.approx(w0(wigner_context(T("1,2/3"), T("1,2"), 3), 2.0))


def test_small_cg_matrix_at_q1():
    P = pieri_matrix((1,), 2, 1.0)
    assert P.shapes == [(2,), (1, 1)]
    r = 1 / math.sqrt(2)
    # singlet (|12> - |21>)/sqrt2: inserting 1 under 2 carries the bumping sign
    expect = np.array([[1, 0, 0, 0], [0, r, r, 0], [0, 0, 0, 1], [0, r, -r, 0]])
    assert np.allclose(P.dense(), expect)


def test_empty_shape():
    P = pieri_matrix((), 3, 2.0)
    assert np.array_equal(P.dense(), np.eye(3))


@pytest.mark.parametrize("d", [1, 2, 3])
@pytest.mark.parametrize("q", [0.5, 1.0, 2.0, 4.0])
def test_pieri_orthogonal(d, q):
    for n in range(5):
        for lam in partitions(n, d):
            P = pieri_matrix(lam, d, q).dense()
            assert P.shape[0] == P.shape[1]
            assert np.abs(P @ P.T - np.eye(len(P))).max(initial=0) < 1e-9


@pytest.mark.parametrize("lam,d", [(lam, d) for d in (2, 3) for n in range(0, 4) for lam in partitions(n, d)])
@pytest.mark.parametrize("q", [0.5, 1.0, 2.0])
def test_pieri_matches_intertwiner_oracle(lam, d, q):
    # Each block is the unique normalized intertwiner V^lam (x) V -> V^mu, up to sign.
    ops = []
    nl = len(enumerate_ssyt(lam, d))
    for i in range(1, d):
        kl = np.diag([t.content_count(i) - t.content_count(i + 1) for t in enumerate_ssyt(lam, d)])
        k1 = np.diag([(x == i) - (x == i + 1) for x in range(1, d + 1)])
        Kl, K1 = np.diag(q ** (np.diag(kl) / 2)), np.diag(q ** (np.diag(k1) / 2.0))
        for kind in "ef":
            G = generator_matrix(lam, d, (kind, i), q).data if nl else np.zeros((0, 0))
            g1 = generator_matrix((1,), d, (kind, i), q).data
            ops.append(((kind, i), np.kron(G, np.linalg.inv(K1)) + np.kron(Kl, g1)))
    for i in range(1, d + 1):
        H = generator_matrix(lam, d, ("h", i), q).data
        ops.append((("h", i), np.kron(H, generator_matrix((1,), d, ("h", i), q).data)))
    P = pieri_matrix(lam, d, q)
    for mu, B in P.blocks.items():
        X = B.toarray()
        R = [generator_matrix(mu, d, g, q).data for g, _ in ops]
        Y = intertwiner_nullspace([D for _, D in ops], R) if d > 1 else np.ones_like(X)
        sign = np.sign(np.vdot(X, Y))
        assert np.abs(X - sign * Y).max() < 1e-8


@pytest.mark.parametrize("d", [2, 3, 4])
def test_support_within_q_insertion(d):
    for t, i in all_columns(d, 4 if d < 4 else 3):
        support = {o.result for o in q_insert(t, i)}
        for s, v in pieri_column(t, i, 1.3):
            assert s in support


@pytest.mark.parametrize("d", [2, 3])
def test_recursive_form_agrees(d):
    for q in (0.5, 2.0):
        for t, i in all_columns(d, 4):
            for ctx in contexts(t, i):
                a = wigner(ctx.s, t, i, q)
                assert wigner_recursive(ctx.s, t, i, q) == pytest.approx(a, rel=1e-12, abs=1e-15)


@pytest.mark.parametrize("d", [2, 3])
def test_sign_matches_bumping_sign_at_q1(d):
    for t, i in all_columns(d, 4):
        signs = {}
        for o in q_insert(t, i):
            signs.setdefault(o.result, set()).add(o.sign)
        for s, v in pieri_column(t, i, 1.0):
            assert {int(np.sign(v))} == signs[s]


@pytest.mark.parametrize("limit,ins", [("infinity", rsk_insert), ("zero", dual_rsk_insert)])
@pytest.mark.parametrize("d", [2, 3, 4])
def test_crystal_columns_are_insertions(limit, ins, d):
    for t, i in all_columns(d, 4 if d < 4 else 3):
        col = pieri_column(t, i, limit)
        out = ins(t, i)
        assert col == [(out.result, float(out.sign))]


@pytest.mark.parametrize("d", [2, 3, 4])
def test_limit_case_analysis_matches_exponent_count(d):
    for t, i in all_columns(d, 5 if d < 4 else 3):
        for ctx in contexts(t, i):
            fs = ctx.factors()
            for limit in ("zero", "infinity"):
                rule = [w0_limit(ctx, limit)] + [w1_limit(ctx, m, limit) for m, _, _ in ctx.steps]
                assert [float(limit_value(f, limit)) for f in fs] == rule


def test_limit_examples():
    ctx = wigner_context(T("1,2,2"), T("2,2"), 1)
    assert w0_limit(ctx, "infinity") == 1
    ctx = wigner_context(T("1,1/2/3"), T("1,1/3"), 2)
    assert ctx.steps == ((3, 2, 3),)
    assert w1_limit(ctx, 3, "infinity") == -1
    ctx = wigner_context(T("1,2,3"), T("1,3"), 2)
    assert ctx.steps == ((3, 1, 1),)
    assert w1_limit(ctx, 3, "zero") == 1 and w1_limit(ctx, 3, "infinity") == 0
    ctx = wigner_context(T("1,2/2,3"), T("1,3/2"), 2)
    assert w1_limit(ctx, 3, "zero") == 0


@pytest.mark.parametrize("d", [2, 3])
def test_finite_q_approaches_limits(d):
    for q, limit in ((1e3, "infinity"), (1e-3, "zero")):
        for t, i in all_columns(d, 3):
            for ctx in contexts(t, i):
                a, b = wigner(ctx.s, t, i, q), wigner(ctx.s, t, i, limit)
                assert abs(a - b) < 0.05
                if b:
                    assert np.sign(a) == b


def test_divergent_factor():
    with pytest.raises(DivergentLimitError):
        limit_value(Factor(1, 2, (), ()), "infinity")
    assert float(limit_value(Factor(-1, 0, (3,), (3,)), "zero")) == -1.0
    assert float(limit_value(Factor(1, 0, (0,), (3,)), "zero")) == 0.0


def test_type0_factor_data():
    ctx = wigner_context(EX_S, EX_T, 2)
    f = type0_factor(ctx.level(2), 2)
    assert f.exponent == -2 and f.num == (1,) and f.den == (3,)


@given(st.sampled_from([0.3, 0.9, 1.0, 1.6, 7.0]), st.integers(1, 4), st.data())
@settings(max_examples=60, deadline=None)
def test_column_normalization(q, d, data):
    lam = data.draw(st.sampled_from([p for n in range(6) for p in partitions(n, d)]))
    t = data.draw(st.sampled_from(enumerate_ssyt(lam, d)))
    i = data.draw(st.integers(1, d))
    assert sum(v * v for _, v in pieri_column(t, i, q)) == pytest.approx(1.0, abs=1e-9)


def test_covering_shapes():
    assert covering_shapes((2, 1), 2) == [(3, 1), (2, 2)]
    assert covering_shapes((2, 1), 3) == [(3, 1), (2, 2), (2, 1, 1)]


@pytest.mark.parametrize("q", [0.5, 1.0, 3.0])
def test_reduced_transform_orthogonal(q):
    count = 0
    for m in range(1, 5):
        for n in range(0, 6):
            for lam in partitions(n, m):
                for k in range(0, n + 1):
                    for mp in partitions(k, m - 1):
                        M = reduced_wigner_transform(lam, mp, m, q)
                        if M.data.size == 0:
                            continue
                        count += 1
                        assert M.shape[0] == M.shape[1]
                        assert np.abs(M.data.T @ M.data - np.eye(M.shape[0])).max() < 1e-9
                        Mp = reduced_wigner_transform(lam, mp, m, q, pad=True).data
                        assert Mp.shape == (m, m)
                        assert np.abs(Mp.T @ Mp - np.eye(m)).max() < 1e-9
    assert count > 100


def test_reduced_transform_small():
    M = reduced_wigner_transform((1,), (1,), 2, 1.0)
    assert M.col_labels == ("1", "2") and M.row_labels == ("1", "2")
    r = 1 / math.sqrt(2)
    assert np.allclose(np.abs(M.data), r)
    E = reduced_wigner_transform((), (), 1, 2.0)
    assert np.array_equal(E.data, [[1.0]])


def test_fixed_t_matrix_is_not_orthogonal():
    # Holding t fixed and varying (i, output row) does not give a unitary:
    # the controlled form above is the one that is.
    t, q, d = T("1,2"), 2.0, 2
    M = np.zeros((d, d))
    for i in range(1, d + 1):
        for ctx in contexts(t, i):
            M[ctx.rows[-1] - 1, i - 1] = wigner(ctx.s, t, i, q)
    assert np.abs(M.T @ M - np.eye(d)).max() > 1e-3


def test_pieri_labels():
    P = pieri_matrix((1,), 2, 1.0)
    L = P.labeled()
    assert L.col_labels == ("1|1", "1|2", "2|1", "2|2")
    assert L.row_labels[0] == "[2]:1,1"
    with pytest.raises(ValueError):
        pieri_matrix((1, 1, 1), 2, 1.0)
