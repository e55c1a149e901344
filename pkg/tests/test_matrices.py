import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from qschur.matrices import LabeledMatrix


@given(arrays(np.float64, st.tuples(st.integers(0, 5), st.integers(0, 5)), elements=st.floats(allow_nan=False, allow_infinity=False)),
       st.sampled_from(["dense", "sparse"]))
def test_round_trip_bit_exact(data, fmt):
    rows = [f"r{k}" for k in range(data.shape[0])]
    cols = [f"c{k}" for k in range(data.shape[1])]
    m = LabeledMatrix(data, rows, cols, {"q": "0.5", "n": 2})
    back = LabeledMatrix.loads(m.dumps(fmt))
    assert back.row_labels == m.row_labels and back.col_labels == m.col_labels
    assert back.metadata == m.metadata
    if fmt == "dense":
        assert back.data.tobytes() == m.data.tobytes()
    else:
        # sparse drops zeros, so -0.0 comes back as 0.0
        assert np.array_equal(back.data, m.data)
        nz = m.data != 0
        assert back.data[nz].tobytes() == m.data[nz].tobytes()


def test_shape_mismatch():
    with pytest.raises(ValueError):
        LabeledMatrix(np.zeros((2, 2)), ["a"], ["b", "c"])


def test_entry_and_array():
    m = LabeledMatrix([[1.0, 2.0]], ["x"], ["a", "b"])
    assert m.entry("x", "b") == 2.0
    assert np.asarray(m).shape == (1, 2)
    with pytest.raises(ValueError):
        m.to_document("csv")
