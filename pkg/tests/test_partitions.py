import pytest
from hypothesis import given
from hypothesis import strategies as st

from schubert_gaudin.partitions import (
    NotAdmissible,
    Partition,
    Weight,
    alpha_pairing,
    codimension,
    dual_partition,
    partition_of_k,
    partitions_in_box,
    special_partition,
)


@st.composite
def partitions(draw, max_rank=4, max_part=6, rank=None):
    N = rank if rank is not None else draw(st.integers(1, max_rank))
    parts = sorted(draw(st.lists(st.integers(0, max_part), min_size=N, max_size=N)), reverse=True)
    return Partition(tuple(parts))


P = Partition.of


def test_partition_validation():
    with pytest.raises(ValueError):
        P(1, 2)
    with pytest.raises(ValueError):
        P(2, -1)
    with pytest.raises(ValueError):
        Partition(())


def test_partition_json():
    assert P(2, 1).to_json() == {"N": 2, "entries": [2, 1]}
    assert Partition.from_json({"N": 2, "entries": [2, 1]}) == P(2, 1)
    assert Partition.from_json([3, 0]) == P(3, 0)
    with pytest.raises(ValueError, match="rank mismatch"):
        Partition.from_json({"N": 3, "entries": [2, 1]})


@pytest.mark.parametrize("w, expected", [(P(2, 1), 3), (P(0, 0, 0), 0), (P(3, 0), 3)])
def test_codimension(w, expected):
    assert codimension(w) == expected


@pytest.mark.parametrize(
    "w, expected",
    [(P(3, 0), P(3, 3)), (P(2, 1, 0), P(2, 2, 1)), (P(0, 0, 0), P(0, 0, 0)), (P(2, 2), P(2, 0))],
)
def test_dual_partition(w, expected):
    assert dual_partition(w) == expected


@pytest.mark.parametrize(
    "w, i, expected", [(P(2, 1), 1, 1), (P(2, 1), 2, 1), (P(4, 0, 0), 1, 4), (P(4, 0, 0), 3, 0)]
)
def test_alpha_pairing(w, i, expected):
    assert alpha_pairing(w, i) == expected


def test_alpha_pairing_range():
    with pytest.raises(IndexError):
        alpha_pairing(P(2, 1), 3)
    with pytest.raises(IndexError):
        alpha_pairing(P(2, 1), 0)


def test_partition_of_k_examples():
    # the weight at -1 is (d - N) lambda_1 = (3, 0) for the first example
    assert partition_of_k((P(2, 1), P(3, 0)), (2, 1)) == P(2, 1)
    assert partition_of_k((P(3, 0), P(3, 0)), (3, 0)) == P(3, 3)
    assert partition_of_k((P(2, 1), P(2, 0)), (1, 1)) == P(2, 0)
    assert partition_of_k((P(2, 1, 0), P(2, 0, 0)), (2, 1, 0)) == P(2, 2, 1)
    assert partition_of_k((P(2, 1), P(3, 0)), (0, 0)) == P(5, 1)


def test_partition_of_k_rejects_non_dominant():
    with pytest.raises(NotAdmissible, match="not admissible"):
        partition_of_k((P(1, 0),), (0, 1))
    with pytest.raises(ValueError):
        partition_of_k((P(1, 0),), (1,))


def test_weight_normalization():
    w = Weight((3, 2, 1))
    assert w.coeffs == (2, 1, 0)
    assert Weight.simple_root(1, 2).dynkin_labels() == (2, -1)
    assert Weight.simple_root(2, 2).dynkin_labels() == (-1, 2)
    with pytest.raises(NotAdmissible):
        Weight.simple_root(1, 2).to_partition()


def test_partitions_in_box():
    box = partitions_in_box(2, 2)
    assert len(box) == 6
    assert P(2, 2) in box and P(0, 0) in box
    assert special_partition(3, 2) == P(3, 0)


@given(partitions())
def test_dual_is_involution(w):
    assert dual_partition(dual_partition(w)) == w


@given(partitions())
def test_dual_codimension(w):
    assert codimension(dual_partition(w)) == w.N * w[0] - (codimension(w) - w[0])


@given(partitions())
def test_weight_round_trip(w):
    assert w.to_weight().to_partition() == w
    assert w.to_weight().dynkin_labels() == w.dynkin_labels()


@given(st.integers(1, 3), st.data())
def test_partition_of_k_dominant_when_defined(N, data):
    ws = data.draw(st.lists(partitions(rank=N), min_size=1, max_size=3))
    k = data.draw(st.lists(st.integers(0, 5), min_size=N, max_size=N))
    try:
        res = partition_of_k(ws, k)
    except NotAdmissible:
        return
    assert all(alpha_pairing(res, i) >= 0 for i in range(1, N + 1))
    # the weight equals the sum of highest weights minus the roots
    total = ws[0].to_weight()
    for w in ws[1:]:
        total = total + w.to_weight()
    for i, ki in enumerate(k, start=1):
        total = total - Weight.simple_root(i, N).scale(ki)
    assert total == res.to_weight()
