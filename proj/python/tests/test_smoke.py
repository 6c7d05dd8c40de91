from fractions import Fraction

import pytest

import partgen


def test_counts():
    assert [partgen.partition_count(n) for n in range(10)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    assert partgen.partition_count(1500) == 1329461690763193888825263136701886891117
    assert partgen.restricted_count(12, 3) == 9
    assert partgen.ratio_count(15, 2, min_part=3) == 7
    assert partgen.ratio_count(5, 3) == 3


@pytest.mark.parametrize("version", [1, 2, 3])
def test_compositions(version):
    assert partgen.compositions(4, version) == [[1, 1, 1, 1], [1, 1, 2], [1, 3], [2, 2], [4]]
    assert len(partgen.compositions(20, version)) == 627
    assert partgen.compositions(20, version, limit=2) == [[1] * 20, [1] * 18 + [2]]


def test_streaming_stop():
    seen = []
    calls = partgen.for_each_composition(10, lambda c: seen.append(c) or len(seen) < 3)
    assert calls == 3
    assert seen[0] == (1,) * 10


def test_op_counts():
    assert partgen.op_counts(20, 2)["assignments"] == 3476
    assert partgen.op_counts(20, 2)["bool_evals"] == 1353
    assert partgen.op_counts(20, 3)["assignments"] == 3113
    assert partgen.op_counts(20, 3)["bool_evals"] == 1111
    assert all(partgen.check_op_counts(n, v) for n in range(2, 40) for v in (2, 3))


def test_ratios():
    assert partgen.r1(20) == Fraction(3113, 3476)
    assert partgen.r2(20) == Fraction(1111, 1353)
    assert abs(float(partgen.r2(90)) - 0.76271) <= 2e-5


def test_tree_and_decode():
    dot = partgen.tree_dot(6, "partition")
    assert dot.startswith("digraph partition_tree {")
    assert dot.count("->") == 21
    assert partgen.decode_path([(1, 5), (1, 4), (1, 3), (2, 2), (2, 0)]) == [1, 1, 2, 2]


def test_errors():
    with pytest.raises(ValueError):
        partgen.compositions(0)
    with pytest.raises(ValueError):
        partgen.op_counts(1, 2)
    with pytest.raises(OverflowError):
        partgen.tree_dot(41)
    with pytest.raises(partgen.DomainError):
        partgen.compositions(5, 4)


def test_verify():
    assert all(passed for _, passed, _ in partgen.verify(20))
