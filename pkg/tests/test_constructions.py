import pytest

from sierpinski_codes.codes import CodeKind, is_locating_dominating, is_total_dominating, verify
from sierpinski_codes.constructions import (
    conjecture_bound, construct, identifying_code, locating_dominating_code, predicted_size,
    total_dominating_code,
)
from sierpinski_codes.graph import ParameterError, new_graph

UP_TO_10K = [(n, k) for n in range(2, 9) for k in range(3, 11) if k**n <= 10**4]
BUILT = [CodeKind.IDENTIFYING, CodeKind.LOCATING_DOMINATING, CodeKind.TOTAL_DOMINATING]


def labels(n, k, code):
    return set(code.labels(new_graph(n, k)))


def test_identifying_examples():
    assert labels(2, 3, identifying_code(2, 3)) == {(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)}
    assert len(identifying_code(3, 3)) == 18
    code = identifying_code(2, 4)
    assert len(code) == 12 and verify(new_graph(2, 4), code, "id").valid


def test_locating_dominating_examples():
    assert labels(2, 3, locating_dominating_code(2, 3)) == {(0, 1), (1, 2), (2, 0)}
    code = locating_dominating_code(2, 4)
    assert labels(2, 4, code) == {(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)}
    assert is_locating_dominating(new_graph(2, 4), code).valid
    assert len(locating_dominating_code(3, 3)) == 9


def test_total_dominating_examples():
    assert labels(2, 4, total_dominating_code(2, 4)) == {(0, 1), (1, 0), (2, 3), (3, 2)}
    assert labels(2, 3, total_dominating_code(2, 3)) == {(0, 1), (1, 0), (2, 0), (2, 1)}
    code = total_dominating_code(3, 3)
    assert len(code) == 10 and is_total_dominating(new_graph(3, 3), code).valid


@pytest.mark.parametrize("n,k", UP_TO_10K)
@pytest.mark.parametrize("kind", BUILT, ids=lambda k: k.value)
def test_constructions_verify_with_exact_size(n, k, kind):
    code = construct(kind, n, k)
    assert len(code) == predicted_size(kind, n, k)
    assert verify(new_graph(n, k), code, kind).valid


@pytest.mark.parametrize("n,k", [p for p in UP_TO_10K if p[1] ** p[0] <= 2000])
def test_identifying_code_is_also_ld_and_td(n, k):
    g = new_graph(n, k)
    code = identifying_code(n, k)
    assert verify(g, code, "ld").valid and verify(g, code, "td").valid


@pytest.mark.parametrize("n,k", UP_TO_10K)
def test_ld_shape(n, k):
    g = new_graph(n, k)
    code = locating_dominating_code(n, k)
    for u, v in g.crossing_edges():
        lu, lv = g.label(u), g.label(v)
        if lu[:-2] == lv[:-2]:  # crossing edge inside one level-2 block
            assert (u in code) != (v in code)
    assert all(K & code.members for K in g.cliques())


@pytest.mark.parametrize("n,k", [p for p in UP_TO_10K if p[1] % 2 == 0])
def test_td_even_shape(n, k):
    g = new_graph(n, k)
    code = total_dominating_code(n, k)
    assert all(len(K & code.members) == 1 for K in g.cliques())
    for u in code:
        assert sum(v in code for v in g.neighbors(u)) == 1


@pytest.mark.parametrize("n,k", [p for p in UP_TO_10K if p[1] % 2 == 1])
def test_td_odd_size(n, k):
    assert len(total_dominating_code(n, k)) == k ** (n - 1) + 1


def test_deterministic():
    for kind in BUILT:
        assert construct(kind, 3, 5) == construct(kind, 3, 5)


def test_predicted_size_examples():
    assert predicted_size("dom", 2, 3) == 3
    assert predicted_size("dom", 3, 3) == 7
    assert predicted_size("td", 2, 5) == 6
    assert predicted_size("id", 3, 4) == 48
    assert predicted_size("ld", 4, 3) == 27


def test_dominating_formula_is_integral():
    for n in range(2, 12):
        for k in range(3, 15):
            predicted_size(CodeKind.DOMINATING, n, k)


def test_conjecture_bound():
    assert conjecture_bound(2, 3) == 6
    assert conjecture_bound(3, 4) == 48
    for n in range(2, 7):
        for k in range(3, 9):
            assert conjecture_bound(n, k) == predicted_size("id", n, k)


@pytest.mark.parametrize("fn", [identifying_code, locating_dominating_code, total_dominating_code])
def test_rejects_n1(fn):
    with pytest.raises(ParameterError):
        fn(1, 3)


def test_no_dominating_construction():
    with pytest.raises(NotImplementedError):
        construct("dom", 2, 3)
