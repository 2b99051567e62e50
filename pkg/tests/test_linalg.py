from fractions import Fraction

from hypothesis import given, settings, strategies as st

from assocgraded.linalg import Echelon, intersect_spans, kernel

from oracles import rank

vec = st.dictionaries(st.integers(0, 6), st.integers(-3, 3).map(Fraction), max_size=4)
vecs = st.lists(vec.map(lambda d: {k: v for k, v in d.items() if v}), max_size=6)


@settings(max_examples=100, deadline=None)
@given(vecs)
def test_echelon_rank_matches_gaussian_elimination(rows):
    ech = Echelon()
    for r in rows:
        ech.add(r)
    assert len(ech) == rank(rows)
    for r in rows:
        assert ech.contains(r)


@settings(max_examples=100, deadline=None)
@given(vecs)
def test_kernel_vectors_map_to_zero(rows):
    ker = kernel(rows, list(range(len(rows))))
    assert len(ker) == len(rows) - rank(rows)
    for _, coeffs in ker:
        total = {}
        for i, c in coeffs.items():
            for k, v in rows[i].items():
                total[k] = total.get(k, 0) + c * v
        assert all(v == 0 for v in total.values())


@settings(max_examples=100, deadline=None)
@given(vecs, vecs)
def test_intersection_dimension_formula(a, b):
    inter = intersect_spans(a, b)
    assert len(inter) == rank(a) + rank(b) - rank(a + b)
    ea, eb = Echelon(), Echelon()
    for r in a:
        ea.add(r)
    for r in b:
        eb.add(r)
    for _, row in inter.sorted_rows():
        assert ea.contains(row) and eb.contains(row)
