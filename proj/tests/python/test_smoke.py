import pytest

import apolar


def test_docle_and_inverse_ideal_round_trip():
    gens = [[3, 0], [1, 1], [0, 2]]
    doc = apolar.docle(gens)
    assert doc == [[2, 0], [0, 1]]
    assert sorted(apolar.inverse_ideal(doc)) == sorted(gens)


def test_decompose_and_intersect():
    saturated, primary = apolar.decompose([[2, 0], [1, 1]])
    assert apolar.format_ideal(saturated) == "(x1)"
    assert apolar.format_ideal(primary) == "(x1^2, x2)"
    assert sorted(apolar.intersect(saturated, primary)) == [[1, 1], [2, 0]]


def test_closure_whole_poset():
    assert apolar.closure([[1, 1]]) is None
    assert apolar.closure([[1, 0], [0, 1]]) == [[1, 0], [0, 1]]


def test_antipodal_and_gorenstein_checks():
    assert (
        apolar.antipodal(10, "y^6+x^3*y^3+x^5*y", vars=2)
        == "220*t1^9*t2^3 + 924*t1^6*t2^6 + 495*t1^4*t2^8"
    )
    assert apolar.verify_gorenstein_ann(4, "x*y^2+x^2*y+x^3")
    assert apolar.monomial_iff(3, "y") == (True, True)
    assert apolar.series_check(4, "x*y^2+x^2*y+x^3", ["1", "1", "1/2", "1/6", "1/24"])


def test_graded_queries():
    assert apolar.hilbert_function("(x^3, y^2 - x*y)") == [1, 2, 2, 1]
    assert apolar.colon_power(4, "x*y^2+x^2*y+x^3") == apolar.ann("3*t1^2*t2+3*t1*t2^2+t2^3", vars=2)
    assert sorted(apolar.initial_ideal(f"({', '.join(apolar.colon_power(10, 'y^6+x^3*y^3+x^5*y'))})")) == [
        [0, 7], [1, 6], [3, 5], [5, 4], [10, 0]
    ]


def test_errors_map_to_python_exceptions():
    with pytest.raises(apolar.ParseError):
        apolar.parse_ideal("(x^3,")
    with pytest.raises(apolar.DomainError):
        apolar.docle([[0, 0]])
    with pytest.raises(apolar.NotArtinian):
        apolar.hilbert_function("(x^2)", vars=2)
