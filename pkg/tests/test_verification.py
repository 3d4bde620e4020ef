import pytest

from graphdim.core.graph import edgeless
from graphdim.core.types import Law, LawCheck
from graphdim.errors import LawViolationError
from graphdim.service.verification import enforce_laws, expand_laws, verify_laws


def test_expand_laws():
    assert expand_laws(["all"]) == [Law.JOIN, Law.UNION, Law.THEOREM4, Law.BALL, Law.BOUNDS]
    assert expand_laws([]) == expand_laws([Law.ALL])
    assert expand_laws(["bounds", "join"]) == [Law.JOIN, Law.BOUNDS]
    with pytest.raises(ValueError):
        expand_laws(["triangle"])


def test_all_laws_hold_on_pendant_clique(k4_with_pendant):
    checks = verify_laws(k4_with_pendant)

    assert [check.law for check in checks] == expand_laws(["all"])
    assert all(check.passed for check in checks)
    enforce_laws(checks)


def test_theorem4_details(k4_with_pendant):
    (check,) = verify_laws(k4_with_pendant, ["theorem4"])

    assert check.details["lhs"] == check.details["rhs"] == "10"
    assert check.details["equal"] is True
    assert check.details["cover"] == [[0, 1, 2, 3], [3, 4]]


def test_bounds_details_report_saturation(star_k4_n12):
    (check,) = verify_laws(star_k4_n12, [Law.BOUNDS])

    assert check.passed
    assert check.details["lower_connected"] == "7/5"
    assert check.details["dim"] == "7/5"
    assert check.details["saturated_connected"] is True
    assert check.details["violations"] == []


def test_union_law_counts_components(edge_plus_isolated):
    (check,) = verify_laws(edge_plus_isolated, ["union"])

    assert check.passed
    assert check.details["components"] == 2
    assert check.details["lhs"] == "2/3"


def test_empty_graph_is_skipped_where_undefined():
    checks = {check.law: check for check in verify_laws(edgeless(0))}

    assert all(check.passed for check in checks.values())
    assert checks[Law.THEOREM4].details == {"skipped": "empty graph"}
    assert checks[Law.BOUNDS].details == {"skipped": "empty graph"}
    assert checks[Law.JOIN].details["vertex_join"]["lhs"] == "0"


def test_enforce_laws_raises_on_failure():
    failing = [
        LawCheck(law=Law.JOIN, passed=True),
        LawCheck(law=Law.BALL, passed=False, details={"mismatches": [1]}),
    ]
    with pytest.raises(LawViolationError, match="ball"):
        enforce_laws(failing)
