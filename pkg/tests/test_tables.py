import itertools

import pytest
from hypothesis import given, strategies as st

from rackq import tables as tb


DIHEDRAL3 = tb.Table(((0, 2, 1), (2, 1, 0), (1, 0, 2)))
THREE_CYCLE = (1, 2, 0)


def test_dihedral_formula_matches_fixed_rows():
    assert tb.dihedral(3) == DIHEDRAL3


def test_validate_dihedral3_all_flags():
    report = tb.validate(DIHEDRAL3)
    assert report == tb.AxiomReport(True, True, True, True, True)


def test_validate_constant_action_three_cycle():
    report = tb.validate(tb.constant_action(THREE_CYCLE))
    assert report.is_rack
    assert not report.idempotent
    assert not report.is_quandle


def test_validate_trivial_quandle():
    assert tb.validate(tb.trivial(4)).is_quandle


def test_validate_invertible_but_not_distributive():
    # x*0 = x, x*1 = 1-x: (0*0)*1 = 1 but (0*1)*(0*1) = 0
    t = tb.Table(((0, 1), (1, 0)))
    report = tb.validate(t)
    assert report.right_invertible
    assert not report.right_self_distributive
    assert not report.is_rack


def test_structural_error_is_not_axiom_false():
    with pytest.raises(ValueError, match="out of range"):
        tb.Table(((0, 3), (1, 0)))
    with pytest.raises(ValueError, match="entries"):
        tb.Table(((0, 1, 0), (1, 0)))


# ---------------------------------------------------------------------------
# inverse operation

def test_inverse_dihedral3_is_self():
    assert tb.inverse_table(DIHEDRAL3) == DIHEDRAL3
    for y in range(3):
        col = DIHEDRAL3.column(y)
        assert tb.compose(col, col) == (0, 1, 2)


def test_inverse_constant_action_inverts_the_bijection():
    inv_cycle = tb.invert_perm(THREE_CYCLE)
    assert tb.inverse_table(tb.constant_action(THREE_CYCLE)) == tb.constant_action(inv_cycle)


def test_inverse_trivial_is_trivial():
    assert tb.inverse_table(tb.trivial(3)) == tb.trivial(3)


def test_inverse_identities_and_involution():
    candidates = tb.enumerate_racks(3) + [tb.Table(((0, 1), (1, 0)))]
    for t in candidates:
        inv = tb.inverse_table(t)
        n = t.order
        for x in range(n):
            for y in range(n):
                assert t.op(inv.op(x, y), y) == x
                assert inv.op(t.op(x, y), y) == x
        assert tb.inverse_table(inv) == t


def test_inverse_error_names_the_column():
    rows = ((0, 0), (1, 0))  # column 1 is constant
    with pytest.raises(ValueError, match="column 1"):
        tb.inverse_table(tb.Table(rows))


def test_dual_of_rack_is_rack_and_dual_of_quandle_is_quandle():
    for t in tb.enumerate_racks(3):
        report = tb.validate(t)
        dual_report = tb.validate(tb.inverse_table(t))
        assert dual_report.is_rack
        assert dual_report.is_quandle == report.is_quandle


# ---------------------------------------------------------------------------
# exponent

def test_exponent_examples():
    assert tb.exponent(tb.trivial(1)) == 1
    assert tb.exponent(tb.trivial(5)) == 1
    assert tb.exponent(DIHEDRAL3) == 2
    assert tb.exponent(tb.constant_action(THREE_CYCLE)) == 3


def test_exponent_requires_rack():
    with pytest.raises(ValueError, match="not a rack"):
        tb.exponent(tb.Table(((0, 1), (1, 0))))


def test_exponent_bounded_by_factorial():
    import math

    for t in tb.enumerate_racks(4, up_to_iso=True):
        assert 1 <= tb.exponent(t) <= math.factorial(t.order)


# ---------------------------------------------------------------------------
# enumeration

def _all_tables(n):
    for flat in itertools.product(range(n), repeat=n * n):
        yield tb.Table(tuple(flat[i * n : (i + 1) * n] for i in range(n)))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_enumeration_matches_all_tables_oracle(n):
    oracle_racks = sorted(t.rows for t in _all_tables(n) if tb.validate(t).is_rack)
    assert [t.rows for t in tb.enumerate_racks(n)] == oracle_racks
    oracle_quandles = sorted(t.rows for t in _all_tables(n) if tb.validate(t).is_quandle)
    assert [t.rows for t in tb.enumerate_racks(n, quandles_only=True)] == oracle_quandles


def test_enumeration_counts():
    # cross-checked against the flat product search and, for n <= 3, the
    # all-tables oracle above
    assert [len(tb.enumerate_racks(n)) for n in (1, 2, 3, 4)] == [1, 2, 13, 114]
    assert [len(tb.enumerate_racks(n, up_to_iso=True)) for n in (1, 2, 3, 4)] == [1, 2, 6, 19]
    assert [len(tb.enumerate_racks(n, quandles_only=True)) for n in (1, 2, 3, 4)] == [1, 1, 5, 36]
    assert [
        len(tb.enumerate_racks(n, quandles_only=True, up_to_iso=True)) for n in (1, 2, 3, 4)
    ] == [1, 1, 3, 7]


def test_enumeration_order5():
    racks = tb.enumerate_racks(5)
    assert len(racks) == 1708
    quandles = tb.enumerate_racks(5, quandles_only=True, up_to_iso=True)
    assert len(quandles) == 22


def test_enumeration_order2_tables():
    racks = tb.enumerate_racks(2, up_to_iso=True)
    assert [t.rows for t in racks] == [
        ((0, 0), (1, 1)),  # trivial quandle
        ((1, 1), (0, 0)),  # constant action by the swap
    ]
    assert len(tb.enumerate_racks(2, quandles_only=True, up_to_iso=True)) == 1


def test_enumeration_deterministic_and_sorted():
    a = tb.enumerate_racks(3)
    b = tb.enumerate_racks(3)
    assert a == b
    assert [t.rows for t in a] == sorted(t.rows for t in a)


def test_enumeration_iso_representatives_are_canonical():
    reps = tb.enumerate_racks(3, up_to_iso=True)
    assert all(tb.canonical_form(t) == t for t in reps)
    assert len({t.rows for t in reps}) == len(reps)


def test_enumeration_rejects_out_of_range_order():
    with pytest.raises(ValueError):
        tb.enumerate_racks(0)
    with pytest.raises(ValueError):
        tb.enumerate_racks(6)


def test_relabel_preserves_axioms():
    t = tb.dihedral(4)
    for p in itertools.permutations(range(4)):
        assert tb.validate(tb.relabel(t, p)).is_quandle


# ---------------------------------------------------------------------------
# mutual distributivity

def test_mutual_distributivity_examples():
    assert tb.mutually_distributive(DIHEDRAL3)
    assert tb.mutually_distributive(tb.constant_action(THREE_CYCLE))


def test_mutual_distributivity_all_small_racks():
    for n in (1, 2, 3):
        for t in tb.enumerate_racks(n):
            assert tb.mutually_distributive(t)
    for t in tb.enumerate_racks(4, up_to_iso=True):
        assert tb.mutually_distributive(t)


# ---------------------------------------------------------------------------
# the doubling/halving pair on the integers

def test_one_sided_inverse_pair():
    ys = (-7, 0, 3)
    for x in range(-200, 201):
        for y in ys:
            assert tb.halve_op(tb.double_op(x, y), y) == x
    failures = {
        x
        for x in range(-200, 201)
        if tb.double_op(tb.halve_op(x, 0), 0) != x
    }
    assert failures == {x for x in range(-200, 201) if x % 2 != 0}


# ---------------------------------------------------------------------------
# .rack format

RACK_TEXT = """\
# dihedral quandle of order 3
3
0 2 1
2 1 0
1 0 2
"""


def test_parse_rack_with_comments():
    assert tb.parse_rack(RACK_TEXT) == DIHEDRAL3


def test_format_parse_roundtrip():
    for t in tb.enumerate_racks(3, up_to_iso=True):
        assert tb.parse_rack(tb.format_rack(t)) == t


def test_parse_rack_entry_out_of_range_has_position():
    with pytest.raises(tb.RackParseError, match="entry out of range") as info:
        tb.parse_rack("3\n0 2 1\n2 7 0\n1 0 2\n")
    assert info.value.line == 3
    assert info.value.column == 2


def test_parse_rack_other_errors():
    with pytest.raises(tb.RackParseError, match="expected order"):
        tb.parse_rack("x\n")
    with pytest.raises(tb.RackParseError, match="expected 2 entries"):
        tb.parse_rack("2\n0\n1 0\n")
    with pytest.raises(tb.RackParseError, match="not an integer"):
        tb.parse_rack("2\n0 a\n1 0\n")
    with pytest.raises(tb.RackParseError, match="expected 2 rows"):
        tb.parse_rack("2\n0 1\n")
    with pytest.raises(tb.RackParseError):
        tb.parse_rack("")


# ---------------------------------------------------------------------------
# property tests

@st.composite
def small_tables(draw):
    n = draw(st.integers(min_value=1, max_value=4))
    rows = draw(
        st.lists(
            st.lists(st.integers(min_value=0, max_value=n - 1), min_size=n, max_size=n),
            min_size=n,
            max_size=n,
        )
    )
    return tb.Table(tuple(tuple(r) for r in rows))


@given(small_tables())
def test_report_flags_are_consistent(t):
    report = tb.validate(t)
    assert report.is_rack == (report.right_invertible and report.right_self_distributive)
    assert report.is_quandle == (report.is_rack and report.idempotent)


@given(small_tables())
def test_rack_text_roundtrip(t):
    assert tb.parse_rack(tb.format_rack(t)) == t


@given(small_tables())
def test_inverse_table_iff_right_invertible(t):
    report = tb.validate(t)
    if report.right_invertible:
        inv = tb.inverse_table(t)
        for x in range(t.order):
            for y in range(t.order):
                assert inv.op(t.op(x, y), y) == x
    else:
        with pytest.raises(ValueError):
            tb.inverse_table(t)
