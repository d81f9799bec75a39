import io

import pytest

from branch2.census import (
    FactKind,
    ParseError,
    UnknownKnot,
    ValidationError,
    default_census_text,
    get_census,
    load_census,
    lookup,
    quotient_report,
)
from branch2.involution import QuotientKind, SymmetryType
from branch2.seifert import SeifertInvariants, sfs_h1_order
from branch2.slopes import Slope

from census_rows import HIGHER, ROWS

STATED = {"none": 29, "s0s0": 7, "s1s0": 79, "both-unknotted": 93, "both-knotted": 22}


@pytest.fixture(scope="module")
def census():
    return load_census(default_census_text())


def test_every_row_verbatim(census):
    for ident, names in ROWS.items():
        assert census.rows[ident].knots == names, ident


def test_each_tabulated_knot_once(census):
    listed = [k for names in ROWS.values() for k in names]
    assert len(listed) == len(set(listed))
    assert set(listed) <= set(census.entries)
    # knots carrying only a higher-symmetry remark
    extra = set(census.entries) - set(listed)
    assert extra == {"8_9", "8_12", "8_18"}
    for k in extra:
        assert not census.lookup(k).tabulated


def test_stated_counts_kept_next_to_listed(census):
    for ident, stated in STATED.items():
        assert census.rows[ident].stated == stated
    mismatched = {r.ident: (r.stated, r.listed) for r in census.rows.values() if r.stated not in (None, r.listed)}
    assert mismatched == {"none": (29, 26), "both-unknotted": (93, 95), "both-knotted": (22, 21)}


def test_higher_symmetry(census):
    for group, knots in HIGHER.items():
        for k in knots:
            assert census.lookup(k).higher_symmetry == group
    tagged = {k for k, e in census.entries.items() if e.higher_symmetry}
    assert tagged == {k for ks in HIGHER.values() for k in ks}


def test_torus_rows(census):
    for k in ("3_1", "5_1", "7_1", "9_1"):
        assert census.lookup(k).row == "torus-both-unknotted"
    assert census.lookup("10_124").row == "torus-s1s0-ee"
    assert census.lookup("10_124").torus == (3, 5)


def test_lookup_examples():
    assert lookup("9_32").symmetry_classes == frozenset()
    e = lookup("10_98")
    assert e.symmetry_classes == {SymmetryType.S1E} and e.s1e_quotient_knotted is True
    e = lookup("8_5")
    assert e.symmetry_classes == {SymmetryType.S1S0, SymmetryType.S1E} and e.s1e_quotient_knotted
    with pytest.raises(UnknownKnot):
        lookup("11a_1")


def test_s1e_flag_invariant(census):
    for e in census.entries.values():
        assert (SymmetryType.S1E in e.symmetry_classes) == (e.s1e_quotient_knotted is not None)


def test_report_10_98():
    rep = quotient_report("10_98", Slope(1, 1))
    assert len(rep) == 1
    (q,) = rep.quotients
    assert q.kind is QuotientKind.SURGERY_ON_QUOTIENT_KNOT
    assert (q.knot, q.slope) == ("3_1", Slope(1, 2))
    assert not rep.has_three_sphere()


def test_report_5_2():
    rep = quotient_report("5_2", Slope(1, 3))
    assert len(rep) == 2 and all(q.kind is QuotientKind.THREE_SPHERE for q in rep)
    assert rep.symmetry_group == "Z2+Z2" and not rep.exceptional
    rep = quotient_report("5_2", Slope(1, 2))
    assert rep.symmetry_group == "D_2x4" and rep.exceptional
    assert rep.has_three_sphere()


def test_report_9_32_empty():
    assert list(quotient_report("9_32", Slope(1, 5))) == []


def test_report_follows_equivalent_surgery():
    rep = quotient_report("K_9^2_35", Slope(-2, 1))
    assert rep.via == ("8_6", Slope(2, 1))
    assert rep.symmetry_group == "D_2x2"
    assert all(q.kind is QuotientKind.THREE_SPHERE for q in rep)
    with pytest.raises(UnknownKnot):
        quotient_report("K_9^2_35", Slope(1, 1))


def test_seifert_fact_is_a_homology_sphere():
    facts = [f for f in get_census().facts if f.kind is FactKind.SEIFERT_FIBERED]
    (fact,) = facts
    assert fact.payload[0] == SeifertInvariants.parse("{1,(Oo,0),(-2,1),(-3,1),(-11,2)}")
    assert sfs_h1_order(fact.payload[0]) == 1


def test_torus_ee_attaches_invariants():
    rep = quotient_report("10_124", Slope(1, 1))
    ee = [r for t, r in rep.results if t is SymmetryType.EE][0]
    assert str(ee.quotient.seifert) == "{0,(Oo,0),(3,4),(5,-2),(1,1)}"
    rep = quotient_report("10_124", Slope(2, 1))
    ee = [r for t, r in rep.results if t is SymmetryType.EE][0]
    assert ee.free and ee.quotient.seifert is None


def test_s0s0_singular_not_listed():
    assert len(quotient_report("8_17", Slope.infinity())) == 0
    (q,) = quotient_report("8_17", Slope(0, 1)).quotients
    assert q.kind is QuotientKind.NON_ORIENTABLE_COVER


HEADER = 'row r stated=1 "r"\n'


def test_parse_errors():
    with pytest.raises(ParseError, match="line 2"):
        load_census(HEADER + "knot a classes=XX s1e_quotient=- higher=- row=r\n")
    with pytest.raises(ParseError):
        load_census(HEADER + "knot a classes=- s1e_quotient=- row=r\n")
    with pytest.raises(ParseError):
        load_census(HEADER + "knot a classes=- s1e_quotient=- higher=D5 row=r\n")
    with pytest.raises(ParseError):
        load_census("bogus line\n")
    with pytest.raises(ParseError, match="line 1"):
        load_census('except 5_2 1/0/2 SymmetryGroup Z2 expected "x"\n')
    with pytest.raises(ParseError):
        load_census('except 5_2 1 Nonsense Z2 "x"\n')
    with pytest.raises(ParseError):
        load_census('except 5_2 1 SymmetryGroup Z2 "unterminated\n')


def test_validation_errors():
    line = "knot a classes=- s1e_quotient=- higher=- row=r\n"
    with pytest.raises(ValidationError):
        load_census(HEADER + line + line)
    with pytest.raises(ValidationError):
        load_census(HEADER + "knot a classes=S1E s1e_quotient=- higher=- row=r\n")
    with pytest.raises(ValidationError):
        load_census(HEADER + "knot a classes=S1S0 s1e_quotient=knotted higher=- row=r\n")


def test_load_from_stream_and_env(tmp_path, monkeypatch):
    text = HEADER + "knot a classes=S1S0 s1e_quotient=- higher=- row=r\n"
    c = load_census(io.StringIO(text))
    assert list(c.entries) == ["a"]
    path = tmp_path / "c.txt"
    path.write_text(text)
    monkeypatch.setenv("BRANCH2_CENSUS", str(path))
    assert list(get_census().entries) == ["a"]
    assert len(quotient_report("a", Slope(1, 1), get_census())) == 1
