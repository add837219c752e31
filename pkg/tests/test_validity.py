import itertools

import pytest

from tieknot.notation import WindDir, parse_tw
from tieknot.validity import (
    ValidityOptions,
    tuck_parity_ok,
    tuck_site_valid,
    tuck_sites,
    validate,
    validate_clr,
)
from tieknot.notation import parse_clr


def dirs(text):
    return [WindDir(c) for c in text]


def test_window_rule_worked_example():
    # TWTT ends on an equal pair and, over the whole four windings,
    # carries two more T than W: valid for both depths.
    assert tuck_site_valid(dirs("TWTT"), 4, 1)
    assert tuck_site_valid(dirs("TWTT"), 4, 2)
    assert not tuck_site_valid(dirs("WT"), 2, 1)


def test_window_rule_depth_one_is_equal_pair():
    for a, b in itertools.product("TW", repeat=2):
        assert tuck_site_valid(dirs(a + b), 2, 1) == (a == b)


def test_window_rule_needs_room():
    assert not tuck_site_valid(dirs("TT"), 1, 1)
    assert not tuck_site_valid(dirs("TWTT"), 3, 2)


def test_window_rule_position_range():
    with pytest.raises(ValueError):
        tuck_site_valid(dirs("TT"), 3, 1)
    with pytest.raises(ValueError):
        tuck_site_valid(dirs("TT"), 0, 1)


def test_parity():
    assert tuck_parity_ok(11, 7)
    assert not tuck_parity_ok(3, 2)
    assert tuck_parity_ok(4, 4)


def test_tuck_sites_dual_depth():
    sites = tuck_sites(dirs("TWTT"))
    assert sites == [(4, (1, 2))]


def test_tuck_sites_eldredge_and_trinity():
    eldredge = [(p, d) for p, d in tuck_sites(dirs("TTTWWTTTTWW")) if 1 in d]
    assert [p for p, _ in eldredge] == [3, 5, 7, 9, 11]
    trinity = [(p, d) for p, d in tuck_sites(dirs("TWWWTTTTT")) if 1 in d]
    assert [p for p, _ in trinity] == [3, 7, 9]


def test_tuck_sites_hidden_relaxation_never_shrinks():
    for n in range(2, 9):
        for combo in itertools.product("TW", repeat=n):
            w = dirs("".join(combo))
            strict = {p: set(d) for p, d in tuck_sites(w)}
            relaxed = {p: set(d) for p, d in tuck_sites(w, ValidityOptions(allow_hidden_tucks=True))}
            for position, depths in strict.items():
                assert depths <= relaxed.get(position, set())


def test_validate_named_knots():
    assert validate(parse_tw("TWWWTTTUTTU")).valid
    assert validate(parse_tw("TTTWWTTUTTWWU")).valid
    assert validate(parse_tw("TWTTUU")).valid


def test_validate_rejects_back_tuck():
    report = validate(parse_tw("TTUWT" + "TU"))  # internal tuck at odd remainder
    assert not report.valid
    assert any(v.rule == "T3" for v in report.violations)


def test_validate_rejects_bad_window():
    report = validate(parse_tw("TWU"))
    assert not report.valid
    assert any(v.rule == "window" for v in report.violations)


def test_validate_requires_final_tuck():
    report = validate(parse_tw("TT"))
    assert not report.valid
    assert any(v.rule == "T4" for v in report.violations)


def test_validate_final_center_exception():
    opts = ValidityOptions(allow_final_center_no_tuck=True)
    assert validate(parse_tw("WW"), opts).valid  # ends in the center
    assert not validate(parse_tw("TT"), opts).valid


def test_validate_depth_and_move_caps():
    assert not validate(parse_tw("TWTTUU"), ValidityOptions(max_tuck_depth=1)).valid
    long_knot = parse_tw("TT" * 7 + "U")
    assert not validate(long_knot).valid  # 15 moves > default cap
    assert validate(long_knot, ValidityOptions(max_moves=None)).valid


def test_validate_needs_enough_room():
    report = validate(parse_tw("TTUU"), ValidityOptions(max_moves=None))
    assert any(v.rule == "T5" for v in report.violations)


def test_validate_monotone_under_relaxation():
    for n in range(2, 8):
        for combo in itertools.product("TW", repeat=n):
            text = "".join(combo) + "U"
            knot = parse_tw(text)
            strict = validate(knot)
            relaxed = validate(knot, ValidityOptions(allow_hidden_tucks=True))
            if strict.valid:
                assert relaxed.valid


def test_validate_clr_axioms():
    report = validate_clr(parse_clr("LL"))
    assert not report.valid
    assert report.violations[0].rule == "T1"

    report = validate_clr(parse_clr("LoCoRU"))
    assert not report.valid
    assert report.violations[0].rule == "T2"

    assert validate_clr(parse_clr("LCRU")).valid


def test_validate_clr_marks_against_forced_orientations():
    assert validate_clr(parse_clr("LoCiRoU")).valid
    # A wrong mark just before the tuck breaks T3; elsewhere T2.
    report = validate_clr(parse_clr("LoCiRiU"))
    assert report.violations[0].rule == "T3"
    report = validate_clr(parse_clr("LiCiRoU"))
    assert report.violations[0].rule == "T2"
    # Without a tuck, marks are only checked against each other:
    # Li C Ri is mutually consistent across the unmarked center visit.
    report = validate_clr(parse_clr("LiCRi"))
    assert all(v.rule != "T2" for v in report.violations)


def test_validate_clr_worked_example_annotations():
    word = parse_clr("RiCoLiCoRiCoLiCoRiCoLiRoUCiRoCiLoU")
    assert validate_clr(word, ValidityOptions(max_moves=None)).valid


def test_final_tuck_follows_outward_move():
    # With orientations inferred, the visit before each tuck is outward.
    from tieknot.notation import Orientation, Tuck, infer_orientations, tw_to_clr
    from tieknot.enumeration import single_tuck_knots

    for text in single_tuck_knots(9):
        word = infer_orientations(tw_to_clr(parse_tw(text)))
        previous = None
        for item in word.items:
            if isinstance(item, Tuck):
                assert previous is Orientation.OUT
            else:
                previous = item.orientation
