import pytest
from hypothesis import given, strategies as st

from tieknot.notation import (
    KnotWord,
    NotationError,
    Orientation,
    Region,
    Tuck,
    Wind,
    WindDir,
    classify_final,
    clr_to_tw,
    final_region,
    infer_orientations,
    mirror,
    parse_clr,
    parse_tw,
    render_instructions,
    tw_to_clr,
)

TRINITY = "TWWWTTTUTTU"
ELDREDGE = "TTTWWTTUTTWWU"


def test_parse_tw_trinity_structure():
    knot = parse_tw(TRINITY)
    assert knot.winding_count == 9
    assert knot.tucks == ((7, 1), (9, 1))
    assert knot.serialize() == TRINITY


def test_parse_tw_empty():
    knot = parse_tw("")
    assert knot.items == ()
    assert knot.serialize() == ""
    assert knot.move_count == 1


def test_parse_tw_separated_tucks():
    knot = parse_tw("TWTTU'UU")
    assert knot.windings == (WindDir.T, WindDir.W, WindDir.T, WindDir.T)
    assert knot.tucks == ((4, 1), (4, 2))
    assert knot.serialize() == "TWTTU'UU"


@pytest.mark.parametrize("bad", ["TXW", "U", "UTT", "T'U", "TU'", "TU'T", "TU''U"])
def test_parse_tw_rejects(bad):
    with pytest.raises(NotationError):
        parse_tw(bad)


def test_parse_clr_visits_and_tucks():
    word = parse_clr("RCLCRCLCRCLRURCLU")
    assert len(word.visits) == 15
    assert sum(1 for i in word.items if isinstance(i, Tuck)) == 2


def test_parse_clr_smallest_single_tuck():
    word = parse_clr("LCRU")
    assert word.regions == (Region.LEFT, Region.CENTER, Region.RIGHT)
    assert word.items[-1] == Tuck(1)


def test_parse_clr_adjacency_is_not_a_parse_error():
    word = parse_clr("LL")
    assert word.regions == (Region.LEFT, Region.LEFT)


def test_parse_ignores_whitespace():
    assert parse_tw(" TW WW  TTTUTTU ").serialize() == "TWWWTTTUTTU"
    spaced = "Ri Co Li Co Ri Co Li Co Ri Co Li Ro U Ci Ro Ci Lo U"
    assert parse_clr(spaced).serialize() == "RiCoLiCoRiCoLiCoRiCoLiRoUCiRoCiLoU"


def test_parse_clr_orientation_marks():
    word = parse_clr("LiCoRoU")
    assert word.visits[0].orientation is Orientation.IN
    assert word.visits[2].orientation is Orientation.OUT
    assert word.serialize() == "LiCoRoU"


def test_infer_orientations_reproduces_worked_example():
    # The unannotated form consistent with the published annotation;
    # its widely reproduced variant with ...LRUR... repeats a region.
    word = parse_clr("RCLCRCLCRCLRUCRCLU")
    annotated = infer_orientations(word)
    assert annotated.serialize() == "RiCoLiCoRiCoLiCoRiCoLiRoUCiRoCiLoU"


def test_infer_orientations_smallest():
    assert infer_orientations(parse_clr("LCRU")).serialize() == "LoCiRoU"


def test_infer_orientations_alternates_and_anchors_out():
    word = infer_orientations(parse_clr("LCRLRCRLUCRCLU"))
    orientations = [v.orientation for v in word.visits]
    assert all(a != b for a, b in zip(orientations, orientations[1:]))
    assert orientations[-1] is Orientation.OUT


def test_infer_orientations_needs_a_tuck():
    with pytest.raises(NotationError):
        infer_orientations(parse_clr("LR"))


def test_tw_to_clr_named_knots():
    assert tw_to_clr(parse_tw(TRINITY)).serialize() == "LCLRCRLCURLU"
    assert tw_to_clr(parse_tw(ELDREDGE)).serialize() == "LCRLRCRLUCRCLU"
    assert tw_to_clr(parse_tw("")).serialize() == "L"


def test_clr_to_tw_inverts():
    knot = clr_to_tw(parse_clr("LCLRCRLCURLU"))
    assert knot.start is Region.LEFT
    assert knot.serialize() == TRINITY


def test_clr_to_tw_rejects_repeat():
    with pytest.raises(NotationError):
        clr_to_tw(parse_clr("LCC"))


def test_mirror_swaps_everything():
    knot = parse_tw(TRINITY)
    image = mirror(knot)
    assert image.start is Region.RIGHT
    assert image.serialize() == "WTTTWWWUWWU"
    assert mirror(image) == knot


def test_final_region_steps():
    assert final_region(parse_tw("TT")) is Region.RIGHT
    assert final_region(parse_tw("")) is Region.LEFT
    assert final_region(parse_tw(TRINITY)) is Region.LEFT


def test_classify_final():
    assert classify_final(parse_tw("WW")).value == "Classical-C"
    assert classify_final(parse_tw("TT")).value == "Modern-R"
    assert classify_final(parse_tw(ELDREDGE)).value == "Modern-L"


def test_metrics():
    metrics = parse_tw("TWTTU'UU").metrics()
    assert metrics.winding_count == 4
    assert metrics.move_count == 5
    assert metrics.symbol_count == 7  # four windings, three U characters
    assert metrics.tuck_count == 2
    assert metrics.max_tuck_depth == 2
    assert metrics.net_turn == 2


def test_net_turn_additivity():
    left, right = parse_tw("TWT"), parse_tw("WWTT")
    combined = KnotWord(start=left.start, items=left.items + right.items)
    rebased = KnotWord(start=final_region(left), items=right.items)
    assert final_region(combined) == final_region(rebased)


def test_render_instructions_smallest():
    text = render_instructions(parse_tw("TTU"))
    lines = text.splitlines()
    assert len(lines) == 3
    assert "under the previous bow" in lines[2]


def test_render_instructions_trinity():
    lines = render_instructions(parse_tw(TRINITY)).splitlines()
    assert len(lines) == 11
    assert lines[7].startswith("8. Tuck")
    assert lines[10].startswith("11. Tuck")


def test_render_instructions_deep_tuck_bow():
    text = render_instructions(parse_tw("TWTTUU"))
    assert "4 windings ago" in text


def test_render_instructions_rejects_invalid():
    with pytest.raises(ValueError):
        render_instructions(parse_tw(""))
    with pytest.raises(ValueError):
        render_instructions(parse_tw("TT"))


# -- property tests ---------------------------------------------------------

knot_words = st.builds(
    lambda windings, tucks: _assemble(windings, tucks),
    st.lists(st.sampled_from("TW"), min_size=1, max_size=12),
    st.lists(
        st.tuples(st.integers(min_value=0, max_value=11), st.integers(min_value=1, max_value=4)),
        max_size=4,
    ),
)


def _assemble(windings, tucks):
    items = []
    n = len(windings)
    by_position = {}
    for offset, depth in tucks:
        position = 1 + offset % n
        by_position.setdefault(position, []).append(depth)
    for position, ch in enumerate(windings, start=1):
        items.append(Wind(WindDir(ch)))
        for depth in by_position.get(position, ()):
            items.append(Tuck(depth))
    return KnotWord(items=tuple(items))


@given(knot_words)
def test_serialize_parse_round_trip(knot):
    assert parse_tw(knot.serialize(), knot.start) == knot


@given(knot_words)
def test_mirror_is_an_involution(knot):
    assert mirror(mirror(knot)) == knot
    image = mirror(knot)
    assert image.winding_count == knot.winding_count
    assert image.tucks == knot.tucks
    assert image.metrics().symbol_count == knot.metrics().symbol_count


@given(knot_words)
def test_mirror_reflects_final_region(knot):
    reflected = {Region.LEFT: Region.RIGHT, Region.RIGHT: Region.LEFT, Region.CENTER: Region.CENTER}
    assert final_region(mirror(knot)) == reflected[final_region(knot)]


@given(knot_words)
def test_conversion_round_trip(knot):
    assert clr_to_tw(tw_to_clr(knot)) == knot


@given(knot_words)
def test_clr_serialization_round_trip(knot):
    word = tw_to_clr(knot)
    assert parse_clr(word.serialize()) == word
