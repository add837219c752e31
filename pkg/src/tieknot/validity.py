"""Knot validity: the five tie axioms and the tuck-window rule.

The rules, numbered T1-T5 as is conventional for this language:

* T1 -- no region repeats between consecutive visits;
* T2 -- moves alternate between passing in front of and behind the knot;
* T3 -- a tuck follows an outward move, which for a tuck ending an even
  number of windings before the end of the knot holds automatically;
* T4 -- a knot ends on a tuck (or, exceptionally, on a center visit);
* T5 -- a depth-k tuck needs at least 2k preceding windings.

On top of these, a depth-k tuck is physically possible only when the
window of the 2k windings it spans either starts with W and has
#W - #T = 2 (mod 3) or starts with T and has #T - #W = 2 (mod 3): the
blade must come back around to the one region not involved in the
covering bow.  For k = 1 this reduces to "the last two windings are
equal".

In winding notation T1 and T2 hold by construction, so they are checked
only for region words.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .notation import (
    KnotWord,
    Region,
    RegionWord,
    Tuck,
    WindDir,
    final_region,
)

RULE_NO_REPEAT = "T1"
RULE_ALTERNATE = "T2"
RULE_FRONT_TUCK = "T3"
RULE_ENDING = "T4"
RULE_TUCK_ROOM = "T5"
RULE_WINDOW = "window"
RULE_CAP = "cap"


@dataclass(frozen=True)
class ValidityOptions:
    """Knobs for the validity predicate.

    ``allow_hidden_tucks`` drops the even-parity requirement of T3 so
    that tucks may sit behind the knot; the window rule still applies.
    ``max_moves`` caps the winding length (region symbol count), the
    comfortable bound for a real necktie being 13.
    """

    require_final_tuck: bool = True
    allow_final_center_no_tuck: bool = False
    allow_hidden_tucks: bool = False
    max_tuck_depth: Optional[int] = None
    max_moves: Optional[int] = 13


DEFAULT_OPTIONS = ValidityOptions()


@dataclass(frozen=True)
class Violation:
    rule: str
    position: int
    message: str

    def __str__(self):
        return f"[{self.rule}] at {self.position}: {self.message}"


@dataclass(frozen=True)
class ValidityReport:
    valid: bool
    violations: tuple = ()

    def __post_init__(self):
        assert self.valid == (not self.violations)

    def lines(self):
        if self.valid:
            return ["valid"]
        return ["invalid"] + [str(v) for v in self.violations]

    def to_dict(self):
        return {
            "valid": self.valid,
            "violations": [
                {"rule": v.rule, "position": v.position, "message": v.message}
                for v in self.violations
            ],
        }


def tuck_site_valid(windings: Sequence[WindDir], position: int, k: int) -> bool:
    """Window rule: may a depth-``k`` tuck close after winding ``position``?

    The window is the run of 2k windings ending at ``position``
    (1-based).  Fewer than 2k preceding windings fail T5 and answer
    False rather than raising.
    """
    if not 1 <= position <= len(windings):
        raise ValueError(f"position {position} outside 1..{len(windings)}")
    if k < 1:
        raise ValueError(f"tuck depth must be >= 1, got {k}")
    if position < 2 * k:
        return False
    window = windings[position - 2 * k : position]
    ts = sum(1 for d in window if d is WindDir.T)
    ws = 2 * k - ts
    if window[0] is WindDir.W:
        return (ws - ts) % 3 == 2
    return (ts - ws) % 3 == 2


def tuck_parity_ok(windings_total: int, position: int) -> bool:
    """Front-of-knot rule: tucks sit an even number of windings from the end."""
    return (windings_total - position) % 2 == 0


def tuck_sites(
    windings: Sequence[WindDir], opts: ValidityOptions = DEFAULT_OPTIONS
) -> list:
    """All valid tuck sites as ``(position, depths)`` pairs, ascending.

    For every position that admits at least one depth, ``depths`` is the
    sorted tuple of all k with 2k <= position whose window passes the
    window rule; positions failing the parity rule are skipped unless
    hidden tucks are allowed.  A single point can be valid for several
    depths at once.
    """
    n = len(windings)
    out = []
    for position in range(1, n + 1):
        if not opts.allow_hidden_tucks and not tuck_parity_ok(n, position):
            continue
        depths = []
        for k in range(1, position // 2 + 1):
            if opts.max_tuck_depth is not None and k > opts.max_tuck_depth:
                break
            if tuck_site_valid(windings, position, k):
                depths.append(k)
        if depths:
            out.append((position, tuple(depths)))
    return out


def validate(knot: KnotWord, opts: ValidityOptions = DEFAULT_OPTIONS) -> ValidityReport:
    """Check a winding-notation knot against the axioms.

    Every tuck must clear T5, the window rule, and (unless hidden tucks
    are allowed) the parity form of T3; the word must end in a tuck
    unless the center-ending exception is switched on; depth and length
    caps apply.  T1/T2 cannot be broken in this notation.
    """
    violations = []
    windings = knot.windings
    n = len(windings)

    if opts.max_moves is not None and n + 1 > opts.max_moves:
        violations.append(
            Violation(RULE_CAP, n, f"{n + 1} moves exceed the cap of {opts.max_moves}")
        )

    for position, depth in knot.tucks:
        if opts.max_tuck_depth is not None and depth > opts.max_tuck_depth:
            violations.append(
                Violation(
                    RULE_CAP,
                    position,
                    f"depth-{depth} tuck exceeds the depth cap of {opts.max_tuck_depth}",
                )
            )
            continue
        if position < 2 * depth:
            violations.append(
                Violation(
                    RULE_TUCK_ROOM,
                    position,
                    f"depth-{depth} tuck needs {2 * depth} preceding windings, found {position}",
                )
            )
            continue
        if not tuck_site_valid(windings, position, depth):
            violations.append(
                Violation(
                    RULE_WINDOW,
                    position,
                    f"window does not admit a depth-{depth} tuck after winding {position}",
                )
            )
        if not opts.allow_hidden_tucks and not tuck_parity_ok(n, position):
            violations.append(
                Violation(
                    RULE_FRONT_TUCK,
                    position,
                    "tuck an odd number of windings from the end would sit behind the knot",
                )
            )

    if opts.require_final_tuck:
        ends_in_tuck = bool(knot.items) and isinstance(knot.items[-1], Tuck)
        if not ends_in_tuck:
            if opts.allow_final_center_no_tuck and knot.items and final_region(knot) is Region.CENTER:
                pass
            else:
                violations.append(
                    Violation(RULE_ENDING, n, "knot must end on a tuck (or a center visit)")
                )

    return ValidityReport(valid=not violations, violations=tuple(violations))


def validate_clr(word: RegionWord, opts: ValidityOptions = DEFAULT_OPTIONS) -> ValidityReport:
    """Check a region-notation word: T1/T2 explicitly, the rest via conversion.

    When the word contains a tuck, its orientations are fully determined
    by backtracking, so every explicit mark is checked against the
    forced assignment; a wrong mark just before a tuck is a T3
    violation, elsewhere a T2 violation.  Without a tuck only mutual
    alternation between the marks themselves can be checked.
    """
    from .notation import NotationError, clr_to_tw, infer_orientations

    violations = []
    previous_region = None
    for index, item in enumerate(word.items):
        if isinstance(item, Tuck):
            continue
        if previous_region is not None and item.region == previous_region:
            violations.append(
                Violation(RULE_NO_REPEAT, index, f"region {item.region.value} repeats")
            )
        previous_region = item.region

    has_tuck = any(isinstance(item, Tuck) for item in word.items)
    if has_tuck:
        forced = infer_orientations(word)
        for index, (item, truth) in enumerate(zip(word.items, forced.items)):
            if isinstance(item, Tuck) or item.orientation is None:
                continue
            if item.orientation != truth.orientation:
                before_tuck = index + 1 < len(word.items) and isinstance(
                    word.items[index + 1], Tuck
                )
                rule = RULE_FRONT_TUCK if before_tuck else RULE_ALTERNATE
                detail = (
                    "the move before a tuck must pass in front of the knot"
                    if before_tuck
                    else "moves do not alternate direction"
                )
                violations.append(Violation(rule, index, detail))
    else:
        anchor = None  # (visit rank, orientation) of the last annotated visit
        rank = 0
        for index, item in enumerate(word.items):
            if isinstance(item, Tuck):
                continue
            if item.orientation is not None:
                if anchor is not None:
                    gap = rank - anchor[0]
                    same = item.orientation == anchor[1]
                    if same == (gap % 2 == 1):
                        violations.append(
                            Violation(
                                RULE_ALTERNATE, index, "moves do not alternate direction"
                            )
                        )
                anchor = (rank, item.orientation)
            rank += 1

    if violations:
        return ValidityReport(valid=False, violations=tuple(violations))
    try:
        knot = clr_to_tw(word)
    except NotationError as exc:
        return ValidityReport(
            valid=False, violations=(Violation(RULE_NO_REPEAT, 0, str(exc)),)
        )
    return validate(knot, opts)
