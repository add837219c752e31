"""Production grammars for the tie-knot languages, with generation and counting.

Four grammars are built in:

* :func:`fm_grammar` -- the classical Fink--Mao knots in region notation
  (flat facade, final tuck from the center);
* :func:`single_tuck_tw_grammar` -- knots whose tucks all have depth 1,
  in winding notation;
* :func:`single_tuck_clr_grammar` -- the same language in region
  notation, optionally restricted by the region of the final tuck;
* :func:`full_grammar` -- the context-free language of knots with tucks
  of arbitrary depth, in winding notation.

Every terminal carries a size weight so that the coefficient of z^d in
the counting series means exactly what the published series for each
language count.  The conventions (frozen after checking low-order
coefficients against independent enumeration):

========================  =======================  ======================
grammar                   weights                  size of a member
========================  =======================  ======================
fm / single-tuck CLR      L,C,R = 1; U = 0         region symbols (moves)
single-tuck TW            T,W = 1; final U = 1,    moves
                          inner U = 0
full                      T,W = 1; U,' = 0         windings (moves - 1)
========================  =======================  ======================

:func:`count_by_size` counts by dynamic programming over (nonterminal,
size); :func:`generate` walks all derivations up to a size bound.  For
unambiguous grammars the two agree bucket by bucket, which the test
suite verifies against a grammar-free enumeration oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

from .genfunc import Series
from .notation import Region


class GrammarError(ValueError):
    pass


@dataclass(frozen=True)
class T:
    """A terminal symbol with its size weight."""

    symbol: str
    weight: int = 1

    def __post_init__(self):
        if self.weight < 0:
            raise GrammarError(f"negative weight on terminal {self.symbol!r}")


@dataclass(frozen=True)
class N:
    """A reference to a nonterminal."""

    name: str


Item = Union[T, N]


@dataclass(frozen=True)
class Grammar:
    """A production system: ``productions[name]`` lists the alternatives
    for that nonterminal, each a tuple of terminals and nonterminals."""

    start: str
    productions: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.start not in self.productions:
            raise GrammarError(f"start symbol {self.start!r} has no production")
        for name, alternatives in self.productions.items():
            for alternative in alternatives:
                for item in alternative:
                    if isinstance(item, N) and item.name not in self.productions:
                        raise GrammarError(
                            f"nonterminal {item.name!r} used in {name!r} is undefined"
                        )

    @property
    def nonterminals(self):
        return set(self.productions)

    @property
    def terminals(self):
        return {
            item.symbol
            for alternatives in self.productions.values()
            for alternative in alternatives
            for item in alternative
            if isinstance(item, T)
        }

    def to_text(self) -> str:
        """One production per line in a plain BNF-like form."""
        lines = []
        for name, alternatives in self.productions.items():
            rendered = []
            for alternative in alternatives:
                if not alternative:
                    rendered.append("<empty>")
                    continue
                rendered.append(
                    " ".join(
                        f'"{i.symbol}"' if isinstance(i, T) else f"<{i.name}>"
                        for i in alternative
                    )
                )
            lines.append(f"<{name}> ::= " + " | ".join(rendered))
        return "\n".join(lines)


def count_by_size(grammar: Grammar, max_size: int) -> Series:
    """Members of the language per size, 0..max_size, by exact DP.

    Counts derivations; for the built-in grammars (which are
    unambiguous) this equals the number of distinct members.  A cycle of
    zero-weight productions would make counts diverge and is reported as
    an error.
    """
    names = sorted(grammar.productions)
    counts = {name: [0] * (max_size + 1) for name in names}

    def ways(alternative, size):
        # Number of ways the item sequence derives exactly `size`.
        total_weight = sum(i.weight for i in alternative if isinstance(i, T))
        if total_weight > size:
            return 0
        acc = {size - total_weight: 1}
        for item in alternative:
            if isinstance(item, T):
                continue
            nxt = {}
            row = counts[item.name]
            for remaining, mult in acc.items():
                for sub in range(0, remaining + 1):
                    c = row[sub]
                    if c:
                        nxt[remaining - sub] = nxt.get(remaining - sub, 0) + mult * c
            acc = nxt
            if not acc:
                return 0
        return acc.get(0, 0)

    for size in range(max_size + 1):
        # Zero-weight steps (unit productions, epsilon) create
        # within-layer dependencies; iterate to the fixpoint.
        for _ in range(len(names) + 2):
            changed = False
            for name in names:
                total = sum(ways(alt, size) for alt in grammar.productions[name])
                if total != counts[name][size]:
                    counts[name][size] = total
                    changed = True
            if not changed:
                break
        else:
            raise GrammarError(
                f"zero-weight cycle: counts at size {size} do not stabilise"
            )
    return Series(tuple(counts[grammar.start]))


_TW_ORDER = {"T": 0, "W": 1, "U": 2, "'": 3}
_CLR_ORDER = {"L": 0, "C": 1, "R": 2, "U": 3, "'": 4}


def sort_key(text: str):
    """Order strings by the alphabet T<W<U<' (or L<C<R<U for region words)."""
    table = _CLR_ORDER if any(c in "LCR" for c in text) else _TW_ORDER
    return [table[c] for c in text]


def generate(grammar: Grammar, max_size: int) -> list:
    """All members of the language with size <= max_size.

    Returns distinct members ordered by (size, alphabet order).  Runs
    the counting DP first, which doubles as the zero-weight-cycle check.
    """
    sizes = generate_with_sizes(grammar, max_size)
    return sorted(sizes, key=lambda s: (sizes[s], sort_key(s)))


def generate_with_sizes(grammar: Grammar, max_size: int) -> dict:
    """Like :func:`generate` but returns the mapping member -> size."""
    count_by_size(grammar, max_size)
    sizes = {}
    for text, size in _derivations(grammar, max_size):
        known = sizes.get(text)
        if known is None:
            sizes[text] = size
        else:
            assert known == size, f"member {text!r} derived at two sizes"
    return sizes


def _derivations(grammar: Grammar, max_size: int) -> Iterator[tuple]:
    def walk(items, budget):
        if not items:
            yield "", 0
            return
        head, rest = items[0], items[1:]
        if isinstance(head, T):
            if head.weight <= budget:
                for text, size in walk(rest, budget - head.weight):
                    yield head.symbol + text, size + head.weight
        else:
            for left, left_size in derive(head.name, budget):
                for text, size in walk(rest, budget - left_size):
                    yield left + text, left_size + size

    def derive(name, budget):
        for alternative in grammar.productions[name]:
            yield from walk(alternative, budget)

    yield from derive(grammar.start, max_size)


# ---------------------------------------------------------------------------
# The built-in grammars.


def fm_grammar() -> Grammar:
    """The classical (Fink--Mao) knots, region notation.

    The walk starts at L; each state remembers the region just visited;
    the knot exits with a two-region swing into the center plus the
    final tuck.  L/C/R weigh 1 and U weighs 0, so size = region symbols.
    """
    L, C, R = T("L"), T("C"), T("R")
    U = T("U", 0)
    return Grammar(
        start="tie",
        productions={
            "tie": ((L, N("lastL")),),
            "lastR": ((L, N("lastL")), (C, N("lastC")), (L, C, U)),
            "lastL": ((R, N("lastR")), (C, N("lastC")), (R, C, U)),
            "lastC": ((L, N("lastL")), (R, N("lastR"))),
        },
    )


def single_tuck_tw_grammar() -> Grammar:
    """Knots with depth-1 tucks only, winding notation.

    A body of winding pairs and internal tucks, an optional one-winding
    prefix to fix parity, and a mandatory final tuck.  T and W weigh 1.
    The closing U of the final tuck weighs 1 while internal tuck U's
    weigh 0, so that size equals the move count: a knot of n windings
    sits at size n + 1 regardless of how many internal tucks it has.
    """
    t, w = T("T"), T("W")
    U0 = T("U", 0)
    U1 = T("U", 1)
    return Grammar(
        start="tie",
        productions={
            "tie": ((N("prefix"), N("body")),),
            "prefix": ((t,), (w,), ()),
            "body": (
                (N("pair"), N("body")),
                (N("ituck"), N("body")),
                (N("ftuck"),),
            ),
            "pair": ((t, t), (t, w), (w, t), (w, w)),
            "ituck": ((t, t, U0), (w, w, U0)),
            "ftuck": ((t, t, U1), (w, w, U1)),
        },
    )


_EXIT_REGION = {
    # Exit swings per state: two regions, ending where the tuck happens.
    "lastR": (("L", "C"), ("C", "L")),
    "lastL": (("R", "C"), ("C", "R")),
    "lastC": (("L", "R"), ("R", "L")),
}


def single_tuck_clr_grammar(final: Optional[Region] = None) -> Grammar:
    """The single-tuck language in region notation, by final tuck region.

    States advance two regions at a time (preserving tuck parity); each
    exit lays two regions and tucks, optionally continuing.  Passing
    ``final`` keeps only the terminating exits that land there, which is
    how the per-region counting series are produced; ``None`` keeps all
    six.  L/C/R weigh 1, U weighs 0: size = region symbols = moves.
    """
    U = T("U", 0)

    def sym(letter):
        return T(letter)

    productions = {}
    for state, exits in _EXIT_REGION.items():
        alternatives = []
        # Two-region winding steps: from region X, visit any region Y
        # != X, then any region Z != Y; state becomes lastZ.
        here = state[-1]
        for middle in "LCR":
            if middle == here:
                continue
            for target in "LCR":
                if target == middle:
                    continue
                alternatives.append((sym(middle), sym(target), N("last" + target)))
        for first, landing in exits:
            exit_items = (sym(first), sym(landing), U)
            alternatives.append(exit_items + (N("last" + landing),))
            if final is None or landing == final.value:
                alternatives.append(exit_items)
        productions[state] = tuple(alternatives)
    productions["tie"] = (
        (T("L"), N("lastL")),
        (T("L"), T("R"), N("lastR")),
        (T("L"), T("C"), N("lastC")),
    )
    return Grammar(start="tie", productions=productions)


def full_grammar() -> Grammar:
    """Knots with arbitrary-depth tucks, winding notation.

    The context-free grammar: tucks open with a winding pair and close
    with a U; their interiors are chains of further pairs and complete
    tucks, apostrophes separating a finished tuck from what follows.
    The three interior states track the residue mod 3 that the rest of
    the window must still contribute for the window rule to hold.  T and
    W weigh 1; U and ' weigh 0, so size = winding count = moves - 1.
    """
    t, w = T("T"), T("W")
    U = T("U", 0)
    sep = T("'", 0)
    return Grammar(
        start="tie",
        productions={
            "tie": ((N("prefix"), N("body")),),
            "prefix": ((t,), (w,), ()),
            "body": ((N("pair"), N("body")), (N("tuck"), N("body")), (N("tuck"),)),
            "pair": ((t, t), (t, w), (w, t), (w, w)),
            "tuck": ((N("ttuck2"),), (N("wtuck2"),)),
            "ttuck2": ((t, t, N("w0"), U), (t, w, N("w1"), U)),
            "wtuck2": ((w, w, N("w0"), U), (w, t, N("w2"), U)),
            "w0": (
                (w, w, N("w1"), U),
                (w, t, N("w0"), U),
                (t, w, N("w0"), U),
                (t, t, N("w2"), U),
                (N("ttuck2"), sep, N("w2"), U),
                (N("wtuck2"), sep, N("w1"), U),
                (),
            ),
            "w1": (
                (w, w, N("w2"), U),
                (w, t, N("w1"), U),
                (t, w, N("w1"), U),
                (t, t, N("w0"), U),
                (N("ttuck2"), sep, N("w0"), U),
                (N("wtuck2"), sep, N("w2"), U),
            ),
            "w2": (
                (w, w, N("w0"), U),
                (w, t, N("w2"), U),
                (t, w, N("w2"), U),
                (t, t, N("w1"), U),
                (N("ttuck2"), sep, N("w1"), U),
                (N("wtuck2"), sep, N("w0"), U),
            ),
        },
    )


# ---------------------------------------------------------------------------
# The finite automaton for the single-tuck language.


@dataclass(frozen=True)
class Automaton:
    """A finite automaton whose edges may carry multi-symbol labels
    (or the empty label).  Acceptance expands labels into single-symbol
    steps and runs the subset simulation, linear in the input."""

    states: frozenset
    initial: str
    accepting: frozenset
    transitions: tuple  # (state, label, state)

    def _expanded(self):
        # Single-symbol edge map plus epsilon edges, with chain states
        # for every multi-symbol label.
        edges = {}
        epsilon = {}
        for index, (source, label, target) in enumerate(self.transitions):
            if label == "":
                epsilon.setdefault(source, set()).add(target)
                continue
            here = source
            for offset, symbol in enumerate(label):
                nxt = target if offset == len(label) - 1 else f"@{index}.{offset}"
                edges.setdefault(here, {}).setdefault(symbol, set()).add(nxt)
                here = nxt
        return edges, epsilon

    def accepts(self, text: str) -> bool:
        edges, epsilon = self._expanded()

        def closure(states):
            stack = list(states)
            seen = set(states)
            while stack:
                for nxt in epsilon.get(stack.pop(), ()):
                    if nxt not in seen:
                        seen.add(nxt)
                        stack.append(nxt)
            return seen

        current = closure({self.initial})
        for symbol in text:
            nxt = set()
            for state in current:
                nxt |= edges.get(state, {}).get(symbol, set())
            if not nxt:
                return False
            current = closure(nxt)
        return bool(current & self.accepting)


def single_tuck_automaton() -> Automaton:
    """The machine accepting exactly the single-tuck winding language.

    After an optional one-symbol prefix, control sits on the hub state;
    it must leave (through a winding pair or an internal tuck) and
    return before the word can end with a final TTU/WWU.  The detour
    through the pair state maintains the even-parity rule for tucks.
    """
    transitions = (
        ("start", "T", "hub"),
        ("start", "", "hub"),
        ("start", "W", "hub"),
        ("hub", "TT", "tucking"),
        ("hub", "WW", "tucking"),
        ("tucking", "U", "hub"),
        ("hub", "TTU", "end"),
        ("hub", "WWU", "end"),
        ("hub", "T", "paired"),
        ("hub", "W", "paired"),
        ("paired", "T", "hub"),
        ("paired", "W", "hub"),
    )
    return Automaton(
        states=frozenset({"start", "hub", "tucking", "paired", "end"}),
        initial="start",
        accepting=frozenset({"end"}),
        transitions=transitions,
    )
