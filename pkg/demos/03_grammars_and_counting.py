#!/usr/bin/env python3
# Counting knots three ways: production grammars, direct enumeration,
# and rational generating functions -- all of which must agree.

from tieknot import (
    compare,
    count_by_size,
    expand,
    fit_recurrence,
    fm_grammar,
    full_grammar,
    generate,
    parse_rational,
    single_tuck_automaton,
    single_tuck_tw_grammar,
)
from tieknot.enumeration import full_language, hidden_tuck_counts
from tieknot.genfunc import Series

# The classical knots: 85 of them up to nine moves.
fm = count_by_size(fm_grammar(), 9)
print("classical counts by moves:", list(fm)[3:], "total", fm.total())
print("  same from the closed form:", list(expand(parse_rational("z^3/((1+z)(1-2z))"), 10))[3:])
print("  the first few members:", generate(fm_grammar(), 5))

# Thin-blade knots with depth-1 tucks: 24,882 up to thirteen moves.
single = count_by_size(single_tuck_tw_grammar(), 13)
print("\nsingle-tuck counts by moves:", list(single)[3:], "total", single.total())

# The same language is regular; its automaton agrees with the grammar.
machine = single_tuck_automaton()
print("  automaton accepts TWWTTU:", machine.accepts("TWWTTU"),
      "/ rejects TWTU:", machine.accepts("TWTU"))

# Arbitrary-depth tucks make the language context-free; 266,682 knots
# up to thirteen moves, confirmed by a grammar-free structural count.
full = count_by_size(full_grammar(), 12)
structural = full_language(12)
print("\narbitrary-depth counts by windings:", list(full)[2:], "total", full.total())
print("  structural enumeration agrees:",
      all(full[n] == len(structural[n]) for n in range(2, 13)))

# No small linear recurrence fits that series (the function is
# algebraic, not rational) -- unlike the single-tuck one.
print("  rational fit within order 6:", fit_recurrence(count_by_size(full_grammar(), 16), 6))
refit = fit_recurrence(single, 4)
print("  single-tuck series refits to:", refit)

# A well-known sign slip: the left-final closed form as usually printed
# expands to the negated series.
printed = expand(parse_rational("2z^4(2z^2-2z-1)/(1-6z^2)"), 14)
true_series = Series((0, 0, 0, 0, 2, 4, 8, 24, 48, 144, 288, 864, 1728, 5184))
print("\nleft-final closed form vs its series:", compare(printed, true_series))
print("  corrected form:", fit_recurrence(true_series, 4))

# Letting tucks hide behind the knot grows the census to 177,146.
hidden = hidden_tuck_counts(12)
print("\nhidden-tuck census:", list(hidden.values()), "total", sum(hidden.values()))
