#!/usr/bin/env python3
# A tour of the two tie-knot notations, using the Trinity and the
# Eldredge as running examples.

from tieknot import (
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

# The Trinity in winding notation: nine windings and two tucks.
trinity = parse_tw("TWWWTTTUTTU")
print("Trinity:", trinity)
print("  windings:", trinity.winding_count, " moves:", trinity.move_count)
print("  tucks (position, depth):", trinity.tucks)
print("  metrics:", trinity.metrics())

# The same knot as the sequence of regions the blade visits.
print("  region form:", tw_to_clr(trinity))          # LCLRCRLCURLU
print("  back again: ", clr_to_tw(tw_to_clr(trinity)))

# Where does it end, and what family is it in?
print("  final region:", final_region(trinity).name, "->", classify_final(trinity).value)

# Orientations (in front of / behind the knot) are implicit: anchor an
# outward move before the final tuck and alternate.
word = parse_clr("RCLCRCLCRCLRUCRCLU")
print("\nunannotated:", word)
print("annotated:  ", infer_orientations(word))

# Every knot has a mirror image: swap turnwise with widdershins and
# start on the other side.
print("\nEldredge:       ", parse_tw("TTTWWTTUTTWWU"))
print("Eldredge mirror:", mirror(parse_tw("TTTWWTTUTTWWU")).serialize(),
      "(starts at", mirror(parse_tw("TTTWWTTUTTWWU")).start.name.lower() + ")")

# And can be spelled out step by step.
print("\nHow to tie a TWTTU'UU (one shallow and one deep tuck at the same point):")
print(render_instructions(parse_tw("TWTTU'UU")))
