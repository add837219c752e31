#!/usr/bin/env python3
# The tie axioms in action: which strings are knots, and where tucks fit.

from tieknot import ValidityOptions, parse_tw, tuck_sites, validate
from tieknot.notation import WindDir


def show(text, opts=ValidityOptions()):
    report = validate(parse_tw(text), opts)
    verdict = "valid" if report.valid else "invalid"
    print(f"  {text:<16} {verdict}")
    for violation in report.violations:
        print(f"    {violation}")


print("The final tuck is mandatory, windows must close, tucks stay in front:")
show("TWWWTTTUTTU")     # the Trinity
show("TT")              # no tuck at all
show("TWU")             # the last two windings differ: no depth-1 window
show("TTUWTTU")         # internal tuck an odd number of windings from the end
show("TTUU")            # a depth-2 tuck needs four windings of room

print("\nOptions relax individual rules:")
show("WW", ValidityOptions(allow_final_center_no_tuck=True))   # ends center
show("TTUWTTU", ValidityOptions(allow_hidden_tucks=True))      # tuck behind the knot

# A single point can host tucks of several depths.  TWTT ends on an
# equal pair (depth 1) and its full four-winding window also closes
# (depth 2), so TWTTU, TWTTUU and TWTTU'UU are all knots.
print("\ntuck sites of TWTT:", tuck_sites([WindDir(c) for c in "TWTT"]))
for text in ("TWTTU", "TWTTUU", "TWTTU'UU"):
    show(text)

# The Eldredge's winding pattern has five depth-1 sites; the knot itself
# uses the one at position 7 plus the final one.
eldredge_windings = [WindDir(c) for c in "TTTWWTTTTWW"]
print("\ndepth-1 sites of the Eldredge pattern:",
      [p for p, depths in tuck_sites(eldredge_windings) if 1 in depths])
