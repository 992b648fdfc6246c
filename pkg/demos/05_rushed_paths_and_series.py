"""
Rushed Dyck paths, strip drawings, and exact series
===================================================

Drawings avoiding both sideways joints are stacks of rows with unit
verticals.  They match "rushed" Dyck paths step for step, their per-height
generating functions come from a three-term polynomial recurrence, and each
height has an explicit trigonometric growth rate.
"""

from rectlab import (catalan_series, gk_series, growth_rate, is_rushed, phi,
                     phi_inv, progressive_paths, q_poly, rushed_paths,
                     strip_path_count)
from rectlab.paths import reference_growth_rate
from rectlab.render import render_ascii
from rectlab.universe import count_strip_class

# A rushed path climbs to its full height immediately and never comes back;
# a progressive path builds its peaks one altitude at a time.  The two
# families are different but equinumerous.
print("UUDD rushed:", is_rushed("UUDD"), "| UDUD rushed:", is_rushed("UDUD"))
for m in range(2, 9):
    print(f"semilength {m}: {len(rushed_paths(m))} rushed, "
          f"{len(progressive_paths(m))} progressive")

# phi drops one unit vertical per non-initial up-step:
p = "UUUUDDUDUDDD"
d = phi(p)
print(render_ascii(d))
print("back again:", phi_inv(d) == p)

# class sizes match the paths (the strip oracle is cap-free):
for n in range(1, 10):
    print(f"n={n}: {count_strip_class(n)} strip classes, "
          f"{len(rushed_paths(n + 1))} rushed paths")

# fixed height k means denominator q_{k+1} from q_{m+1} = q_m - x q_{m-1}:
for k in range(1, 7):
    print(f"g_{k}: x^{k} /", q_poly(k + 1), "->", gk_series(k, 8)[k:])
print("strip DP agrees:", gk_series(3, 8)[5] == strip_path_count(7, 3))

# growth rates approach 4 as the strips widen:
for k in range(1, 9):
    print(f"k={k}: growth {growth_rate(k):.9f} "
          f"(4cos^2(pi/{k + 2}) = {reference_growth_rate(k):.9f})")

# and the plain Catalan series falls out of its own fixed point:
print("catalan series:", catalan_series(10))
