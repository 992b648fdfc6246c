"""
First steps with rectlab
========================

Build a few small drawings, inspect their segments, joints, and neighborhood
relations, and enumerate every generic rectangulation of a given size.
"""

from rectlab import (contains, joints_of, make_drawing, occurrences,
                     order_labels, relations_of, segments_of, validate)
from rectlab.render import render_ascii
from rectlab.universe import enumerate_strong, enumerate_weak

# A drawing is a partition of an integer box with one segment per grid line.
# This one has a spanning top rectangle over two columns, so the vertical
# segment's top endpoint hangs below the horizontal: a "td" joint.
d3 = make_drawing(2, 2, [(0, 1, 2, 2), (0, 0, 1, 1), (1, 0, 2, 1)])
print(render_ascii(d3, joints=True, labels="nwse"))
print("violations:", validate(d3))
print("segments:", segments_of(d3))
print("joints:", joints_of(d3))

# Every ordered pair of rectangles is related in exactly one of four ways;
# entry (i, j) says how rect i sits relative to rect j.
print("relations:", relations_of(d3))
print("SW-NE order of the rect indices:", order_labels(d3, "sw-ne"))

# The pattern catalog: four T-joint orientations and two windmill senses.
print("contains td:", contains(d3, "td"), "-- witnesses:", occurrences(d3, "td"))

# The smallest windmill needs five rectangles:
pin = make_drawing(3, 3, [(0, 1, 1, 3), (1, 2, 3, 3), (2, 0, 3, 2),
                          (0, 0, 2, 1), (1, 1, 2, 2)])
print(render_ascii(pin))
print("windmills:", occurrences(pin, "wm+") + occurrences(pin, "wm-"))

# Brute-force universes are the package's ground truth.
for n in range(1, 6):
    print(f"size {n}: {len(enumerate_strong(n))} strong classes, "
          f"{len(enumerate_weak(n))} weak classes")
