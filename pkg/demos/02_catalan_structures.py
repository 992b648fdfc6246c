"""
Catalan structures behind one avoided joint
===========================================

Weak rectangulations whose vertical segments all reach the top side are
counted by the Catalan numbers.  This demo walks the four routes to that
fact: the left-count reading onto non-decreasing sequences, Dyck paths,
binary trees, and the permutation reading with its 213 characterization.
"""

from rectlab import (all_trees, beta, catalan, contains, delta, delta_direct,
                     rect_of_tree, tau, tau_inv, tree_of, tree_to_seq)
from rectlab.invseq import perm_contains, theta
from rectlab.render import render_ascii
from rectlab.universe import enumerate_class

# tau reads each rectangle's "how many rectangles sit to my left" count in
# SW-NE order; the result is a non-decreasing inversion sequence.
members = enumerate_class(5, "weak", ("td",))
print("size 5 class members:", len(members), "= catalan(5) =", catalan(5))
for d in members[:3]:
    print("tau:", tau(d), " delta:", delta(d))

# delta can also be read directly off the drawing, tracing each vertical:
d = members[7]
print(render_ascii(d))
print("delta via tau:", delta(d), "  directly:", delta_direct(d))

# Binary trees with n nodes map onto the same class: the root rectangle
# sits at the SW corner, its left subtree stacks above, its right subtree
# fills a full-height block on the right.
for t in list(all_trees(3))[:3]:
    print(t, "->", tree_to_seq(t))
comb = (None, (None, (None, None)))  # all right children: the column strip
print(render_ascii(rect_of_tree(comb)))
print("round trip:", tree_of(rect_of_tree(comb)) == comb)

# The permutation reading: label rects SE-NW, read SW-NE.  A drawing has a
# hanging-stem joint exactly when its permutation contains 213.
big = tau_inv((0, 0, 1, 1, 1, 4, 4, 4, 4, 4, 8, 8, 12, 12, 12, 12, 12, 12))
pi = beta(big)
print("beta of the 18-rect example:", pi)
print("theta(beta) == tau:", theta(pi) == tau(big))
print("213-free:", not perm_contains(pi, "213"), "== td-free:",
      not contains(big, "td"))
