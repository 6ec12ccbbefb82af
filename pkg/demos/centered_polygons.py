"""Scaled Hankel determinants of revert transforms of centered polygonal numbers.

For r = 3 the row is the alternating sign matrix counts, for r = 4 the
vertically symmetric ones.
"""

from math import comb

from hankelkit.linalg import hankel_transform
from hankelkit.series import RationalGF, revert_transform

DEPTH = 5

print("centered r-gonal numbers 1 + r C(n+1,2), gf (1+(r-2)x+x^2)/(1-x)^3\n")
for r in range(1, 7):
    g = RationalGF([1, r - 2, 1], [1, -3, 3, -1]).expand(2 * DEPTH + 2)
    h = hankel_transform(revert_transform(g), DEPTH + 1)
    scaled = [v / r ** comb(n + 1, 2) for n, v in enumerate(h)]
    print(f"r={r}:  terms {', '.join(str(v) for v in g.tolist()[:6]):<22}  "
          f"h_n / r^C(n+1,2) = {', '.join(str(v) for v in scaled)}")
