"""Alternating sign matrix counts, three ways.

Run with ``python demos/robbins_minors.py``.
"""

from math import comb

from hankelkit.experiments import robbins
from hankelkit.linalg import ExactMatrix, hankel_transform, principal_minors
from hankelkit.series import RationalGF, revert_transform


def show(label, values):
    print(f"{label:<44} {', '.join(str(v) for v in values)}")


print("The Robbins numbers A_n count n x n alternating sign matrices.\n")
show("product formula, n = 1..9", [robbins(n) for n in range(1, 10)])

# Take Pascal's square C(n+k, k) and subtract 1 on the superdiagonal.
# Its leading principal minors are A_1, A_2, ...
m = ExactMatrix.from_function(9, 9, lambda n, k: comb(n + k, k) - (k == n + 1))
show("leading minors of C(n+k,k) - shift", principal_minors(m))

# The same numbers, up to sign, as Hankel determinants of a revert transform.
g = RationalGF.parse("1,-1 ; 1,-2,-1,1").expand(20)
show("g = (1-x)/(1-2x-x^2+x^3)", g.tolist()[:10])
rev = revert_transform(g)
show("revert transform (1/x) Rev(x g)", rev.tolist()[:10])
show("its Hankel transform", hankel_transform(rev, 9))
print("\nThe signs follow (-1)^C(n+1,2); the absolute values are A_{n+1}.")
