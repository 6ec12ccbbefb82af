"""Riordan arrays: products, inverses, vertical halves and symmetrization."""

from hankelkit.linalg import principal_minors
from hankelkit.riordan import RiordanSpec, riordan_inverse, riordan_matrix, riordan_mul, symmetrize, vertical_half
from hankelkit.series import RationalGF

ORDER = 12


def spec(g, f):
    return RiordanSpec(RationalGF.parse(g).expand(ORDER), RationalGF.parse(f).expand(ORDER))


def show(title, m):
    print(title)
    for row in m.to_lists():
        print("   " + " ".join(f"{str(v):>4}" for v in row))
    print()


pascal = spec("1 ; 1,-1", "0,1 ; 1,-1")
show("Pascal's triangle (1/(1-x), x/(1-x))", riordan_matrix(pascal, 5).matrix)
show("its inverse (1/(1+x), x/(1+x))", riordan_matrix(riordan_inverse(pascal), 5).matrix)
show("Pascal squared, (1/(1-2x), x/(1-2x))", riordan_matrix(riordan_mul(pascal, pascal), 5).matrix)
show("vertical half: entries C(2n-k, n)", riordan_matrix(vertical_half(pascal), 5).matrix)

# Row n of the triangle, read backwards, fills row n of a symmetric matrix up to the
# diagonal; the part above the diagonal is the mirror image.
sym = symmetrize(riordan_matrix(pascal, 5))
show("symmetrization of Pascal: entries C(max, min)", sym)
print("leading minors:", ", ".join(str(v) for v in principal_minors(sym)))
