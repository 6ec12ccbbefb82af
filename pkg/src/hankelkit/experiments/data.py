"""Transcribed reference displays: matrices, triangles and table rows.

Matrices are stored as whitespace-separated text, one row per line, and are
parsed with the ring-scalar syntax (so ``3-i`` and ``-7i`` are accepted).
Table rows are kept exactly as printed; known misprints are corrected in the
experiment code, where each correction is reported as a note.
"""

from __future__ import annotations

from ..linalg import ExactMatrix
from ..ring import parse_scalar


def mat(text: str) -> ExactMatrix:
    rows = [[parse_scalar(t) for t in line.split()] for line in text.strip().splitlines()]
    return ExactMatrix.from_lists(rows)


def seq(text: str) -> list:
    return [parse_scalar(t) for t in text.replace(" ", "").split(",") if t]


# -- binomial-minus-shift construction ----------------------------------------------

BINOMIAL_MINUS_SHIFT = mat("""
1 0 1 1 1 1 1
1 2 2 4 5 6 7
1 3 6 9 15 21 28
1 4 10 20 34 56 84
1 5 15 35 70 125 210
1 6 21 56 126 252 461
1 7 28 84 210 462 924
""")

SYMMETRIC_AFTER_RIGHT_MULT = mat("""
1 1 1 1 1 1 1
1 3 4 5 6 7 8
1 4 9 14 20 27 35
1 5 14 29 49 76 111
1 6 20 49 99 175 286
1 7 27 76 175 351 637
1 8 35 111 286 637 1275
""")

REVERSED_EMBEDDED = mat("""
1 0 0 0 0 0 0
3 1 0 0 0 0 0
9 4 1 0 0 0 0
29 14 5 1 0 0 0
99 49 20 6 1 0 0
351 175 76 27 7 1 0
1275 637 286 111 35 8 1
""")

DIAGONAL_SUMS = seq("1, 2, 5, 10, 21, 42, 85, 170, 341, 682, 1365")

# -- preceding example: (1/(1+x+x^2), x/(1+x)) ---------------------------------------

RIORDAN_1_1XX = mat("""
1 0 0 0 0 0 0
-1 1 0 0 0 0 0
0 -2 1 0 0 0 0
1 2 -3 1 0 0 0
-1 -1 5 -4 1 0 0
0 0 -6 9 -5 1 0
1 0 6 -15 14 -6 1
""")

SYM_1_1XX = mat("""
1 1 1 1 1 1 1
1 -1 -2 -3 -4 -5 -6
1 -2 0 2 5 9 14
1 -3 2 1 -1 -6 -15
1 -4 5 -1 -1 0 6
1 -5 9 -6 0 0 0
1 -6 14 -15 6 0 1
""")

SYM_PLUS_VARIANT = mat("""
1 -1 1 -1 1 -1 1
-1 -1 2 -3 4 -5 6
1 2 0 -2 5 -9 14
-1 -3 -2 1 1 -6 15
1 4 5 1 -1 0 6
-1 -5 -9 -6 0 0 0
1 6 14 15 6 0 1
""")

COMPLEX_VARIANT = mat("""
1 i -1 -i 1 i -1
i 1 2i -3 -4i 5 6i
-1 2i 0 2i -5 -9i 14
-i -3 2i -1 i -6 -15i
1 -4i -5 i -1 0 -6
i 5 -9i -6 0 0 0
-1 6i 14 -15i -6 0 1
""")

MINORS_SIGNED_ROBBINS = seq("1, -2, -7, 42, 429, -7436, -218348, 10850216")

# -- 2-factorial example -------------------------------------------------------------

TWO_FACTORIAL_VARIANT = mat("""
1 0 0 0 0 0 0
0 1 1 1 1 1 1
0 1 4 7 10 13 16
0 1 7 20 40 67 101
0 1 10 40 106 223 406
0 1 13 67 223 572 1236
0 1 16 101 406 1236 3114
""")

TWO_FACTORIAL_CONJUGATED = mat("""
1 1 1 1 1 1 1
1 2 4 8 16 32 64
1 4 13 37 97 241 577
1 8 37 132 410 1170 3154
1 16 97 410 1451 4619 13699
1 32 241 1170 4619 16138 51960
1 64 577 3154 13699 51960 179969
""")

TWO_FACTORIAL_ORIGINAL = mat("""
1 2 3 4 5 6 7
2 7 15 26 40 57 77
3 15 43 94 175 293 455
4 26 94 251 555 1079 1911
5 40 175 555 1431 3191 6391
6 57 293 1079 3191 8065 18109
7 77 455 1911 6391 18109 45207
""")

TWO_FACTORIAL_MINORS = seq("1, 1, 3, 21, 315, 9765, 615195")

# -- A_n construction ----------------------------------------------------------------

AN_BEFORE_SHIFT = mat("""
1 0 0 0 0 0 0
0 1 1 1 1 1 1
0 1 2 3 4 5 6
0 1 3 6 10 15 21
0 1 4 10 20 35 56
0 1 5 15 35 70 126
0 1 6 21 56 126 252
""")

AN_AFTER_SHIFT = mat("""
1 0 0 0 0 0 0
0 1 0 1 1 1 1
0 1 2 2 4 5 6
0 1 3 6 9 15 21
0 1 4 10 20 34 56
0 1 5 15 35 70 125
0 1 6 21 56 126 252
""")

# -- Example Ex chain ----------------------------------------------------------------

EX_RIORDAN = mat("""
1 0 0 0 0 0 0
0 1 0 0 0 0 0
1 1 1 0 0 0 0
1 2 2 1 0 0 0
1 3 4 3 1 0 0
1 4 7 7 4 1 0
1 5 11 14 11 5 1
""")

EX_INVERSE = mat("""
1 0 0 0 0 0 0
0 1 0 0 0 0 0
-1 -1 1 0 0 0 0
1 0 -2 1 0 0 0
0 1 2 -3 1 0 0
-1 -1 -1 5 -4 1 0
1 0 0 -6 9 -5 1
""")

EX_SYMMETRIZED = mat("""
1 1 1 1 1 1 1
1 0 -1 -2 -3 -4 -5
1 -1 -1 0 2 5 9
1 -2 0 1 1 -1 -6
1 -3 2 1 0 -1 0
1 -4 5 -1 -1 -1 0
1 -5 9 -6 0 0 1
""")

EX_MINORS = seq("1, -1, -2, 7, 42, -429, -7436, 218348, 10850216, -911835460")

EX_FINAL = mat("""
1 1 1 1 1 1 1
1 2 1 2 1 2 1
1 3 3 2 4 1 5
1 4 6 5 5 7 2
1 5 10 11 10 11 12
1 6 15 21 21 21 22
1 7 21 36 42 42 43
""")

EX_REVERSED_COPY = mat("""
1 0 0 0 0 0 0
2 1 0 0 0 0 0
3 3 1 0 0 0 0
5 6 4 1 0 0 0
10 11 10 5 1 0 0
21 21 21 15 6 1 0
43 42 42 36 21 7 1
""")

# -- closing example of the first part: g = (1-x)/(1-3x^2+x^3) ------------------------

A188022_KERNEL = SYM_PLUS_VARIANT
A188022_SIGNED = seq("1, -1, 3, -4, 10, -15, 34")
A188022_REVERSION = seq("0, 1, 1, -1, -6, -8, 15, 84")

# -- transforms and continued fractions ------------------------------------------------

A121449_TERMS = seq("1, 1, 3, 8, 22, 61, 170, 475, 1329, 3721, 10422, 29196")
A215404_TERMS = seq("1, 4, 13, 39, 113, 322, 910, 2561, 7192, 20175")
A005156_SHIFTED = seq("1, 3, 26, 646, 45885, 9304650, 5382618660, 8878734657276")
LAWRENCE_TERMS = seq("1, 1, -2, -4, 3, 13, 0, -36, -23, 85, 118, -160, -429, 16")
LAWRENCE_MATRIX = mat("""
0 1 0
0 0 1
1 -3 1
""")
LAWRENCE_REVERT = seq("1, -1, 4, -11, 41, -146, 564, -2199, 8835, -35989, 148912")

# (mu0, alphas, betas) in the J-form g = mu0/(1 - a0 x - b1 x^2/(1 - a1 x - ...)),
# read off the displays, which write  "+ c x^2"  for  beta = -c.
JFRACTIONS = {
    "A121449": ("1,-3,2 ; 1,-4,3,1", (1, ["1", "3/2", "3/2"], ["1", "1/4"])),
    "A052536": ("1,-1 ; 1,-3,0,1", (1, ["2", "1/2", "1/2"], ["1", "1/4"])),
    "A215404": ("1 ; 1,-4,3,1", (1, ["4", "1/3", "-1/3"], ["-3", "-1/9"])),
    "(1-x)^2": ("1,-2,1", (1, ["-2", "4/3", "2/3"], ["-3", "-1/9"])),
    "1/(1-x)^3": ("1 ; 1,-3,3,-1", (1, ["3", "-1/3", "1/3"], ["-3", "-1/9"])),
    "lawrence": ("1 ; 1,-1,3,-1", (1, ["-1", "1/3", "-1/3"], ["-3", "-1/9"])),
    "centered-triangle": ("1,1,1 ; 1,-3,3,-1", (1, ["4", "1/2", "-1/2"], ["-6", "-3/4"])),
    "A077998": ("1,-1 ; 1,-2,-1,1", (1, ["1", "1/2", "1/2"], ["2", "1/4"])),
    "nonagon": ("1,0,-1 ; 1,2,-3,-1,1", (1, ["-2", "-1/2", "-1/2"], ["2", "1/4"])),
}

# -- centered polygon numbers ----------------------------------------------------------

CENTERED_SEQUENCES = {
    0: seq("1,1,1,1,1,1"),
    1: seq("1,2,4,7,11,16"),
    2: seq("1,3,7,13,21,31"),
    3: seq("1,4,10,19,31,46"),
    4: seq("1,5,13,25,41,61"),
    5: seq("1,6,16,31,51,76"),
}

CENTERED_REVERT_ARRAY = mat("""
1 0 0 0 0 0 0 0
-1 -1 0 0 0 0 0 0
1 1 2 0 0 0 0 0
-1 -1 0 -5 0 0 0 0
1 1 0 -7 14 0 0 0
-1 -1 0 0 42 -42 0 0
1 1 0 0 30 -198 132 0
-1 -1 0 0 0 -297 858 -429
""")

# h_n(r) / r^C(n+1,2) for n = 0..3, ascending coefficients in r
CENTERED_SCALED_POLYS = [
    [1],
    [-1, 1],
    [-2, 3, -3, 1],
    [6, -24, 30, -24, 15, -6, 1],
]

CENTERED_TABLE = {
    0: seq("1, -1, -2, 6, 33, -286"),
    1: seq("1, 0, -1, -2, 3, 18"),
    2: seq("1, 1, 0, -2, -5, -14"),
    3: seq("1, 2, 7, 42, 429, 7436"),
    4: seq("1, 3, 26, 646, 45885, 9304650"),
}

CENTERED_M = mat("""
1 -4 6 -3 -3 6 -3
-4 22 -51 57 -6 -78 111
6 -51 189 -378 351 189 -1026
-3 57 -378 1296 -2457 1809 3078
-3 -6 351 -2457 8424 -15444 8073
6 -78 189 1809 -15444 54378 -97011
-3 111 -1026 3078 8073 -97011 354294
""")

CENTERED_M_CONJUGATED = mat("""
1 1 1 1 1 1 1
1 7 4 1 7 4 1
1 4 34 1 -23 61 1
1 1 1 163 -80 -242 568
1 7 -23 -80 898 -752 -1862
1 4 61 -242 -752 5515 -5588
1 1 1 568 -1862 -5588 35884
""")

# -- heptagon and nonagon ----------------------------------------------------------------

POLYGON_RIORDAN = mat("""
1 0 0 0 0 0 0
-1 1 0 0 0 0 0
-1 -1 1 0 0 0 0
1 -2 -1 1 0 0 0
1 2 -3 -1 1 0 0
-1 3 3 -4 -1 1 0
-1 -3 6 4 -5 -1 1
""")

HEPTAGON_TERMS = seq("1, 1, 3, 6, 14, 31, 70, 157, 353, 793, 1782")
NONAGON_TERMS = seq("1, -2, 6, -17, 49, -141, 406, -1169, 3366, -9692")
HEPTAGON_REVERT = seq("1, -1, -1, 4, 0, -17, 16, 68, -146, -221, 1003, 273, -5939")
NONAGON_REVERT = seq("1, 2, 2, -3, -17, -27, 30, 248, 467, -417, -4387, -9072, 6792")
POLYGON_HANKEL = seq("1, -2, -7, 42, 429, -7436, -218348, 10850216, 911835460")

HEPTAGON_MATRIX = SYM_1_1XX

NONAGON_MATRIX = mat("""
1 1 1 1 1 1 1
1 -1 0 -1 0 -1 0
1 0 4 0 5 -1 6
1 -1 0 -7 3 -12 9
1 0 5 3 15 -6 30
1 -1 -1 -12 -6 -28 14
1 0 6 9 30 14 57
""")

POLYGON_COMPLEX_MATRIX = mat("""
1 1 1 1 1 1 1
1 3 3-i 2-i 2 3 3-i
1 3-i 6-2i 5-5i 1-4i 2+i 8
1 2-i 5-5i 7-8i 3-12i -5-7i 1+6i
1 2 1-4i 3-12i 1-16i -7-17i -16-4i
1 3 2+i -5-7i -7-17i -14-18i -23-11i
1 3-i 8 1+6i -16-4i -23-11i -31-4i
""")

ROBBINS_SHIFTED_7 = seq("1, 2, 7, 42, 429, 7436, 218348")

# -- the special 3x3 matrix ----------------------------------------------------------------

SPECIAL_P_ARRAY = mat("""
1 0 0 0 0 0 0
0 1 0 0 0 0 0
2 0 1 0 0 0 0
1 4 0 1 0 0 0
5 2 6 0 1 0 0
5 14 3 8 0 1 0
14 14 27 4 10 0 1
""")

SPECIAL_PBAR_ARRAY = mat("""
1 0 0 0 0 0 0
0 -1 0 0 0 0 0
-2 0 1 0 0 0 0
-1 6 0 -1 0 0 0
7 4 -12 0 1 0 0
9 -35 -10 20 0 -1 0
-26 -54 105 20 -30 0 1
""")
SPECIAL_PBAR_AT_ZERO = seq("1, 0, -2, -1, 7, 9, -26, -64, 83, 407, -115")

SPECIAL_Q_ARRAY = mat("""
1 0 0 0 0 0 0
0 -1 0 0 0 0 0
-4 0 1 0 0 0 0
-3 12 0 -1 0 0 0
20 12 -24 0 1 0 0
35 -100 -30 40 0 -1 0
-91 -210 300 60 -60 0 1
""")
SPECIAL_Q_AT_ZERO = seq("1, 0, -4, -3, 20, 35, -91")

Q_HANKEL = seq("1, -4, -25, 256, 4356, -123904, -5909761, 473497600, 63799687396")
Q_HANKEL_ROOTS = seq("1, 2, 5, 16, 66, 352, 2431, 21760, 252586, 3803648, 74327145")

# -- sequence tables ---------------------------------------------------------------------
# (label, gf text, printed sequence prefix or None, printed revert prefix, extra)

HANKEL_M2 = seq("1, -2, -7, 42, 429, -7436")

SEC6_ROWS = [
    ("A052536", "1,-1 ; 1,-3,0,1", "1,1,-1,-6,-8,-15", ("2 1 1;1 1 0;1 0 0", (0, 0))),
    ("A052547", "1,-1 ; 1,-1,-2,1", "1,0,-2,-1,7,9", ("0 1 1;1 0 0;1 0 1", (0, 0))),
    ("A052941", "1,-1 ; 1,-4,1,1", "1,-3,7,-10,-8,111", ("1 1 2;1 2 1;1 1 1", (2, 0))),
    ("A077998", "1,-1 ; 1,-2,-1,1", "1,-1,-1,4,0,-17,16", ("1 1 1;1 1 0;1 0 0", (0, 0))),
    ("A052975", "1,-3,2 ; 1,-5,6,-1", "1,-2,2,1,-5,-1,22", ("1 1 0;1 2 1;0 1 2", (1, 1))),
    ("A121449", "1,-3,2 ; 1,-4,3,1", "1,-1,-1,2,4,-5,-20", ("1 1 0;1 1 1;0 1 2", (1, 1))),
    ("A122368", "1,-3,2 ; 1,-6,9,-3", "1,-3,7,-12,12,3,-24", ("1 1 0;1 3 1;0 1 2", (1, 1))),
    ("A188022", "1,1 ; 1,0,-3,-1", "1,-1,-1,6,-8,-15,84",
     ("0 1 0 0;1 0 1 0;0 1 0 1;0 0 1 1", (2, 3))),
]

IC_RS_25 = seq("1, -4, -25, 256, 4356, -123904")
IC_RS_33 = seq("1, -4, -33, 432, 9504, -349800")
SEC6_IC_RS = {
    "A052536": (IC_RS_25, IC_RS_25),
    "A052547": (IC_RS_25, IC_RS_25),
    "A052941": (IC_RS_25, IC_RS_25),
    "A077998": (IC_RS_25, IC_RS_25),
    "A052975": (IC_RS_33, IC_RS_25),
    "A121449": (IC_RS_33, IC_RS_25),
    "A122368": (IC_RS_33, IC_RS_25),
    "A188022": (IC_RS_25, IC_RS_33),
}

G00_REVERT = seq("1, 0, 2, 0, 15/2, 0, 273/8, 0, 5471/32, 0, 116193/128")
G00_2X_REVERT = seq("1, 0, 8, 0, 120, 0, 2184, 0, 43768, 0, 929544")
G1M1_REVERT = seq("1, -2, 6, -21, 80, -643/2, 2681/2, -22967/4, 25104, -892409/8")
G1M1_2X_REVERT = seq("1, -4, 24, -168, 1280, -10288, 85792, -734944, 6426624, -57114176")
F00_TERMS = seq("1, i, -3, -4i, 10, 15i, -34, -55i, 117, 199i, -406")
P3_TERMS = seq("1, 0, 2, 1, 5, 5, 14, 19, 42, 66, 131")
P3_COMPLEX_TERMS = seq("1, 0, -2, -i, 5, 5i, -14, -19i, 42, 66i, -131")
P3_COMPLEX_REVERT = seq("1, 0, 2, i, 7, 9i, 26, 64i, 83, 407i, 115")
P6_12_TERMS = seq("0, 1, 0, 2, 0, 5, 0, 14, 0, 42, 0, 131, 0")
P6_16_TERMS = seq("0, 0, 0, 0, 0, 1, 0, 5, 0, 19, 0, 66, 0, 221, 0, 728, 0, 2380, 0, 7753, 0")

HANKEL_A005161 = seq("1, 1, 2, 6, 33, 286")

SEC7_ROWS = [
    ("1-x^2", "1,0,-1", "1,0,-1,0,0,0,0", "1,0,1,0,3,0,12", HANKEL_A005161),
    ("(-1)^n A080956", "1,2 ; 1,3,3,1", None, "1,1,2,3,7,12", HANKEL_A005161),
    ("A122100", "1,-4,3 ; 1,-3,0,1", None, "1,2,2,6,22,90", HANKEL_A005161),
    ("A104769(n+2)", "1,0,-1 ; 1,1,-1", None, "1,1,2,4,10,26", HANKEL_A005161),
    ("1,2,3,4,4,2", "1,0,-1 ; 1,-2,0,2", "1,2,3,4,4,2", "1,-2,5,14,43", HANKEL_A005161),
    ("A080956", "1,-2 ; 1,-3,3,-1", None, "1,-1,2,-3,7,-12", HANKEL_A005161),
    ("1,2,3,5,7,12", "1,2 ; 1,0,-3,1", "1,2,3,5,7,12", "1,-2,5,-15,52", HANKEL_A005161),
    ("1,-3,8,-21,54", "1,0,-1 ; 1,3,0,-3", "1,-3,8,-21,54", "1,3,10,36,138", HANKEL_A005161),
    ("1,-1,0,0,-1,-1,-2", "1,-2 ; 1,-1,-1,-1", "1,-1,0,0,-1,-1,-2", "1,1,2,5,15,50", HANKEL_A005161),
    ("1,-2,3,-5,7,-12", "1,-2 ; 1,0,-3,-1", "1,-2,3,-5,7,-12", "1,2,5,15,52", HANKEL_A005161),
    ("A154272", "1,0,1", None, "1,0,-1,0,3,0,-12", seq("1, -1, -2, 6, 33, -286")),
]

A047749_HANKEL = seq("1, 0, -1, 0, 9, 0, -676, 0, 417316, 0, -2105433225")

SEC7_SQUARE = mat("""
1 1 1 1 1 1 1
1 2 2 3 3 4 4
1 2 4 5 8 9 13
1 3 5 10 13 22 26
1 3 8 13 26 35 61
1 4 9 22 35 70 96
1 4 13 26 61 96 192
""")

SEC7_EMBEDDED = mat("""
1 0 0 0 0 0 0 0
2 1 0 0 0 0 0 0
4 2 1 0 0 0 0 0
10 5 3 1 0 0 0 0
26 13 8 3 1 0 0 0
70 35 22 9 4 1 0 0
192 96 61 26 13 4 1 0
534 267 171 75 40 14 5 1
""")

SEC7_INVERSE_A = mat("""
1 0 0 0 0 0
2 1 0 0 0 0
4 3 1 0 0 0
10 8 4 1 0 0
26 22 13 5 1 0
70 61 40 19 6 1
""")

SEC7_INVERSE_B = mat("""
1 0 0 0 0 0
2 1 0 0 0 0
5 3 1 0 0 0
13 9 4 1 0 0
35 26 14 5 1 0
96 75 45 20 6 1
""")

SEC7_PRODUCTION = mat("""
2 1 0 0 0 0 0 0
0 0 1 0 0 0 0 0
2 1 1 1 0 0 0 0
0 0 0 0 1 0 0 0
2 1 1 1 1 1 0 0
0 0 0 0 0 0 1 0
2 1 1 1 1 1 1 1
0 0 0 0 0 0 0 0
""")

HANKEL_3_26 = seq("1, 3, 26, 646, 45885, 9304650")

SEC8_ROWS = [
    ("(-1)^n A130713", "1,-2,1", None, "1,2,7,30,143"),
    ("A130713", "1,2,1", None, "1,-2,7,-30,143"),
    ("(-1)^n A000217(n+1)", "1 ; 1,3,3,1", None, "1,3,12,55,273"),
    ("(-1)^n A200715(n+3)", "1 ; 1,1,3,1", None, "1,1,4,11,41,146"),
    ("A127896", "1 ; 1,2,3,1", None, "1,2,7,27,114,507"),
    ("1,-1,-2,-2,-1", "1,-4,4 ; 1,-3,3,-1", "1,-1,-2,-2,-1", "1,1,4,17,81,412"),
    ("1,-4,13,-38,104", "1,2,1 ; 1,6,12,8", "1,-4,13,-38,104", "1,4,19,98,531,2974"),
    ("A215404", "1 ; 1,-4,3,1", None, "1,-4,19,-99,546"),
    ("1,0,-3,-1,9,6", "1 ; 1,0,3,1", "1,0,-3,-1,9,6", "1,0,3,1,18,15"),
    ("A339850", "1,2,1 ; 1,-2,-4,-2", None, "1,-4,19,-104,631"),
    ("A077954(n+1)", "1,-2,1 ; 1,-1,2,-1", None, "1,1,14,58,252"),
]

SEC8_SQUARE = mat("""
1 1 1 1 1 1 1
1 4 5 5 5 5 5
1 5 15 21 22 22 22
1 5 21 56 84 93 94
1 5 22 84 211 331 386
1 5 22 93 331 802 1298
1 5 22 94 386 1298 3069
""")

SEC8_PARAM_ARRAY = mat("""
1 0 0 0 0 0
0 3 0 0 0 0
3 0 9 0 0 0
1 27 0 27 0 0
18 12 162 0 81 0
15 270 90 810 0 243
""")

SEC8_PARAM_SCALED = mat("""
1 0 0 0 0 0
0 1 0 0 0 0
3 0 1 0 0 0
1 9 0 1 0 0
18 4 18 0 1 0
15 90 10 30 0 1
""")

A098746_HANKEL = seq("1, 1, 3, 26, 646, 45885, 9304650, 5382618660, 8878734657276, 41748486581283118")
A098746_RS_HANKEL = seq("1, 2, 11, 170, 7429, 920460")
RS_4N_TERMS = seq("1, 4, 20, 108, 608, 3516, 20724, 123920, 749408, 4573788, 28127996")

BELL_1X2_INVERSION = mat("""
1 0 0 0 0 0
-2 -1 0 0 0 0
7 4 1 0 0 0
-30 -21 -6 -1 0 0
143 120 42 8 1 0
-728 -715 -300 -70 -10 -1
""")

RX_FAMILY_ARRAY = mat("""
1 0 0 0 0 0 0
0 -1 0 0 0 0 0
-1 0 2 0 0 0 0
0 5 0 -5 0 0 0
3 0 -21 0 14 0 0
0 -28 0 84 0 -42 0
-12 0 180 0 -330 0 132
""")

SQUARED_MINORS = seq("1, 0, -1, 0, 9, 0, -676, 0, 417316, 0")

# sec9: rows are generated from 1 - x c(x) and a few closed forms, see the registry.
SEC9_PRINTED = [
    ("A115140", None, "A007614", "1,2,11,170,7429"),
    ("1,-3,7,-18,43,-109", "1,-3,7,-18,43,-109", "A186185(n+1)", "1,2,11,170,7249"),
    ("1,-2,2,-5,2,-18", "1,-2,2,-5,2,-18", "A188687", "1,2,11,170,7249"),
    ("1,-5,23,-102,443", "1,-5,23,-102,443", "A305573", "1,2,11,170,7249"),
    ("1,-2,0,2,4,2,-12", "1,-2,0,2,4,2,-12", "A047098", "2^n[1,2,11,170,7249]"),
    ("1,-3,3,6,-9,-42", "1,-3,3,6,-9,-42", "A005809", "3^n[1,2,11,170,7429]"),
    ("A099325", None, "1,-3,11,-46,211,-1035", "1,2,11,170,7249"),
    ("1,-2,2,-3,2,-5", "1,-2,2,-3,2,-5", "A098746(n+1)", "1,2,11,170,7249"),
    ("", None, "A007226", "2,11,170,7249"),
]

SEC9_PARAM_POLYS = [[1], [0, 1], [6, 0, 1], [3, 18, 0, 1], [54, 12, 36, 0, 1]]
SEC9_PARAM_ARRAY = mat("""
1 0 0 0 0 0 0
0 1 0 0 0 0 0
6 0 1 0 0 0 0
3 18 0 1 0 0 0
54 12 36 0 1 0 0
60 270 30 60 0 1 0
555 360 810 60 90 0 1
""")

# -- Fibonacci, Catalan and the Robbins numbers -------------------------------------------

FIB_REVERT = seq("1, -1, 0, 2, -3, -1, 11, -15, -13, 77")
A_TILDE_REVERT = seq("1, 0, -1, 0, 3, -1, -12, 11, 51, -89, -204, 628, 646")
A_TILDE_HANKEL = seq("1, -1, -2, 7, 42, -429, -7436, 218348, 10850216, -911835460")
A_TILDE_I_REVERT = seq("1, 0, 1, 0, 3, -i, 12, -11i, 51, -89i, 204, -628i, 646")
CATALAN_AERATED_ALT = seq("1, 0, -1, 0, 2, 0, -5, 0, 14, 0, -42, 0")

# -- amalgamation -------------------------------------------------------------------------

AMALGAMATION = mat("""
1 -1 1 -1 1 -1 1 -1
1 0 -1 2 -3 4 -5 6
1 1 -1 0 2 -5 9 -14
1 2 0 -1 1 1 -6 15
1 3 2 -1 0 1 0 -6
1 4 5 1 -1 1 0 0
1 5 9 6 0 0 1 -1
1 6 14 15 6 0 1 0
""")
