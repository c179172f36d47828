"""Reference matrices and polynomials, transcribed verbatim.

Symbolic entries are strings evaluated over :class:`Poly` variables.
"""
from energized.exact import laurent, var


def sym(rows, names):
    env = {n: var(n, tuple(names)) for n in names}
    return [[eval(e, {}, env) if isinstance(e, str) else e for e in row] for row in rows]


def tpoly(rows):
    t = laurent([0, 1])
    return [[eval(e, {}, {"t": t}) if isinstance(e, str) else e for e in row] for row in rows]


KOMMA = [[1], [1, 2]]
KOMMA_LMM = [[1, 1], [1, 2]]
KOMMA_LPP = [[2, 1], [1, 1]]
KOMMA_O = [[0, 1], [1, 0]]

# {1}, {1,2}, {1,2,3}
CHAIN = [[1], [1, 2], [1, 2, 3]]
CHAIN_LMM = [[1, 1, 1], [1, 2, 2], [1, 2, 3]]
CHAIN_LPP = [[3, 2, 1], [2, 2, 1], [1, 1, 1]]
CHAIN_O = [[0, 0, 1], [0, 1, 0], [1, 0, 0]]

EX1 = [[1], [2], [1, 2]]
EX1_VARS = ("x", "y", "z")
EX1_LMM = [["x", 0, "x"], [0, "y", "y"], ["x", "y", "x+y+z"]]
EX1_LPP = [["x+z", "z", "z"], ["z", "y+z", "z"], ["z", "z", "z"]]
EX1_LG = [["x**2", 0, 0], [0, "y**2", 0], ["x**2-z**2", "y**2-z**2", "z**2"]]

EX2 = [[1], [2], [3], [1, 2], [1, 3], [2, 3], [1, 2, 3]]
EX2_VARS = ("a", "b", "c", "d", "x", "y", "z")
EX2_LMM = [
    ["a", 0, 0, "a", "a", 0, "a"],
    [0, "b", 0, "b", 0, "b", "b"],
    [0, 0, "c", 0, "c", "c", "c"],
    ["a", "b", 0, "a+b+d", "a", "b", "a+b+d"],
    ["a", 0, "c", "a", "a+c+x", "c", "a+c+x"],
    [0, "b", "c", "b", "c", "b+c+y", "b+c+y"],
    ["a", "b", "c", "a+b+d", "a+c+x", "b+c+y", "a+b+c+d+x+y+z"],
]
EX2_LPP = [
    ["a+d+x+z", "d+z", "x+z", "d+z", "x+z", "z", "z"],
    ["d+z", "b+d+y+z", "y+z", "d+z", "z", "y+z", "z"],
    ["x+z", "y+z", "c+x+y+z", "z", "x+z", "y+z", "z"],
    ["d+z", "d+z", "z", "d+z", "z", "z", "z"],
    ["x+z", "z", "x+z", "z", "x+z", "z", "z"],
    ["z", "y+z", "y+z", "z", "z", "y+z", "z"],
    ["z", "z", "z", "z", "z", "z", "z"],
]
EX2_G = [
    ["a+d+x+z", "d+z", "x+z", "-d-z", "-x-z", "-z", "z"],
    ["d+z", "b+d+y+z", "y+z", "-d-z", "-z", "-y-z", "z"],
    ["x+z", "y+z", "c+x+y+z", "-z", "-x-z", "-y-z", "z"],
    ["-d-z", "-d-z", "-z", "d+z", "z", "z", "-z"],
    ["-x-z", "-z", "-x-z", "z", "x+z", "z", "-z"],
    ["-z", "-y-z", "-y-z", "z", "z", "y+z", "-z"],
    ["z", "z", "z", "-z", "-z", "-z", "z"],
]
EX2_LG = [
    ["a**2", 0, 0, 0, 0, 0, 0],
    [0, "b**2", 0, 0, 0, 0, 0],
    [0, 0, "c**2", 0, 0, 0, 0],
    ["a**2-d**2", "b**2-d**2", 0, "d**2", 0, 0, 0],
    ["a**2-x**2", 0, "c**2-x**2", 0, "x**2", 0, 0],
    [0, "b**2-y**2", "c**2-y**2", 0, 0, "y**2", 0],
    ["a**2-d**2-x**2+z**2", "b**2-d**2-y**2+z**2", "c**2-x**2-y**2+z**2", "d**2-z**2", "x**2-z**2", "y**2-z**2", "z**2"],
]

EIGHT = [[1], [2], [3], [4], [1, 2], [2, 3], [2, 4], [3, 4]]
EIGHT_LMM = [
    [1, 0, 0, 0, 1, 0, 0, 0],
    [0, 1, 0, 0, 1, 1, 1, 0],
    [0, 0, 1, 0, 0, 1, 0, 1],
    [0, 0, 0, 1, 0, 0, 1, 1],
    [1, 1, 0, 0, 3, 1, 1, 0],
    [0, 1, 1, 0, 1, 3, 1, 1],
    [0, 1, 0, 1, 1, 1, 3, 1],
    [0, 0, 1, 1, 0, 1, 1, 3],
]
EIGHT_LPP = [
    [2, 1, 0, 0, 1, 0, 0, 0],
    [1, 4, 1, 1, 1, 1, 1, 0],
    [0, 1, 3, 1, 0, 1, 0, 1],
    [0, 1, 1, 3, 0, 0, 1, 1],
    [1, 1, 0, 0, 1, 0, 0, 0],
    [0, 1, 1, 0, 0, 1, 0, 0],
    [0, 1, 0, 1, 0, 0, 1, 0],
    [0, 0, 1, 1, 0, 0, 0, 1],
]
# det(L - x), descending
EIGHT_CHARPOLY = [1, -16, 95, -268, 380, -268, 95, -16, 1]

NINE = EIGHT + [[2, 3, 4]]
NINE_LMM = [
    [1, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 1, 0, 0, 1, 1, 1, 0, 1],
    [0, 0, 1, 0, 0, 1, 0, 1, 1],
    [0, 0, 0, 1, 0, 0, 1, 1, 1],
    [1, 1, 0, 0, 3, 1, 1, 0, 1],
    [0, 1, 1, 0, 1, 3, 1, 1, 3],
    [0, 1, 0, 1, 1, 1, 3, 1, 3],
    [0, 0, 1, 1, 0, 1, 1, 3, 3],
    [0, 1, 1, 1, 1, 3, 3, 3, 7],
]
NINE_LPP = [
    [2, 1, 0, 0, 1, 0, 0, 0, 0],
    [1, 5, 2, 2, 1, 2, 2, 1, 1],
    [0, 2, 4, 2, 0, 2, 1, 2, 1],
    [0, 2, 2, 4, 0, 1, 2, 2, 1],
    [1, 1, 0, 0, 1, 0, 0, 0, 0],
    [0, 2, 2, 1, 0, 2, 1, 1, 1],
    [0, 2, 1, 2, 0, 1, 2, 1, 1],
    [0, 1, 2, 2, 0, 1, 1, 2, 1],
    [0, 1, 1, 1, 0, 1, 1, 1, 1],
]
NINE_CHARPOLY = [-1, 23, -176, 628, -1167, 1167, -628, 176, -23, 1]

NINE_LMM_H = [
    [1, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 1, 0, 0, 1, 1, 1, 0, 1],
    [0, 0, 1, 0, 0, 1, 0, 1, 1],
    [0, 0, 0, 1, 0, 0, 1, 1, 1],
    [1, 1, 0, 0, 3, 1, 1, 0, 1],
    [0, 1, 1, 0, 1, 3, 1, 1, 3],
    [0, 1, 0, 1, 1, 1, 3, 1, 3],
    [0, 0, 1, 1, 0, 1, 1, 3, 3],
    [0, 1, 1, 1, 1, 3, 3, 3, "H+6"],
]
NINE_LPP_H = [
    [2, 1, 0, 0, 1, 0, 0, 0, 0],
    [1, "H+4", "H+1", "H+1", 1, "H+1", "H+1", "H", "H"],
    [0, "H+1", "H+3", "H+1", 0, "H+1", "H", "H+1", "H"],
    [0, "H+1", "H+1", "H+3", 0, "H", "H+1", "H+1", "H"],
    [1, 1, 0, 0, 1, 0, 0, 0, 0],
    [0, "H+1", "H+1", "H", 0, "H+1", "H", "H", "H"],
    [0, "H+1", "H", "H+1", 0, "H", "H+1", "H", "H"],
    [0, "H", "H+1", "H+1", 0, "H", "H", "H+1", "H"],
    [0, "H", "H", "H", 0, "H", "H", "H", "H"],
]


def throttle(rows):
    """Scale the last column by T."""
    return [row[:-1] + [f"({row[-1]})*T"] for row in rows]


NINE_LMM_TH = throttle(NINE_LMM_H)
NINE_LPP_TH = throttle(NINE_LPP_H)

P_TH = ["H*T", "1 + 6*T + 16*H*T", "16 + 65*T + 95*H*T", "95 + 265*T + 268*H*T", "268 + 519*T + 380*H*T",
        "380 + 519*T + 268*H*T", "268 + 265*T + 95*H*T", "95 + 65*T + 16*H*T", "16 + 6*T + H*T", "1"]
Q_TH = ["H*T", "1 + 6*H + 16*H*T", "16 + 65*H + 95*H*T", "95 + 265*H + 268*H*T", "268 + 519*H + 380*H*T",
        "380 + 519*H + 268*H*T", "268 + 265*H + 95*H*T", "95 + 65*H + 16*H*T", "16 + 6*H + H*T", "1"]
P_H = ["H", "7 + 16*H", "81 + 95*H", "360 + 268*H", "787 + 380*H", "899 + 268*H", "533 + 95*H",
       "160 + 16*H", "22 + H", "1"]
Q_H = ["H", "1 + 22*H", "16 + 160*H", "95 + 533*H", "268 + 899*H", "380 + 787*H", "268 + 360*H",
       "95 + 81*H", "16 + 7*H", "1"]
P11 = [1, 23, 176, 628, 1167, 1167, 628, 176, 23, 1]
P00 = [0, 1, 16, 95, 268, 380, 268, 95, 16, 1]

# multigraph example, in the listed (non-canonical) order
CODE5 = [[1, 2, 3], [1, 2], [2, 3], [1], [3]]
CODE5_LMM = [[5, 2, 2, 1, 1], [2, 2, 0, 1, 0], [2, 0, 2, 0, 1], [1, 1, 0, 1, 0], [1, 0, 1, 0, 1]]
CODE5_LPP = [[1, 1, 1, 1, 1], [1, 2, 1, 2, 1], [1, 1, 2, 1, 2], [1, 2, 1, 3, 1], [1, 1, 2, 1, 3]]

C5 = [[1], [1, 2], [2], [2, 3], [3], [3, 4], [4], [4, 5], [5], [5, 1]]
C5_LMM = [
    [1, 1, 0, 0, 0, 0, 0, 0, 0, 1],
    [1, 3, 1, 1, 0, 0, 0, 0, 0, 1],
    [0, 1, 1, 1, 0, 0, 0, 0, 0, 0],
    [0, 1, 1, 3, 1, 1, 0, 0, 0, 0],
    [0, 0, 0, 1, 1, 1, 0, 0, 0, 0],
    [0, 0, 0, 1, 1, 3, 1, 1, 0, 0],
    [0, 0, 0, 0, 0, 1, 1, 1, 0, 0],
    [0, 0, 0, 0, 0, 1, 1, 3, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 1, 1, 1],
    [1, 1, 0, 0, 0, 0, 0, 1, 1, 3],
]
C5_LPP = [
    [3, 1, 1, 0, 0, 0, 0, 0, 1, 1],
    [1, 1, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 3, 1, 1, 0, 0, 0, 0, 0],
    [0, 0, 1, 1, 1, 0, 0, 0, 0, 0],
    [0, 0, 1, 1, 3, 1, 1, 0, 0, 0],
    [0, 0, 0, 0, 1, 1, 1, 0, 0, 0],
    [0, 0, 0, 0, 1, 1, 3, 1, 1, 0],
    [0, 0, 0, 0, 0, 0, 1, 1, 1, 0],
    [1, 0, 0, 0, 0, 0, 1, 1, 3, 1],
    [1, 0, 0, 0, 0, 0, 0, 0, 1, 1],
]

# parameter case, closure of {1,2},{2,3}
PARAM5 = [[1], [2], [3], [1, 2], [2, 3]]
PARAM5_G = [
    ["-t**2-t", "-t**2", 0, "t**2", 0],
    ["-t**2", "-2*t**2-t", "-t**2", "t**2", "t**2"],
    [0, "-t**2", "-t**2-t", 0, "t**2"],
    ["t**2", "t**2", 0, "-t**2", 0],
    [0, "t**2", "t**2", 0, "-t**2"],
]
_A = "1-(t+1)*t**-1"
_B = "1-(t**2+2*t+1)*t**-2"
PARAM5_L = [
    [_A, 0, 0, _A, 0],
    [0, _A, 0, _A, _A],
    [0, 0, _A, 0, _A],
    [_A, _A, 0, _B, _A],
    [0, _A, _A, _A, _B],
]
PARAM5_ENERGY = "-3*t-2*t**2"

QFORM4 = [[1], [2], [3], [1, 3]]
QFORM4_L = [[1, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 1], [1, 0, 1, 3]]

# det(L - x) of the complete complexes K2, K3 with constant energy
K2_CHARPOLY = [-1, 5, -5, 1]
K3_CHARPOLY = [-1, 19, -102, 228, -228, 102, -19, 1]
