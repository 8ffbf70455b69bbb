"""Block grids transcribed from the reference displays, as template strings.

``σ`` is left symbolic where the display keeps it; ``parse_grid`` substitutes it.
"""

EX1 = [
    ["λP_5", "λP_4", "0", "-I", "0"],
    ["0", "P_2", "0", "λI", "-I"],
    ["λP_3", "0", "λP_1+P_0", "0", "λI"],
    ["-σI", "σλI", "0", "0", "0"],
    ["0", "-σI", "σλI", "0", "0"],
]

EX2 = [
    ["λP_5+P_4", "P_3", "0", "-I", "0"],
    ["0", "0", "λP_2", "λI", "-I"],
    ["0", "P_1", "P_0", "0", "λI"],
    ["-σI", "σλI", "0", "0", "0"],
    ["0", "-σI", "σλI", "0", "0"],
]

EX3 = [
    ["λP_5", "E", "-λE", "-I", "0"],
    ["λP_4", "λF", "λP_2", "λI", "-I"],
    ["λ(P_3-F)", "P_1", "P_0", "0", "λI"],
    ["-σI", "σλI", "0", "0", "0"],
    ["0", "-σI", "σλI", "0", "0"],
]

ECOUPLED_SYM = [
    ["λP_5+P_4", "0", "E", "-I", "0"],
    ["0", "λP_3+P_2-E-E^T", "0", "λI", "-I"],
    ["E^T", "0", "λP_1+P_0", "0", "λI"],
    ["-I", "λI", "0", "0", "0"],
    ["0", "-I", "λI", "0", "0"],
]

ECOUPLED_SKEW = [
    ["λP_5+P_4", "0", "E", "-I", "0"],
    ["0", "λP_3+P_2-E+E^T", "0", "λI", "-I"],
    ["-E^T", "0", "λP_1+P_0", "0", "λI"],
    ["I", "-λI", "0", "0", "0"],
    ["0", "I", "-λI", "0", "0"],
]

L1_SYM_D7 = [
    ["λP_7+P_6", "0", "0", "0", "-I", "0", "0"],
    ["0", "λP_5+P_4", "0", "0", "λI", "-I", "0"],
    ["0", "0", "λP_3+P_2", "0", "0", "λI", "-I"],
    ["0", "0", "0", "λP_1+P_0", "0", "0", "λI"],
    ["-I", "λI", "0", "0", "0", "0", "0"],
    ["0", "-I", "λI", "0", "0", "0", "0"],
    ["0", "0", "-I", "λI", "0", "0", "0"],
]

L1_SYM_D7_TRIDIAGONAL = [
    ["λP_7+P_6", "-I", "0", "0", "0", "0", "0"],
    ["-I", "0", "λI", "0", "0", "0", "0"],
    ["0", "λI", "λP_5+P_4", "-I", "0", "0", "0"],
    ["0", "0", "-I", "0", "λI", "0", "0"],
    ["0", "0", "0", "λI", "λP_3+P_2", "-I", "0"],
    ["0", "0", "0", "0", "-I", "0", "λI"],
    ["0", "0", "0", "0", "0", "λI", "λP_1+P_0"],
]

L2_SYM_D7 = [
    ["λP_7-P_6", "λP_6", "0", "0", "-I", "0", "0"],
    ["λP_6", "λP_5-P_4", "λP_4", "0", "λI", "-I", "0"],
    ["0", "λP_4", "λP_3-P_2", "λP_2", "0", "λI", "-I"],
    ["0", "0", "λP_2", "λP_1+P_0", "0", "0", "λI"],
    ["-I", "λI", "0", "0", "0", "0", "0"],
    ["0", "-I", "λI", "0", "0", "0", "0"],
    ["0", "0", "-I", "λI", "0", "0", "0"],
]

L2_SYM_D7_PENTADIAGONAL = [
    ["λP_7-P_6", "-I", "λP_6", "0", "0", "0", "0"],
    ["-I", "0", "λI", "0", "0", "0", "0"],
    ["λP_6", "λI", "λP_5-P_4", "-I", "λP_4", "0", "0"],
    ["0", "0", "-I", "0", "λI", "0", "0"],
    ["0", "0", "λP_4", "λI", "λP_3-P_2", "-I", "λP_2"],
    ["0", "0", "0", "0", "-I", "0", "λI"],
    ["0", "0", "0", "0", "λP_2", "λI", "λP_1+P_0"],
]

L1_SKEW_D7 = [
    ["λP_7+P_6", "0", "0", "0", "-I", "0", "0"],
    ["0", "λP_5+P_4", "0", "0", "λI", "-I", "0"],
    ["0", "0", "λP_3+P_2", "0", "0", "λI", "-I"],
    ["0", "0", "0", "λP_1+P_0", "0", "0", "λI"],
    ["I", "-λI", "0", "0", "0", "0", "0"],
    ["0", "I", "-λI", "0", "0", "0", "0"],
    ["0", "0", "I", "-λI", "0", "0", "0"],
]

L1_SKEW_D7_TRIDIAGONAL = [
    ["λP_7+P_6", "-I", "0", "0", "0", "0", "0"],
    ["I", "0", "-λI", "0", "0", "0", "0"],
    ["0", "λI", "λP_5+P_4", "-I", "0", "0", "0"],
    ["0", "0", "I", "0", "-λI", "0", "0"],
    ["0", "0", "0", "λI", "λP_3+P_2", "-I", "0"],
    ["0", "0", "0", "0", "I", "0", "-λI"],
    ["0", "0", "0", "0", "0", "λI", "λP_1+P_0"],
]

FPR3_PERMUTED = [
    ["λP_5-P_4", "λP_4", "0", "-I", "0"],
    ["λP_4", "λP_3+P_2", "P_1", "λI", "-I"],
    ["0", "P_1", "-λP_1+P_0", "0", "λI"],
    ["-σI", "σλI", "0", "0", "0"],
    ["0", "-σI", "σλI", "0", "0"],
]

FPR5_PERMUTED = [
    ["λP_5+P_4", "P_3", "P_2", "-I", "0"],
    ["P_3", "-λP_3+P_2", "-λP_2+P_1", "λI", "-I"],
    ["P_2", "-λP_2+P_1", "-λP_1+P_0", "0", "λI"],
    ["-σI", "σλI", "0", "0", "0"],
    ["0", "-σI", "σλI", "0", "0"],
]

# even grade 6; the (2,1) block is printed as 0, while the accompanying block-sum
# computation uses λP_6 there
DEG6_PRINTED = [
    ["-P_6", "λP_6-P_5", "λP_5", "0", "0", "0"],
    ["0", "λP_5", "λP_4", "0", "-I", "0"],
    ["P_4", "P_3", "0", "P_1", "λI", "-I"],
    ["-λP_4", "0", "λP_2", "P_0", "0", "λI"],
    ["0", "-σI", "σλI", "0", "0", "0"],
    ["0", "0", "-σI", "σλI", "0", "0"],
]

EVEN_D8 = [
    ["-P_8", "λP_8", "0", "0", "0", "0", "0", "0"],
    ["λP_8", "λP_7+P_6", "0", "0", "0", "-I", "0", "0"],
    ["0", "0", "λP_5+P_4", "0", "0", "λI", "-I", "0"],
    ["0", "0", "0", "λP_3+P_2", "0", "0", "λI", "-I"],
    ["0", "0", "0", "0", "λP_1+P_0", "0", "0", "λI"],
    ["0", "-σI", "σλI", "0", "0", "0", "0", "0"],
    ["0", "0", "-σI", "σλI", "0", "0", "0", "0"],
    ["0", "0", "0", "-σI", "σλI", "0", "0", "0"],
]

EVEN_D8_TRIDIAGONAL = [
    ["-P_8", "λP_8", "0", "0", "0", "0", "0", "0"],
    ["λP_8", "λP_7+P_6", "-I", "0", "0", "0", "0", "0"],
    ["0", "-σI", "0", "σλI", "0", "0", "0", "0"],
    ["0", "0", "λI", "λP_5+P_4", "-I", "0", "0", "0"],
    ["0", "0", "0", "-σI", "0", "σλI", "0", "0"],
    ["0", "0", "0", "0", "λI", "λP_3+P_2", "-I", "0"],
    ["0", "0", "0", "0", "0", "-σI", "0", "σλI"],
    ["0", "0", "0", "0", "0", "0", "λI", "λP_1+P_0"],
]

TRAILING_D8 = [
    ["-λP_0", "P_0", "0", "0", "0", "0", "0", "0"],
    ["P_0", "λP_2+P_1", "0", "0", "0", "-λI", "0", "0"],
    ["0", "0", "λP_4+P_3", "0", "0", "I", "-λI", "0"],
    ["0", "0", "0", "λP_6+P_5", "0", "0", "I", "-λI"],
    ["0", "0", "0", "0", "λP_8+P_7", "0", "0", "I"],
    ["0", "-σλI", "σI", "0", "0", "0", "0", "0"],
    ["0", "0", "-σλI", "σI", "0", "0", "0", "0"],
    ["0", "0", "0", "-σλI", "σI", "0", "0", "0"],
]

TRAILING_D8_TRIDIAGONAL = [
    ["-λP_0", "P_0", "0", "0", "0", "0", "0", "0"],
    ["P_0", "λP_2+P_1", "-λI", "0", "0", "0", "0", "0"],
    ["0", "-σλI", "0", "σI", "0", "0", "0", "0"],
    ["0", "0", "I", "λP_4+P_3", "-λI", "0", "0", "0"],
    ["0", "0", "0", "-σλI", "0", "σI", "0", "0"],
    ["0", "0", "0", "0", "I", "λP_6+P_5", "-λI", "0"],
    ["0", "0", "0", "0", "0", "-σλI", "0", "σI"],
    ["0", "0", "0", "0", "0", "0", "I", "λP_8+P_7"],
]

# grade-4 companion forms with nonsingular leading coefficient
FPR_L5 = [
    ["0", "0", "-I", "λI"],
    ["0", "-P_4", "λP_4-P_3", "λP_3"],
    ["-I", "λP_4-P_3", "λP_3-P_2", "λP_2"],
    ["λI", "λP_3", "λP_2", "λP_1+P_0"],
]

FPR_L5_PERMUTED = [
    ["-P_4", "λP_4-P_3", "λP_3", "0"],
    ["λP_4-P_3", "λP_3-P_2", "λP_2", "-I"],
    ["λP_3", "λP_2", "λP_1+P_0", "λI"],
    ["0", "-I", "λI", "0"],
]

FPR_L9_PERMUTED = [
    ["-P_4", "λP_4", "0", "0"],
    ["λP_4", "λP_3-P_2", "λP_2", "-I"],
    ["0", "λP_2", "λP_1+P_0", "λI"],
    ["0", "-I", "λI", "0"],
]

# the printed form carries λP_3+P_2 and an asymmetric ±I pair
FPR_L7_PRINTED = [
    ["-P_4", "0", "λP_4", "0"],
    ["0", "0", "-I", "λI"],
    ["λP_4", "I", "λP_3+P_2", "λP_2"],
    ["0", "λI", "λP_2", "λP_1+P_0"],
]

# grade-4 companion form with nonsingular trailing coefficient, as printed
FPR_L6_PRINTED = [
    ["0", "-I", "λI", "0"],
    ["-I", "λP_4-P_3", "λP_3", "0"],
    ["λI", "λP_3", "λP_2-P_1", "P_0"],
    ["0", "0", "P_0", "-λP_0"],
]

# sign flip of block 1 and block reversal of the printed L6
FPR_L6_FLIPPED_PRINTED = [
    ["-λP_0", "P_0", "0", "0"],
    ["P_0", "λP_2-P_1", "λP_3", "-λI"],
    ["0", "λP_3", "λP_4-P_3", "I"],
    ["0", "-λI", "I", "0"],
]

FPR_L6_SOURCE_PRINTED = [
    ["-P_0", "λP_0", "0", "0"],
    ["P_0", "-λP_1+P_2", "P_3", "-λI"],
    ["0", "P_3", "-λP_3+P_4", "I"],
    ["0", "-I", "λI", "0"],
]
