"""
Reference tables for skew-symmetric n = 6, 7 and symmetric n = 3, 4.

Classes are stored as {power of H: coefficient}; cycle rows as tuples of the
coefficients of h1^(N+1-j) h2^j for j = 1..N. Values are transcribed as
printed. The second n = 7 cycle table carries shuffled column headers; its
entries are read in order j = 11..20 (the only reading under which the
printed Ch row is flip-symmetric).
"""

from __future__ import annotations

from .exactalg import HClass

__all__ = ["GROUPS", "as_class"]


def as_class(N: int, terms: dict[int, int]) -> HClass:
    cs = [0] * (N + 1)
    for p, c in terms.items():
        cs[p] = c
    return HClass(N, cs)


def _h(*pairs):
    # _h(c14, 14, c13, 13, ...) -> {14: c14, 13: c13, ...}
    return {pairs[i + 1]: pairs[i] for i in range(0, len(pairs), 2)}


_SKEW6 = {
    ("q", 2): _h(90, 14, 405, 13, 1290, 12, 2925, 11, 4878, 10, 6225, 9, 6318, 8, 5217, 7,
                 3504, 6, 1863, 5, 744, 4, 207, 3, 36, 2, 3, 1),
    ("q", 4): _h(15, 14, 60, 13, 170, 12, 330, 11, 438, 10, 394, 9, 234, 8, 84, 7, 14, 6),
    ("csm_dense", None): _h(15, 12, 90, 11, 315, 10, 750, 9, 1287, 8, 1638, 7, 1571, 6, 1140, 5,
                            621, 4, 248, 3, 69, 2, 12, 1, 1, 0),
    ("csm_open", 2): _h(45, 13, 270, 12, 945, 11, 2250, 10, 3861, 9, 4914, 8, 4713, 7,
                        3420, 6, 1863, 5, 744, 4, 207, 3, 36, 2, 3, 1),
    ("csm_open", 4): _h(15, 14, 60, 13, 170, 12, 330, 11, 438, 10, 394, 9, 234, 8, 84, 7, 14, 6),
    ("Ch", 2): (-3, -6, -12, -24, -48, -82, -108, -108, -82, -48, -24, -12, -6, -3),
    ("Ch", 4): (3, 6, 12, 24, 48, 68, 66, 42, 14, 0, 0, 0, 0, 0),
    ("Con", 4): (3, 6, 12, 24, 48, 68, 66, 42, 14, 0, 0, 0, 0, 0),
    ("Con", 2): (0, 0, 0, 0, 0, -14, -42, -66, -68, -48, -24, -12, -6, -3),
}

_SKEW7 = {
    ("q", 3): _h(210, 20, 1155, 19, 4690, 18, 14175, 17, 32970, 16, 61299, 15, 94698, 14,
                 125139, 13, 142898, 12, 139839, 11, 115038, 10, 77777, 9, 42238, 8,
                 17965, 7, 5782, 6, 1330, 5, 196, 4, 14, 3),
    ("q", 5): _h(21, 20, 105, 19, 385, 18, 1015, 17, 1939, 16, 2695, 15, 2719, 14, 1960, 13,
                 966, 12, 294, 11, 42, 10),
    ("csm_dense", None): _h(105, 18, 945, 17, 4830, 16, 17220, 15, 46053, 14, 95991, 13,
                            159726, 12, 215523, 11, 238056, 10, 216153, 9, 161252, 8,
                            98315, 7, 48482, 6, 19019, 5, 5789, 4, 1327, 3, 210, 2, 21, 1, 1, 0),
    ("csm_open", 3): _h(105, 19, 840, 18, 4025, 17, 13580, 16, 34349, 15, 67508, 14,
                        105539, 13, 133238, 12, 136899, 11, 114618, 10, 77777, 9, 42238, 8,
                        17965, 7, 5782, 6, 1330, 5, 196, 4, 14, 3),
    ("csm_open", 5): _h(21, 20, 105, 19, 385, 18, 1015, 17, 1939, 16, 2695, 15, 2719, 14,
                        1960, 13, 966, 12, 294, 11, 42, 10),
    ("Ch", 3): (0, 0, -14, -56, -140, -266, -395, -434, -336, -210,
                -210, -336, -434, -395, -266, -140, -56, -14, 0, 0),
    ("Ch", 5): (0, 0, 14, 56, 140, 266, 395, 434, 336, 168,
                42, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    ("Con", 5): (0, 0, 14, 56, 140, 266, 395, 434, 336, 168,
                 42, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    ("Con", 3): (0, 0, 0, 0, 0, 0, 0, 0, 0, -42,
                 -168, -336, -434, -395, -266, -140, -56, -14, 0, 0),
}

_SYM3 = {
    ("q", 1): _h(9, 5, 18, 4, 18, 3, 9, 2, 3, 1),
    ("q", 2): _h(3, 5, 6, 4, 4, 3),
    ("csm_dense", None): _h(3, 4, 6, 3, 6, 2, 3, 1, 1, 0),
    ("csm_open", 1): _h(3, 5, 6, 4, 10, 3, 9, 2, 3, 1),
    ("csm_open", 2): _h(3, 5, 6, 4, 4, 3),
    ("Ch", 1): (3, 6, 8, 6, 3),
    ("Ch", 2): (3, 6, 4, 0, 0),
    ("Con", 2): (3, 6, 4, 0, 0),
    ("Con", 1): (0, 0, 4, 6, 3),
}

_SYM4 = {
    ("q", 1): _h(24, 9, 84, 8, 184, 7, 264, 6, 264, 5, 184, 4, 84, 3, 24, 2, 4, 1),
    ("q", 2): _h(18, 9, 54, 8, 92, 7, 96, 6, 72, 5, 40, 4, 10, 3),
    ("q", 3): _h(4, 9, 12, 8, 16, 7, 8, 6),
    ("csm_dense", None): _h(3, 8, 12, 7, 34, 6, 60, 5, 66, 4, 46, 3, 21, 2, 6, 1, 1, 0),
    ("csm_open", 1): _h(12, 8, 48, 7, 96, 6, 120, 5, 104, 4, 64, 3, 24, 2, 4, 1),
    ("csm_open", 2): _h(6, 9, 18, 8, 44, 7, 72, 6, 72, 5, 40, 4, 10, 3),
    ("csm_open", 3): _h(4, 9, 12, 8, 16, 7, 8, 6),
    ("Ch", 1): (4, 12, 26, 38, 42, 38, 26, 12, 4),
    ("Ch", 2): (0, 0, 10, 30, 42, 30, 10, 0, 0),
    ("Con", 2): (0, 0, 10, 30, 42, 30, 10, 0, 0),
    ("Ch", 3): (-4, -12, -16, -8, 0, 0, 0, 0, 0),
    ("Con", 3): (-4, -12, -16, -8, 0, 0, 0, 0, 0),
    ("Con", 1): (0, 0, 0, 0, 0, 8, 16, 12, 4),
}

# group name -> (kind, n, table)
GROUPS = {
    "skew-n6": ("skew", 6, _SKEW6),
    "skew-n7": ("skew", 7, _SKEW7),
    "sym-n3": ("symmetric", 3, _SYM3),
    "sym-n4": ("symmetric", 4, _SYM4),
}
