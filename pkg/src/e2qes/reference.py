"""Independent closed-form oracles and reference values.

Nothing in the production path imports this module; it exists so that the
test suite and ``verify`` can compare computed results against formulas
evaluated a different way (radicals, cube roots) and against tabulated
numbers.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction

# closed-form energies -----------------------------------------------------

_PHASES = (-2, 0, 2)


def _cbrt(z: complex) -> complex:
    return z ** (1.0 / 3.0) if z != 0 else 0j


def omega_sine7(zeta: float) -> complex:
    z2 = zeta * zeta
    inner = cmath.sqrt(16 * z2 ** 3 - 148 * z2 ** 2 + 991 * z2 - 900)
    return _cbrt(143 + 72 * z2 + 6 * cmath.sqrt(3) * inner)


def omega_cosine5(zeta: float) -> complex:
    z2 = zeta * zeta
    inner = cmath.sqrt(16 * z2 ** 3 - 4 * z2 ** 2 + 103 * z2 - 9)
    return _cbrt(35 + 72 * z2 + 6 * cmath.sqrt(3) * inner)


def _cardano(shift: float, om: complex, c: float, ell: int) -> complex:
    ph = cmath.exp(1j * cmath.pi * ell / 3)
    return shift + (4 / 3) * ph * om + (4 / 3) / ph * c / om


def energy_sine7(zeta: float, ell: int) -> complex:
    z2 = zeta * zeta
    return _cardano(56 / 3 + z2, omega_sine7(zeta), 49 - 12 * z2, ell)


def energy_cosine5(zeta: float, ell: int) -> complex:
    z2 = zeta * zeta
    return _cardano(20 / 3 + z2, omega_cosine5(zeta), 13 - 12 * z2, ell)


def closed_form_energies(N: int, sector: str, zeta: float) -> list[complex]:
    """Radical expressions for the low levels; sine N = 3, 5, 7 and cosine N = 1, 3, 5."""
    z2 = zeta * zeta
    if sector == "s":
        if N == 3:
            return [complex(4 + z2)]
        if N == 5:
            r = 2 * cmath.sqrt(9 - 4 * z2)
            return [10 + z2 + r, 10 + z2 - r]
        if N == 7:
            return [energy_sine7(zeta, ell) for ell in _PHASES]
    else:
        if N == 1:
            return [complex(z2)]
        if N == 3:
            r = 2 * cmath.sqrt(1 - 4 * z2)
            return [2 + z2 + r, 2 + z2 - r]
        if N == 5:
            return [energy_cosine5(zeta, ell) for ell in _PHASES]
    raise KeyError(f"no closed form for N={N}, sector={sector}")


def multiset_distance(a, b) -> float:
    """Largest distance under the best matching of two equal-size complex multisets."""
    from itertools import permutations

    a, b = list(a), list(b)
    if len(a) != len(b):
        return float("inf")
    return min(max(abs(x - y) for x, y in zip(a, p)) for p in permutations(b))


# closed-form weights (three-point measures) -------------------------------

def kappa_sine7(zeta: float, ell: int) -> complex:
    z2 = zeta * zeta
    om = omega_sine7(zeta)
    a = 49 - 12 * z2
    e = cmath.exp(1j * cmath.pi * ell / 3)
    num = 2 * a * a + 3 * (48 - 7 * z2) / e * om ** 2 + 22 * (12 * z2 - 49) * e * om \
        + 2 * e * om ** 4 - 22 * om ** 3
    den = 6 * (a * a + a / e * om ** 2 + e * om ** 4)
    return num / den


def kappa_cosine5(zeta: float, ell: int) -> complex:
    # the exponent index is read as ell throughout
    z2 = zeta * zeta
    om = omega_cosine5(zeta)
    a = 13 - 12 * z2
    e = cmath.exp(1j * cmath.pi * ell / 3)
    num = a * a + (12 - 15 * z2) / e * om ** 2 + (60 * z2 - 65) * e * om + e * om ** 4 - 5 * om ** 3
    den = 3 * a * a + (39 - 36 * z2) / e * om ** 2 + 3 * e * om ** 4
    return num / den


def closed_form_measure(N: int, sector: str, zeta: float,
                        weight_labels: tuple[int, int, int] = (-2, 2, 0)) -> list[tuple[complex, complex]]:
    """``(E_k, w_k)`` for roots labelled (-2, 2, 0).

    The weight at the root with phase label l is kappa_l.  Passing
    ``(2, -2, 0)`` gives the crossed assignment instead.
    """
    if (N, sector) == (7, "s"):
        en, ka = energy_sine7, kappa_sine7
    elif (N, sector) == (5, "c"):
        en, ka = energy_cosine5, kappa_cosine5
    else:
        raise KeyError(f"no closed-form measure for N={N}, sector={sector}")
    roots = [en(zeta, ell) for ell in (-2, 2, 0)]
    return [(r, ka(zeta, w)) for r, w in zip(roots, weight_labels)]


# polynomial lists in u = zeta**2 (coefficients, low degree first) ----------

MOMENTS = {
    (7, "s"): [[1], [4, 1], [16, -32, 1], [64, -912, -108, 1], [256, -17024, -1184, -224, 1]],
    (5, "c"): [[1], [0, 1], [0, -48, 1], [0, -192, -144, 1], [0, -768, 2304, -288, 1]],
}

NORMS = {
    (7, "s"): [[1], [0, -40], [0, 0, 960], [], []],
    (5, "c"): [[1], [0, -48], [0, 0, 768], [], []],
}

# Q_k in (E, t), as {(deg E, deg t): coefficient}
QUOTIENTS = {
    (7, "s"): {1: {(1, 0): 1, (0, 1): -1, (0, 0): -64},
               2: {(2, 0): 1, (1, 1): -2, (1, 0): -164, (0, 2): 1, (0, 1): 132, (0, 0): 6400}},
    (5, "c"): {1: {(1, 0): 1, (0, 1): -1, (0, 0): -36},
               2: {(2, 0): 1, (1, 1): -2, (1, 0): -100, (0, 2): 1, (0, 1): 76, (0, 0): 2304}},
}

# discriminants in u, highest degree first
DISCRIMINANTS = {
    (3, "c"): [4, -1],
    (5, "s"): [4, -9],
    (5, "c"): [16, -4, 103, -9],
    (7, "s"): [16, -148, 991, -900],
    (7, "c"): [256, 128, 6160, -132480, 16128, -183069, 8100],
    (9, "s"): [256, -6016, 112656, -1526400, 6645600, -19579725, 9922500],
    (9, "c"): [16384, 40960, 805888, -50754048, 1392155136, 290722752, 11896163064,
               -113625663975, 8084618100, -53543300400, 1428840000],
    (11, "s"): [16384, -778240, 29068288, -922894848, 21572729856, -252561878208,
                2351098873944, -15196772229975, 39898457932725, -69457284086400,
                22684263840000],
}
# only the leading terms are available for this one
DISCRIMINANT_LEADING = {
    (11, "c"): [4194304, 26214400, 274464768, -43646517248, 2888883798016],
}
TRIVIAL_DISCRIMINANTS = [(1, "s"), (1, "c"), (3, "s")]

# zeta0 * N, both sectors merged
TABLE_QES = {
    3: ["1.50000"],
    5: ["1.47963", "7.50000"],
    7: ["1.47426", "7.19195", "18.4246"],
    9: ["1.47208", "7.08219", "17.5098", "34.4001"],
    11: ["1.47098", "7.02966", "17.1292", "32.5974", "55.4904"],
}
TABLE_QES_LIMIT = ["1.46877", "6.92895", "16.4711", "30.0967", "47.806"]

TABLE_XI = {
    2: ["6.00000"],
    3: ["6.97891"],
    4: ["6.92848", "18.77091"],
    5: ["6.92896", "24.29547"],
    6: ["6.92895", "29.26843", "29.73862"],
    7: ["6.92895", "30.10798", "34.30404"],
    8: ["6.92895", "30.09660", "39.34849", "61.30789"],
}
TABLE_THETA = {
    2: ["1.41421"],
    3: ["1.46904"],
    4: ["1.46877", "12.34951"],
    5: ["1.46877", "17.88618"],
    6: ["1.46877", "16.44658", "24.21371"],
    7: ["1.46877", "16.47150", "29.27154"],
    8: ["1.46877", "16.47116", "34.30396", "45.47616"],
}
STABLE_XI = ["6.928955", "30.09677", "69.59879", "125.4354", "197.6067", "286.1126", "390.9532"]
STABLE_THETA = ["1.46877", "16.47117", "47.80597", "95.47527", "159.4792", "239.8178", "336.4911"]
FLOQUET_CRITICAL = "1.46877"


def as_fractions(values: list[str]) -> list[Fraction]:
    return [Fraction(v) for v in values]


def significant_match(value: float, printed: str, digits: int = 5) -> bool:
    """True when ``value`` and ``printed`` differ by at most half a unit in the ``digits``-th significant place."""
    p = float(printed)
    if p == 0:
        return value == 0
    unit = 10.0 ** (math.floor(math.log10(abs(p))) - digits + 1)
    return abs(value - p) <= 0.5 * unit * (1 + 1e-12)


def decimal_match(value: float, printed: str) -> bool:
    """True when ``value`` rounded to the printed number of decimals equals it (|diff| <= half ulp)."""
    places = len(printed.split(".")[1]) if "." in printed else 0
    return abs(value - float(printed)) <= 0.5 * 10 ** -places + 1e-12

# complete lists at the two largest truncations (bold values are the stable ones)
FULL_XI = {
    26: ["6.928955", "30.09677", "69.59879", "125.4354", "130.5181", "197.6067", "251.2637",
         "286.1126", "357.0076", "390.9532", "448.0887", "511.0770", "525.2021"],
    27: ["6.928955", "30.09677", "69.59879", "125.4354", "135.5878", "197.6067", "261.6061",
         "286.1126", "372.5999", "390.9532", "468.8640", "512.1858", "551.0671"],
}
FULL_THETA = {
    26: ["1.46877", "16.47117", "47.80597", "95.47527", "125.4485", "159.4792", "239.8178",
         "240.9227", "336.4911", "341.4216", "427.3330", "449.3487", "498.9970"],
    27: ["1.46877", "16.47117", "47.80597", "95.47527", "130.5181", "159.4792", "239.8178",
         "251.2637", "336.4911", "357.0076", "448.0887", "449.5057", "525.2659"],
}
