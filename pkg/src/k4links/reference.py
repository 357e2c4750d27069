"""Reference expansions and constants used as regression targets.

Series are stored densely from ``z^0``; absent terms are zero.
"""

REFERENCE_SERIES = {
    "K": [1, 0, 0, 2, 0, 2, 3, 2, 4, 6, 7, 8, 13, 14, 19, 26],
    "Lbar": [1, 0, 1, 2, 3, 4, 9, 12, 26, 40, 82, 136, 280],
    "Lhat": [1, 0, 1, 2, 4, 6, 16, 24, 56, 98, 208, 382, 805],
    "L": [0, 1, 1, 1, 2, 2, 4, 4, 8, 8, 14, 14, 30, 30],
    "Mplus": [0, 0, 4, 0, 36, 0, 432, 0, 5984, 0, 90112, 0, 1432576, 0, 23656960],
    "M1plus": [0, 0, 0, 0, 2, 0, 4, 0, 20, 0, 84, 0, 372, 0, 1796, 0, 8516, 0, 42340, 0, 211332],
    "M2plus": [0, 0, 4, 0, 32, 0, 332, 0, 3968, 0, 51688, 0, 712416, 0, 10214604, 0, 150776064],
}

# five-digit reference values: (rho, constant) or named constants
REFERENCE_CONSTANTS = {
    "Lbar": {"rho": 0.44074, "c": 23.46469, "C": 9.92890},
    "Lhat": {"rho": 0.44074, "c": 58.99565, "C": 24.96355},
    "L": {"even": 594.24035, "odd": 394.50617},
    "Knots": {"c": 0.26275, "beta": 2.56509},
    "M": {"rho": 0.31184, "c": -3.04531},
    "M1": {"rho": 0.41456, "c": -1.62846},
    "M2": {"rho": 0.23626, "c": -3.39943},
}
