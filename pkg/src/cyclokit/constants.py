"""Classical constants as fixed literals (30 digits, rounded to double)."""

EULER_GAMMA = 0.577215664901532860606512090082
LOG_2PI = 1.83787706640934548356065947281

# Tail of sum_{p > y} log p / (p^2 - 1), valid for y >= 3.
PRIME_TAIL_CONSTANT = 1.055

# theta(x) bounds of Rosser and Schoenfeld.
THETA_LOWER = 0.98
THETA_UPPER = 1.017
THETA_LOWER_FROM = 7481
THETA_UNIVERSAL_UPPER = 1.0012
