# Lattice conventions for K3^[n]-type, q(delta) = -2(n-1)
MIN_HILBERT_N = 2
GENUS_TWO_HALF_SQUARE = 1  # q(H) = (H_S)^2 = 2 in the genus-2 example
GENUS_TWO_N = 2
LAMBDA_TAG_DEFAULT = "lambda"

# Named classes of the genus-2 example, (H, L) coordinates
L_COORDS = (0, 1)
H_PLUS_L_COORDS = (1, 1)
FLOP_WALL_RAY = (1, 2)  # H + 2L = 3H - 2delta
WALL_CLASS_HL = (-1, 3)  # W = 2H - 3delta
# Wall divisors of the genus-2 example are +-delta and +-(3H +- 2delta); only W is used here.

# Flop constant m for the single flopped plane
FLOP_CONSTANT_NUMERATOR = 1
FLOP_CONSTANT_DENOMINATOR = 2

# Section-space dimensions
DIM_V = 3
DIM_W = 6
EXPECTED_MU_KERNEL = 3

# Search and sweep limits
MAX_SEARCH_BOUND = 200
MAX_SWEEP = 500
MAX_GRAM_RANK = 2
SUPPORTED_DIVISIBILITIES = (1, 2)

MODELS = ("x", "xprime")
BASES = ("hdelta", "hl")

# Exit code definitions
EXIT_CODES = {
    "OK": 0,
    "USAGE_ERROR": 1,
    "DOMAIN_ERROR": 2,
}

# Error code definitions
ERROR_CODES = {
    "MISMATCHED_AMBIENT": "MismatchedAmbient",
    "ZERO_CLASS": "ZeroClass",
    "ODD_SQUARE": "OddSquare",
    "NOT_NEF": "NotNef",
    "NON_INTEGRAL_RESTRICTION": "NonIntegralRestriction",
    "RANK_UNSUPPORTED": "RankUnsupported",
    "NOT_BIG": "NotBig",
    "UNSUPPORTED_DIVISIBILITY": "UnsupportedDivisibility",
    "NON_POSITIVE_SQUARE": "NonPositiveSquare",
    "BIDEGREE_MISMATCH": "BidegreeMismatch",
    "VERIFICATION_FAILED": "VerificationFailed",
}

PROGRAM_NAME = "k3-baselocus"
