import logging

# Configure logging
logger = logging.getLogger("k3.baselocus")

class K3LatticeError(Exception):
    """Base exception for domain errors"""
    def __init__(self, code, message, details=None):
        self.code = code
        self.message = message
        self.details = details or {}
        super().__init__(f"{code}: {message}")

class UsageError(Exception):
    """Exception for malformed command-line input"""
    def __init__(self, message, field=None):
        self.message = message
        self.field = field
        super().__init__(message)

class MismatchedAmbientError(K3LatticeError):
    """Pairing of classes living over different n or different lambda"""
    def __init__(self, message, details=None):
        super().__init__("MISMATCHED_AMBIENT", message, details)

class ZeroClassError(K3LatticeError):
    """Exception for operations undefined on the zero class"""
    def __init__(self, operation, details=None):
        message = f"{operation} is undefined for the zero class"
        super().__init__("ZERO_CLASS", message, {"operation": operation, **(details or {})})

class OddSquareError(K3LatticeError):
    def __init__(self, q_value, details=None):
        message = f"BBF squares are even, got {q_value}"
        super().__init__("ODD_SQUARE", message, {"value": q_value, **(details or {})})

class NotNefError(K3LatticeError):
    """Exception for classes outside the nef cone of the requested model"""
    def __init__(self, coords, model, details=None):
        message = f"class {coords} is not nef on {model}"
        super().__init__("NOT_NEF", message, {"coords": coords, "model": model, **(details or {})})

class NonIntegralRestrictionError(K3LatticeError):
    def __init__(self, e_coeff, details=None):
        message = f"exceptional coefficient {e_coeff} is not an integer"
        super().__init__("NON_INTEGRAL_RESTRICTION", message, {"value": e_coeff, **(details or {})})

class RankUnsupportedError(K3LatticeError):
    def __init__(self, rank, details=None):
        message = f"lattices of rank {rank} are not supported (rank must be 1 or 2)"
        super().__init__("RANK_UNSUPPORTED", message, {"value": rank, **(details or {})})

class NotBigError(K3LatticeError):
    def __init__(self, q_value, details=None):
        message = f"class is not big: q = {q_value} <= 0"
        super().__init__("NOT_BIG", message, {"value": q_value, **(details or {})})

class UnsupportedDivisibilityError(K3LatticeError):
    def __init__(self, m, details=None):
        message = f"divisibility {m} cannot occur for a primitive class (must be 1 or 2)"
        super().__init__("UNSUPPORTED_DIVISIBILITY", message, {"value": m, **(details or {})})

class NonPositiveSquareError(K3LatticeError):
    def __init__(self, d, details=None):
        message = f"half-square d must be positive, got {d}"
        super().__init__("NON_POSITIVE_SQUARE", message, {"value": d, **(details or {})})

class BidegreeMismatchError(K3LatticeError):
    def __init__(self, expected, got, details=None):
        message = f"expected bidegree {expected}, got {got}"
        super().__init__("BIDEGREE_MISMATCH", message, {"value": got, **(details or {})})

class VerificationFailedError(K3LatticeError):
    """Exception raised when a machine-checked statement does not hold"""
    def __init__(self, check, details=None):
        message = f"verification failed: {check}"
        # A failed verification means the arithmetic core is broken; always surface it
        logger.error(f"Verification failed: {check}", extra={"details": details})
        super().__init__("VERIFICATION_FAILED", message, {"operation": check, **(details or {})})
