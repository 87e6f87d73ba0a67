"""Constants for tamepres."""

# Collection rewrite-step limit (one step per processed letter)
DEFAULT_COLLECTION_FUEL = 1_000_000

# Diagonal certificates formed per layer before the cover decision
DEFAULT_CERT_CAP = 64

# Margin subdivision: hard cap, and the extra depth used only to sharpen the value
DEFAULT_SUBDIVISION_DEPTH = 40
DEFAULT_REFINE_DEPTH = 12

# Finite-model defaults (coefficient modulus m, exponent modulus N)
DEFAULT_MODEL_MODULUS = 5
DEFAULT_MODEL_QUOTIENT = 4

# Random lattice points sampled beyond the scan radius
DEFAULT_TAIL_SAMPLES = 100

# Decimal digits kept by rational square-root bounds
SQRT_PRECISION = 10**6

# Spec-file section headers
SECTION_GROUP = "group"
SECTION_MODULE = "module"
SECTION_OPTIONS = "options"
