"""
Configuration values for the core domain.
"""
import math

# Rotation validity
ROTATION_TOLERANCE = 1e-9
MEASUREMENT_TOLERANCE = 1e-6
AXIS_NORM_TOLERANCE = 1e-12
DEGENERATE_SINGULAR_TOLERANCE = 1e-12

# Synthetic benchmark defaults
DEFAULT_OUTLIER_FRACTION = 0.4
DEFAULT_NOISE_SIGMA = math.radians(5.0)
DEFAULT_OUTLIER_MODE = "haar-uniform"
CONNECTIVITY_MAX_ATTEMPTS = 1000

# Deep matrix factorization defaults
DEFAULT_DEPTH = 5
DEFAULT_LEARNING_RATE = 0.3
DEFAULT_MOMENTUM = 0.9
DEFAULT_INIT_STD = 1e-2
DEFAULT_MAX_ITERS = 50_000
DEFAULT_PLATEAU_WINDOW = 500
DEFAULT_PLATEAU_REL_TOL = 1e-6
DEFAULT_PLATEAU_ARM_RATIO = 0.9
DEFAULT_LOSS = "l1"
DIVERGENCE_FACTOR = 1e6
REPORTED_SINGULAR_VALUES = 10
PROGRESS_LOG_INTERVAL = 1000

# Spectral recovery
SPECTRAL_GAP_RATIO = 1e-9

# Sweep defaults
DEFAULT_MISSING_FRACTIONS = (0.5, 0.6, 0.7, 0.8, 0.9)
DEFAULT_NODE_COUNTS = (100,)
DEFAULT_SWEEP_DEPTHS = (2, 3, 5)
DEFAULT_SWEEP_SEEDS = (0, 1, 2, 3, 4)
