"""
Constants values used in the xlmimo app.
"""

SPEED_OF_LIGHT = 299_792_458.0
DEFAULT_CARRIER_HZ = 3.5e9
DEFAULT_WAVELENGTH = SPEED_OF_LIGHT / DEFAULT_CARRIER_HZ

# -94 dBm
DEFAULT_NOISE_POWER_W = 10 ** (-94 / 10) * 1e-3
DEFAULT_P_MAX_W = 0.2
DEFAULT_AREA_SIDE_M = 1000.0
DEFAULT_HEIGHT_GAP_M = 10.0
DEFAULT_ANTENNA_SPACING = 1 / 3

# beta[dB] = intercept - slope * log10(d / 1 m) + F, F ~ N(0, std^2)
PATHLOSS_INTERCEPT_DB = -30.5
PATHLOSS_SLOPE_DB = 36.7
SHADOWING_STD_DB = 4.0

# Observation normalization: clip((beta_dB + offset) / scale, -bound, bound)
OBSERVATION_OFFSET_DB = 90.0
OBSERVATION_SCALE_DB = 30.0
OBSERVATION_CLIP = 3.0

# Lower limit of the defuzzified policy output
FUZZY_ACTION_FLOOR = 0.05

PSI_REGULARIZATION = 1e-12

METHODS = ("fl_ctce", "fl_ctde", "maddpg", "full_power", "random_power")
LEARNED_METHODS = ("fl_ctce", "fl_ctde", "maddpg")
FUZZY_METHODS = ("fl_ctce", "fl_ctde")
COMBINERS = ("mr", "lmmse")
REWARDS = ("sum_se", "per_ue_se")

CHECKPOINT_FORMAT_VERSION = 1

LOG_FILENAME = "log.csv"
TIMINGS_FILENAME = "timings.csv"
EVALUATION_FILENAME = "evaluation.csv"
SUMMARY_FILENAME = "summary.json"
CHECKPOINT_FILENAME = "checkpoint.npz"
