"""
Constants
"""

TOOL_NAME = "vcs-engine"
TOOL_VERSION = "1.0.0"


# Group families understood by the constructors and the DSL
class Families:
    CYCLIC = "Cyclic"
    ELEMENTARY_ABELIAN = "ElementaryAbelian"
    HOMOCYCLIC = "Homocyclic"
    DIHEDRAL = "Dihedral"
    QUATERNION8 = "Quaternion8"
    EXTRASPECIAL = "Extraspecial"
    SL23 = "SL23"
    SZ8_BOREL = "Sz8Borel"
    ALT5 = "Alt5"
    SYMMETRIC = "Symmetric"
    ALTERNATING = "Alternating"


# Outcome of the single-vcs classifier
class CaseLabels:
    NOT_SINGLE_VCS = "NotSingleVcs"
    DIRECT_FACTOR = "DirectFactor"
    FROBENIUS_QUOTIENT = "FrobeniusQuotient"
    P_GROUP = "PGroup"
    NORMAL_P_COMPLEMENT = "NormalPComplement"
    TWO_PRIME_FROBENIUS = "TwoPrimeFrobenius"
    UNCLASSIFIED = "Unclassified"


# Groups whose nontrivial elements all have prime order
class PrimeOrderKinds:
    NOT_ALL_PRIME_ORDER = "NotAllPrimeOrder"
    P_GROUP_EXPONENT_P = "PGroupExponentP"
    FROBENIUS_PQ = "FrobeniusPQ"
    ALT5 = "Alt5"


# Names of the invariant checks
class CheckNames:
    VANISHING_SIZES_ARE_CLASS_SIZES = "vanishing_sizes_are_class_sizes"
    VANISHING_FREE_IFF_ABELIAN = "vanishing_free_iff_abelian"
    NORMAL_HALL_WITH_ABELIAN_COMPLEMENT = "normal_hall_with_abelian_complement"
    VANISHING_HALL_ELEMENTS_IN_FIXED_POINTS = "vanishing_hall_elements_in_fixed_points"
    CENTRAL_HALL_INTERSECTION = "central_hall_intersection"
    CENTRAL_COMPLEMENT_PART = "central_complement_part"
    FIXED_POINT_ZEROS_LIFT = "fixed_point_zeros_lift"
    CONSTANT_SIZE_ABELIAN_COMPLEMENT = "constant_size_abelian_complement"
    NONLINEAR_VANISH_OUTSIDE_FIXED_POINTS = "nonlinear_vanish_outside_fixed_points"
    NONVANISHING_IN_FITTING_CENTER = "nonvanishing_in_fitting_center"
    SQUARE_FREE_SIZES_SUPERSOLVABLE = "square_free_sizes_supersolvable"
    COMPLEMENT_NONCENTRAL_VANISH = "complement_noncentral_vanish"
    FITTING_QUOTIENT_DICHOTOMY = "fitting_quotient_dichotomy"
    SQUARE_FREE_FULL_PRIME_SET = "square_free_full_prime_set"
    NONVANISHING_TWO_POWER_MOD_FITTING = "nonvanishing_two_power_mod_fitting"
    HALL_SUBGROUP_NILPOTENT = "hall_subgroup_nilpotent"
    MINIMAL_NORMAL_SUBGROUPS_ABELIAN = "minimal_normal_subgroups_abelian"
    QUOTIENT_VANISHING_LIFT = "quotient_vanishing_lift"
    FROBENIUS_QUOTIENT_SPLITTING = "frobenius_quotient_splitting"
    SAME_SIZE_CONDITIONS = "same_size_conditions"
    CHARACTER_TABLE_ORTHOGONALITY = "character_table_orthogonality"
    CHARACTERIZATION_FORWARD = "characterization_forward"
    CHARACTERIZATION_BACKWARD = "characterization_backward"


# Catalog record states
class RecordStatus:
    OK = "ok"
    SKIPPED = "skipped"
    ERROR = "error"


# Directory
class Directories:
    LOGS = "logs"
    SESSIONS = "sessions"
    LOCALE = "locale"


# Keys of the flags file
class FlagKeys:
    ENUMERATION_BOUND = "VCS_ENUMERATION_BOUND"
    SEED = "VCS_SEED"
    MAX_WORKERS = "VCS_MAX_WORKERS"
    ORDER_CAP = "VCS_ORDER_CAP"
    HALL_ROUNDS = "VCS_HALL_ROUNDS"
    HALL_MAX_GENERATORS = "VCS_HALL_MAX_GENERATORS"
    LOG_DIR = "VCS_LOG_DIR"
    LOG_LEVEL = "VCS_LOG_LEVEL"
    TIMEZONE = "VCS_TIMEZONE"
    LANGUAGE = "VCS_LANGUAGE"
    SESSION_DIR = "VCS_SESSION_DIR"

    # the only key also honoured from the process environment
    ENVIRONMENT_OVERRIDES = [ENUMERATION_BOUND]


# Language Support
class Languages:
    EN = "en"
    ZH = "zh"
    JA = "ja"

    SUPPORTED = [EN, ZH, JA]
    DEFAULT = EN


# Process exit codes
class ExitCodes:
    OK = 0
    ERROR = 1
    CHECK_FAILED = 2


# File Extensions
class FileExtensions:
    JSON = ".json"
    LOG = ".log"
