# Vocabulary and standard format entry

# Generic
SCHEMA_VERSION = "1.0"
SCHEMA = "schema_version"
VERSION = "version"
COMMAND = "command"
NAME = "name"
ARGS = "args"
RESULTS = "results"
WARNINGS = "warnings"
DECIMAL_SUFFIX = "_decimal"

# error object
ERROR = "CHROMASTAT_ERROR"
ERROR_KIND = "CHROMASTAT_ERROR_KIND"
EXIT_CODE = "exit_code"
LINE = "line"
LIMIT = "limit"
FAILURES = "failures"

# formats
FORMAT_JSON = "json"
FORMAT_CSV = "csv"
FORMAT_TEXT = "text"
FORMAT_DIMACS = "dimacs"
FORMAT_EDGELIST = "edgelist"

# graph
GRAPH = "graph"
N = "n"
M = "m"
FAMILY = "family"
CONNECTED = "connected"
COMPONENTS = "components"
MIN_DEGREE = "min_degree"
MAX_DEGREE = "max_degree"
REGULAR = "regular"
SOURCE = "source"

# summary
CHI = "chi"
OMEGA_MIN = "omega_min"
OMEGA_MAX = "omega_max"
MEAN_CHI = "mean_chi"
VAR_CHI = "var_chi"
MEAN_CHI_PLUS = "mean_chi_plus"
VAR_CHI_PLUS = "var_chi_plus"
PMF_CHI = "pmf_chi"
PMF_CHI_PLUS = "pmf_chi_plus"
CLASSIFICATION_CHI = "classification_chi"
CLASSIFICATION_CHI_PLUS = "classification_chi_plus"
TWO_POINT_CHI = "two_point_chi"
TWO_POINT_CHI_PLUS = "two_point_chi_plus"
VARIANCE_AMBIGUOUS_CHI = "variance_ambiguous_chi"
VARIANCE_AMBIGUOUS_CHI_PLUS = "variance_ambiguous_chi_plus"
OPTIMAL_PARTITIONS_CHI = "optimal_partition_count_chi"
OPTIMAL_PARTITIONS_CHI_PLUS = "optimal_partition_count_chi_plus"
WITNESS_CHI = "witness_chi"
WITNESS_CHI_PLUS = "witness_chi_plus"
COLOR = "color"
VERTICES = "vertices"

# families
COMPLETE = "complete"
PATH = "path"
CYCLE = "cycle"
WHEEL = "wheel"
COMPLETE_BIPARTITE = "complete_bipartite"
COMPLETE_MULTIPARTITE = "complete_multipartite"
STAR = "star"

# closed form variants
DERIVED = "derived"
AS_STATED = "as_stated"
AS_PROVED = "as_proved"

# report
PARAMETERS = "parameters"
STATISTIC = "statistic"
ENGINE = "engine"
STATED = "stated"
PROVED = "proved"
DERIVED_MATCH = "derived_matches_engine"
STATED_MATCH = "stated_matches_engine"
PROVED_MATCH = "proved_matches_engine"
FLAGS = "flags"
NOTES = "notes"
STATUS = "status"
STATUS_OK = "ok"
STATUS_SKIPPED = "skipped"
VARIANCE_ORDERING = "variance_ordering"
MEAN_ORDERING = "mean_ordering"
ORDERING = "ordering"
COUNTEREXAMPLE = "counterexample"
LABELINGS_CHECKED = "labelings_checked"
HOLDS = "holds"
VIOLATED = "violated"
ROWS = "rows"
SUMMARY = "summary"

# report flags
FLAG_NEGATIVE_VARIANCE = "negative_variance"
FLAG_EXCEEDS_SUPPORT_BOUND = "exceeds_support_bound"
FLAG_STATEMENT_PROOF_CONFLICT = "statement_proof_conflict"
FLAG_STATED_MISMATCH = "stated_mismatch"
FLAG_DERIVED_MISMATCH = "derived_mismatch"

# verification
CASES = "cases"
CASE = "case"
KIND = "kind"
PASSED = "passed"
FAILED = "failed"
DETAILS = "details"
MAX_N = "max_n"
TRIALS = "trials"
SEED = "seed"
ORACLE = "oracle"
EDGE_PROBABILITY = "edge_probability"
UNIFORM_CLAIM_CANDIDATES = "uniform_claim_candidates"
KIND_FAMILY = "family"
KIND_RANDOM = "random"
