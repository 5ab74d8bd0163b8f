STRUCTURE_PACKAGE = "fdhull.structures"
CONFIG_DIRECTORY = "config"
DEFAULT_IMPLEMENTATION = "fdh:32"
DEFAULT_VERIFY_IMPLEMENTATIONS = ("fdh:32", "semistatic", "oracle")
DEFAULT_QUANTIZER = 10**6
TIME_LIMIT_ENV = "FDH_TIME_LIMIT_SECS"
BATCH_SIZE = 64
CSV_COLUMNS = ["op_index", "kind", "ns", "answer"]
KIND_NAMES = {"i": "insert", "d": "delete", "q": "query", "e": "extreme"}
QUERY_ANSWER_NAMES = {1: "query_yes", 0: "query_no"}
