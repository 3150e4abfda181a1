"""Sentinels and limits shared by the graph and metric layers."""

# Distance to a vertex that cannot be reached. Never a large finite number,
# so equality tests on distance vectors stay exact.
UNREACHABLE = -1

# Exact subset search: default vertex cap
DEFAULT_SIZE_CAP = 22

# Candidate landmark sets are uint64 bitmasks
MAX_BITSET_VERTICES = 62
