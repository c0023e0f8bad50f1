"""
Prometheus metrics for quotient, rewriting and cohomology computations.
"""
from prometheus_client import Counter, Histogram, start_http_server

# Rewriting metrics
COMPLETION_RUNS = Counter(
    'schemoid_completion_runs_total',
    'Total number of completion runs by outcome',
    ['outcome']
)

RULES_ADDED = Counter(
    'schemoid_rules_added_total',
    'Total number of rewrite rules added during completion'
)

CRITICAL_PAIRS = Counter(
    'schemoid_critical_pairs_total',
    'Total number of critical pairs examined'
)

# Homological algebra metrics
SNF_CALLS = Counter(
    'schemoid_snf_calls_total',
    'Total number of Smith normal form computations'
)

# Performance metrics
QUOTIENT_DURATION = Histogram(
    'schemoid_quotient_duration_seconds',
    'Time spent computing quotient categories',
    buckets=[0.01, 0.1, 0.5, 1.0, 5.0, 30.0]
)

# Acceptance harness metrics
GOLDEN_ROWS = Counter(
    'schemoid_golden_rows_total',
    'Golden acceptance rows by outcome',
    ['outcome']
)


def start_metrics_server(port: int = 8000):
    """Start the metrics HTTP server."""
    start_http_server(port)
