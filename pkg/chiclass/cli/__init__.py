"""The chiclass command line tool: JSON job files (jobs), their
execution (run) and the verification suites behind "chiclass verify"
(checks), reported as text tables or JSON (report).
"""

from .config import max_dim, DEFAULT_ORDER
from .jobs import JobSpec, JobSpecError, job_from_dict, load_job
from .report import Report
from .run import run
