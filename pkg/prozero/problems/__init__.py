from .schema import ProblemFile, canonical_sha256, TASK_FIELDS, SECTIONS
from .subjects import SubjectResolver, build_tower
from .tasks import TASKS, SUBJECTS, TaskContext, build_resolver
from .runner import (run_problem, run_task, replay_report, write_report,
                     dumps_report, load_report, check_compatible, exit_code,
                     timing_path, STATUS_OK, STATUS_ERROR, CAP_EXCEEDED)
