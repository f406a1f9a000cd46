"""Instance grids, property suites, reports and the command line."""

from .checks import CheckResult, Checker
from .cli import main
from .config import SUITES, TYPES, ConfigError, SuiteConfig, parse_config
from .instances import generate_instance, instance_seed
from .report import REPORT_SCHEMA, replay, report_json, run_suite, strip_wall_time
from .suites import SUITES as SUITE_FUNCTIONS
