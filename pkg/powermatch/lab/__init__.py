from .catalog import CatalogEntry, Tag, catalog_entry, default_catalog, structural_tags
from .checks import CHECKS, CheckId, CheckResult, Verdict, run_check
from .profile import GroupProfile
from .report import Report, Summary, dump_report, dumps_report, format_table
from .suite import run_suite
