from .campaign import expand_instances, read_rows, run_campaign, write_rows
from .instances import run_instance, spec_for

__all__ = [
    "expand_instances",
    "read_rows",
    "run_campaign",
    "run_instance",
    "spec_for",
    "write_rows",
]
