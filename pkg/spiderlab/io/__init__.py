from ._file import file_spider
from ._report import (
    census_report,
    control_report,
    cspace_report,
    dumps,
    error_report,
    to_builtin,
    trajectory_rows,
    workspace_report,
    write_csv,
    write_json,
    write_text,
)
from ._svg import FieldScene, render_svg

__all__ = [
    "FieldScene",
    "census_report",
    "control_report",
    "cspace_report",
    "dumps",
    "error_report",
    "file_spider",
    "render_svg",
    "to_builtin",
    "trajectory_rows",
    "workspace_report",
    "write_csv",
    "write_json",
    "write_text",
]
