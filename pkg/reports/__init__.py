import os

from .ireport import IReport
from .report_json import ReportJson, validate_payload
from .report_csv import ReportCsv
from utils.errors import ReportError


def get_report_writer(file_path):
    """Picks the report writer from the file extension."""
    file_extension = os.path.splitext(file_path)[-1].lower()

    if file_extension == ".json":
        return ReportJson(file_path)
    elif file_extension == ".csv":
        return ReportCsv(file_path)
    else:
        raise ReportError(f"Unsupported report type {file_extension or '(none)'}; use a .json or .csv file.")
