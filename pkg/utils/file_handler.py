import csv
import json
import logging
import os
from abc import ABC, abstractmethod

from utils.errors import ReportError

logger = logging.getLogger(__name__)


class BaseFileHandler(ABC):
    """Abstract base class for file handling."""

    def __init__(self, file_path):
        self._file_path = file_path
        self._file_extension = os.path.splitext(file_path)[1].lower()

    @property
    def file_path(self):
        return self._file_path

    @abstractmethod
    def load_data(self):
        """Abstract method for loading data."""
        pass

    @abstractmethod
    def save_data(self, data):
        """Abstract method for saving data."""
        pass

    def _file_exists(self):
        """Check if file exists."""
        return os.path.exists(self._file_path)

    def _ensure_parent_dir(self):
        """Creates the parent directory of the target file if it is missing."""
        parent = os.path.dirname(self._file_path)
        if parent:
            os.makedirs(parent, exist_ok=True)


class JSONFileHandler(BaseFileHandler):
    """Handles JSON file operations."""

    def load_data(self):
        """Loads JSON data. Returns an empty dictionary when the file does not exist."""
        if not self._file_exists():
            return {}

        try:
            with open(self._file_path, "r", encoding="utf-8") as handle:
                return json.load(handle)
        except (json.JSONDecodeError, OSError) as e:
            raise ReportError(f"Unable to read JSON file {self._file_path}. {e}") from e

    def save_data(self, data):
        """Saves data as JSON with a stable layout."""
        self._ensure_parent_dir()
        try:
            with open(self._file_path, "w", encoding="utf-8") as handle:
                handle.write(dump_json(data))
        except OSError as e:
            raise ReportError(f"Unable to write JSON file {self._file_path}. {e}") from e
        logger.info("Wrote JSON file %s", self._file_path)


class CSVFileHandler(BaseFileHandler):
    """Handles CSV file operations."""

    def load_data(self):
        """Loads CSV data. Returns a list of dictionaries."""
        if not self._file_exists():
            return []

        try:
            with open(self._file_path, "r", encoding="utf-8") as handle:
                reader = csv.DictReader(handle)
                return list(reader) if reader.fieldnames else []
        except OSError as e:
            raise ReportError(f"Unable to read CSV file {self._file_path}. {e}") from e

    def save_data(self, data):
        """Saves a list of row dictionaries; the first row fixes the column order."""
        if not data:
            return  # Avoid saving empty data
        self._ensure_parent_dir()
        try:
            with open(self._file_path, "w", encoding="utf-8", newline="") as handle:
                writer = csv.DictWriter(handle, fieldnames=list(data[0].keys()))
                writer.writeheader()
                writer.writerows(data)
        except OSError as e:
            raise ReportError(f"Unable to write CSV file {self._file_path}. {e}") from e
        logger.info("Wrote CSV file %s (%d rows)", self._file_path, len(data))


def dump_json(data):
    """Serialises `data` the same way every time: indent 4, trailing newline."""
    return json.dumps(data, indent=4, ensure_ascii=False) + "\n"


class FileHandlerFactory:
    """Factory class to return the correct file handler based on extension."""

    _handlers = {
        ".json": JSONFileHandler,
        ".csv": CSVFileHandler,
    }

    @staticmethod
    def get_handler(file_path):
        """Public factory method to create a handler based on the file type."""

        ext = os.path.splitext(file_path)[1].lower()
        if ext in FileHandlerFactory._handlers:
            return FileHandlerFactory._handlers[ext](file_path)
        raise ReportError(
            f"Unsupported file type: {ext}. Supported types: {', '.join(FileHandlerFactory._handlers.keys())}"
        )
