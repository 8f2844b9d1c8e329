import logging
import os

import jsonschema

from reports.ireport import IReport
from reports.payloads import character_table_payload, classes_payload
from utils import FileHandlerFactory
from utils.errors import ReportError

logger = logging.getLogger(__name__)

SCHEMA_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data", "schemas")
CERTIFICATE_SCHEMA = "certificate"
SPECTRUM_SCHEMA = "spectrum"


def load_schema(schema_name):
    """Loads data/schemas/<schema_name>.schema.json."""
    path = os.path.join(SCHEMA_DIR, f"{schema_name}.schema.json")
    schema = FileHandlerFactory.get_handler(path).load_data()
    if not schema:
        raise ReportError(f"Schema {schema_name!r} not found at {path}.")
    return schema


def validate_payload(payload, schema_name):
    """Raises ReportError when `payload` does not match the named schema."""
    try:
        jsonschema.validate(instance=payload, schema=load_schema(schema_name))
    except jsonschema.ValidationError as e:
        location = "/".join(str(part) for part in e.absolute_path) or "<root>"
        raise ReportError(f"{schema_name} payload invalid at {location}: {e.message}") from e


class ReportJson(IReport):
    """Writes artifacts as JSON through the JSON file handler."""

    def __init__(self, file_path):
        self.file_path = file_path
        self.file_handler = FileHandlerFactory.get_handler(file_path)

    def save_certificate(self, certificate):
        payload = certificate.to_dict()
        validate_payload(payload, CERTIFICATE_SCHEMA)
        self.file_handler.save_data(payload)

    def save_spectrum(self, report):
        payload = report.to_dict()
        validate_payload(payload, SPECTRUM_SCHEMA)
        self.file_handler.save_data(payload)

    def save_character_table(self, shapes, classes, rows, labels=None):
        self.file_handler.save_data(character_table_payload(shapes, classes, rows, labels))

    def save_classes(self, n, t, classes):
        self.file_handler.save_data(classes_payload(n, t, classes))
