from .errors import (
    CertificateError,
    CertificationFailure,
    ConfigurationError,
    InvalidArgumentError,
    OracleRefusal,
    PreconditionViolation,
    ReportError,
)
from .file_handler import FileHandlerFactory, dump_json
from .text_colour_helper import TextColors
from .input_parser import InputParser
from .config import Settings, get_settings
