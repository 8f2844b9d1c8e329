from reports.ireport import IReport
from reports.payloads import certificate_row, character_table_rows, classes_rows, spectrum_rows
from utils import FileHandlerFactory


class ReportCsv(IReport):
    """Writes artifacts as CSV tables, one row per shape, class or certificate."""

    def __init__(self, file_path):
        self.file_path = file_path
        self.file_handler = FileHandlerFactory.get_handler(file_path)

    def save_certificate(self, certificate):
        self.file_handler.save_data([certificate_row(certificate)])

    def save_spectrum(self, report):
        self.file_handler.save_data(spectrum_rows(report))

    def save_character_table(self, shapes, classes, rows, labels=None):
        self.file_handler.save_data(character_table_rows(shapes, classes, rows, labels))

    def save_classes(self, n, t, classes):
        self.file_handler.save_data(classes_rows(classes))
