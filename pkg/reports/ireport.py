from abc import ABC, abstractmethod


class IReport(ABC):
    """Destination for the artifacts the CLI produces."""

    @abstractmethod
    def save_certificate(self, certificate):
        pass

    @abstractmethod
    def save_spectrum(self, report):
        pass

    @abstractmethod
    def save_character_table(self, shapes, classes, rows, labels=None):
        pass

    @abstractmethod
    def save_classes(self, n, t, classes):
        pass
