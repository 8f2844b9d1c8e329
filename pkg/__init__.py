"""
Coclique-Certificates: exact spectral certificates for 3-setwise intersecting
families of permutations.
"""

__version__ = "1.0.0"
__author__ = "Jon-Mark"

# Expose key components
from .certification.certificate import certify
from .spectra.spectrum import full_spectrum
from .reports import get_report_writer
from .utils.text_colour_helper import TextColors
