import re
from fractions import Fraction

from utils.errors import InvalidArgumentError

# One entry of a part list: an integer, "n", or "n-k" / "n+k", optionally raised to a multiplicity
_ENTRY = re.compile(r"^(?P<base>n\s*[-+]\s*\d+|n|\d+)(?:\s*\^\s*(?P<mult>\d+))?$")
_RATIONAL = re.compile(r"^[-+]?\d+(?:/\d+)?$")


class InputParser:
    """Parses the textual forms of partitions, cycle types and rationals used on the command line."""

    @staticmethod
    def _evaluate_base(base, n):
        """Evaluates an entry base such as '17', 'n' or 'n-3'."""
        base = base.replace(" ", "")
        if not base.startswith("n"):
            return int(base)
        if n is None:
            raise InvalidArgumentError(f"'{base}' refers to n, but no n was given.")
        if base == "n":
            return n
        return n + int(base[1:])

    @classmethod
    def parse_parts(cls, text, n=None, brackets="[("):
        """
        Parses a bracketed comma list such as '[n-3,1^3]' or '(14,2,2,2)' into a tuple of integers.

        Exponents expand to repeated entries. Entries may use n when n is given.
        """
        if text is None:
            raise InvalidArgumentError("Expected a part list, got nothing.")

        stripped = text.strip()
        closing = {"[": "]", "(": ")"}
        if stripped and stripped[0] in brackets:
            if not stripped.endswith(closing[stripped[0]]):
                raise InvalidArgumentError(f"Unbalanced brackets in '{text}'.")
            stripped = stripped[1:-1]

        if not stripped.strip():
            return ()

        parts = []
        for raw_entry in stripped.split(","):
            entry = raw_entry.strip()
            match = _ENTRY.match(entry)
            if not match:
                raise InvalidArgumentError(f"Cannot read '{entry}' in '{text}'.")
            value = cls._evaluate_base(match.group("base"), n)
            multiplicity = int(match.group("mult")) if match.group("mult") else 1
            if value <= 0:
                raise InvalidArgumentError(f"Entry '{entry}' in '{text}' is not a positive integer.")
            parts.extend([value] * multiplicity)

        if n is not None and sum(parts) != n:
            raise InvalidArgumentError(f"'{text}' sums to {sum(parts)}, expected {n}.")
        return tuple(parts)

    @classmethod
    def parse_partition_parts(cls, text, n=None):
        """Parses a partition; the parts must already be weakly decreasing."""
        parts = cls.parse_parts(text, n)
        if any(later > earlier for earlier, later in zip(parts, parts[1:])):
            raise InvalidArgumentError(f"Partition '{text}' is not weakly decreasing.")
        return parts

    @staticmethod
    def parse_rational(text):
        """Parses 'p/q' or an integer into a Fraction. Decimals are refused."""
        if text is None or not _RATIONAL.match(text.strip()):
            raise InvalidArgumentError(f"'{text}' is not a rational of the form p/q.")
        try:
            return Fraction(text.strip())
        except ZeroDivisionError:
            raise InvalidArgumentError(f"'{text}' has a zero denominator.") from None

    @classmethod
    def parse_point(cls, text):
        """Parses a 't,s' pair of rationals."""
        pieces = [piece for piece in (text or "").split(",")]
        if len(pieces) != 2:
            raise InvalidArgumentError(f"Expected a point 't,s', got '{text}'.")
        return cls.parse_rational(pieces[0]), cls.parse_rational(pieces[1])

    @staticmethod
    def format_rational(value):
        """Writes a Fraction as 'p/q', or 'p' when it is an integer."""
        value = Fraction(value)
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
