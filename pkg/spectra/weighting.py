from dataclasses import dataclass
from fractions import Fraction

from combinatorics.characters import class_size
from combinatorics.derangements import is_t_derangement_type
from utils.errors import InvalidArgumentError

ODD = "odd"
EVEN = "even"
CUSTOM = "custom"
PARITY_CASES = (ODD, EVEN, CUSTOM)


@dataclass(frozen=True)
class Weighting:
    """
    Conjugacy classes of Sym(n) with exact weights.

    omegas[i] is the row-sum contribution of classes[i], that is the
    per-element weight times the class size. params holds (t, s) when the
    weights come from the two-parameter families.
    """

    n: int
    classes: tuple
    omegas: tuple
    params: tuple = None
    parity_case: str = CUSTOM

    def __post_init__(self):
        classes = tuple(self.classes)
        omegas = tuple(Fraction(omega) for omega in self.omegas)
        object.__setattr__(self, "classes", classes)
        object.__setattr__(self, "omegas", omegas)
        if self.params is not None:
            object.__setattr__(self, "params", tuple(Fraction(value) for value in self.params))

        if self.parity_case not in PARITY_CASES:
            raise InvalidArgumentError(f"parity_case must be one of {PARITY_CASES}, got {self.parity_case!r}.")
        if len(classes) != len(omegas):
            raise InvalidArgumentError(f"{len(classes)} classes but {len(omegas)} weights.")
        if len(set(classes)) != len(classes):
            raise InvalidArgumentError("Weighted classes must be pairwise distinct.")
        for rho in classes:
            if rho.n != self.n:
                raise InvalidArgumentError(f"Class {rho} does not belong to Sym({self.n}).")
            if all(part == 1 for part in rho.parts):
                raise InvalidArgumentError("The identity class cannot carry weight; the matrix has a zero diagonal.")
            if self.parity_case != CUSTOM and not is_t_derangement_type(rho, 3):
                raise InvalidArgumentError(f"Class {rho} fixes a 3-subset, so it is not a 3-derangement class.")

    @classmethod
    def unit(cls, n, classes, parity_case=CUSTOM):
        """Every element of every class weighted 1, so omegas are the class sizes."""
        classes = tuple(classes)
        return cls(n, classes, tuple(Fraction(class_size(rho)) for rho in classes), parity_case=parity_case)

    def element_weight(self, index):
        """Weight of a single permutation in classes[index]."""
        return self.omegas[index] / class_size(self.classes[index])

    def row_sum(self):
        return sum(self.omegas, Fraction(0))

    def weight_of(self, rho):
        """Per-element weight of class `rho`, or 0 when it is not weighted."""
        for index, weighted in enumerate(self.classes):
            if weighted == rho:
                return self.element_weight(index)
        return Fraction(0)
