class InfiniteFamilyError(ValueError):
    """Raised when a CoreSpec has gcd > 1, so its family of cores is infinite."""

    def __init__(self, moduli, gcd):
        self.moduli = tuple(moduli)
        self.gcd = gcd
        super().__init__(f"infinite family: gcd{self.moduli} = {gcd}")


class FiniteFamilyError(ValueError):
    """Raised when an infinite witness family is requested for a gcd-1 CoreSpec."""

    def __init__(self, moduli):
        self.moduli = tuple(moduli)
        super().__init__(f"no infinite family: gcd{self.moduli} = 1")


class TranscriptionError(AssertionError):
    """An identity that must hold exactly did not (inexact division, count mismatch)."""
