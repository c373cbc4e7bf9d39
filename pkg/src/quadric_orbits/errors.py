class CutoffExceeded(ValueError):
    """A brute-force routine was asked for a size above its configured cutoff."""

    def __init__(self, what: str, size: int, cutoff: int):
        super().__init__(f"{what}: size {size} exceeds cutoff {cutoff}")
        self.size = size
        self.cutoff = cutoff


class InvariantFailure(RuntimeError):
    """Two formulas that must agree did not."""
