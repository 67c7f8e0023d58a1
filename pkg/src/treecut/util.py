"""Small shared helpers."""


class OpsCounter:
    """Additive counter for elementary touches, used by the runtime tests.

    Counts are coarse: loops add their iteration count once, cluster scans
    add the number of elements read. The absolute value is meaningless; only
    proportionality to input size matters.
    """

    __slots__ = ("total",)

    def __init__(self):
        self.total = 0

    def add(self, k):
        self.total += k
