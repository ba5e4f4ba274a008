class CapExceeded(RuntimeError):
    """Raised when an enumeration would exceed its configured size cap."""

    def __init__(self, what: str, cap: int):
        super().__init__(f"{what} exceeds the cap of {cap}")
        self.what = what
        self.cap = cap
