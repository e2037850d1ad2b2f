class Overflow(Exception):
    """A search hit its configured size cap before finishing."""

    def __init__(self, cap, what="elements"):
        super().__init__(f"more than {cap} {what}; raise the cap to continue")
        self.cap = cap
        self.what = what
