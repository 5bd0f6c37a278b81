"""Pass/fail result carrying an optional minimal witness."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Verdict:
    """Outcome of a property check.

    The witness is the lexicographically least violating tuple of element
    indices; it is present exactly when the check fails.
    """

    holds: bool
    witness: tuple[int, ...] | None = None
    note: str = ""

    def __post_init__(self):
        if self.holds and self.witness is not None:
            raise ValueError("a passing verdict must not carry a witness")
        if not self.holds and self.witness is None:
            raise ValueError("a failing verdict must carry a witness")

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "witness": list(self.witness) if self.witness is not None else None,
            "note": self.note,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Verdict":
        witness = d.get("witness")
        return cls(d["holds"], tuple(witness) if witness is not None else None, d.get("note", ""))
