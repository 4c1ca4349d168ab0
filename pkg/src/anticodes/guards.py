"""Resource guards for the exhaustive enumerations used across the library.

Everything in this package is exact and enumeration-based, so the honest
failure mode for oversized inputs is to refuse, not to approximate.  A
:class:`GuardConfig` travels into every potentially explosive operation;
exceeding a bound raises :class:`GuardExceeded` naming the violated guard.
"""

from __future__ import annotations

from dataclasses import dataclass


class GuardExceeded(RuntimeError):
    """An enumeration bound was exceeded; the message names the guard."""


@dataclass(frozen=True)
class GuardConfig:
    """Bounds for enumerations and codeword scans.

    Defaults are sized so that the full verification suite completes on a
    desktop machine.
    """

    max_subspaces: int = 5_000_000
    max_codewords: int = 2_000_000
    budget_secs: float | None = None

    def __post_init__(self) -> None:
        if self.max_subspaces <= 0 or self.max_codewords <= 0:
            raise ValueError("guard limits must be positive")
        if self.budget_secs is not None and self.budget_secs <= 0:
            raise ValueError("budget_secs must be positive when set")

    def check_subspaces(self, count: int, context: str) -> None:
        if count > self.max_subspaces:
            raise GuardExceeded(
                f"guard 'max_subspaces' exceeded in {context}: "
                f"{count} > {self.max_subspaces}"
            )

    def check_codewords(self, count: int, context: str) -> None:
        if count > self.max_codewords:
            raise GuardExceeded(
                f"guard 'max_codewords' exceeded in {context}: "
                f"{count} > {self.max_codewords}"
            )


DEFAULT_GUARD = GuardConfig()
