"""Exception types shared across the package.

Every failure surfaced to the service or the CLI maps onto exactly one of
these, which in turn map onto the API machine codes and CLI exit codes.
"""

from __future__ import annotations


class DronePlanError(Exception):
    """Base class for all domain failures."""


class DomainError(DronePlanError):
    """A value is outside its permitted domain (coordinate range, altitude
    bound, malformed task instruction, degenerate projection)."""


class CapacityError(DronePlanError):
    """A configured size limit was reached (waypoints per route)."""


class NotFoundError(DronePlanError):
    """Referenced route or resource does not exist."""


class ValidationFailed(DronePlanError):
    """A route failed validation; carries the violation list."""

    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(v.message for v in self.violations)
        super().__init__(f"route validation failed: {lines}")


class SchemaError(DronePlanError):
    """A stored or imported document does not match the expected tree
    schema. ``location`` names the offending key or text position."""

    def __init__(self, message: str, location: str | None = None):
        self.location = location
        super().__init__(message if location is None else f"{location}: {message}")


class PairingError(DronePlanError):
    """Planned and flown point lists cannot be paired by order."""


class ScheduleError(DronePlanError):
    """Camera-task program cannot be compiled (for example, unpaired video
    stop) or a mission has nothing to fly."""
