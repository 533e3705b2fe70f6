"""
Custom Exception Classes.

Provides a hierarchy of domain-specific exceptions that the CLI converts to
a JSON diagnostic on standard error and a process exit code:

- 1: invalid input (validation, missing files, resource limits)
- 2: numerical failure (non-convergence, invalid states, bad brackets)
"""

from typing import Any

EXIT_VALIDATION = 1
EXIT_NUMERICAL = 2


class AppException(Exception):
    """
    Base exception for all application-specific errors.

    All custom exceptions should inherit from this class.
    The CLI handler converts these to diagnostics and exit codes.
    """

    def __init__(
        self,
        message: str,
        error_code: str = "APP_ERROR",
        exit_code: int = EXIT_VALIDATION,
        details: dict[str, Any] | None = None,
    ) -> None:
        self.message = message
        self.error_code = error_code
        self.exit_code = exit_code
        self.details = details or {}
        super().__init__(self.message)

    def to_dict(self) -> dict[str, Any]:
        """Convert exception to dictionary for the JSON diagnostic."""
        return {
            "error": {
                "code": self.error_code,
                "message": self.message,
                "details": self.details,
            }
        }

# ============================================
# Input Errors (exit 1)
# ============================================

class ValidationError(AppException):
    """Input data failed validation."""

    def __init__(
        self,
        message: str = "Validation failed",
        error_code: str = "VALIDATION_ERROR",
        errors: list[dict[str, Any]] | None = None,
        details: dict[str, Any] | None = None,
    ) -> None:
        details = details or {}
        if errors:
            details["validation_errors"] = errors
        super().__init__(
            message=message,
            error_code=error_code,
            exit_code=EXIT_VALIDATION,
            details=details,
        )

    @classmethod
    def from_pydantic(cls, exc: Any, message: str = "Validation failed") -> "ValidationError":
        """Wrap a pydantic ``ValidationError``, keeping the offending field locations."""
        errors = [
            {
                "field": ".".join(str(part) for part in err.get("loc", ())),
                "message": err.get("msg", ""),
            }
            for err in exc.errors()
        ]
        fields = ", ".join(e["field"] or "<root>" for e in errors)
        return cls(message=f"{message}: {fields}", errors=errors)


class UsageError(ValidationError):
    """Unknown command-line flag or subcommand."""

    def __init__(self, message: str = "Invalid usage") -> None:
        super().__init__(message=message, error_code="USAGE_ERROR")


class NotFoundError(AppException):
    """Requested resource does not exist."""

    def __init__(
        self,
        message: str = "Resource not found",
        error_code: str = "NOT_FOUND",
        resource_type: str | None = None,
        resource_id: str | int | None = None,
        details: dict[str, Any] | None = None,
    ) -> None:
        details = details or {}
        if resource_type:
            details["resource_type"] = resource_type
        if resource_id:
            details["resource_id"] = resource_id
        super().__init__(
            message=message,
            error_code=error_code,
            exit_code=EXIT_VALIDATION,
            details=details,
        )


class PresetNotFoundError(NotFoundError):
    """Unknown preset name."""

    def __init__(self, name: str, valid_names: list[str]) -> None:
        super().__init__(
            message=f"Unknown preset '{name}'. Valid presets: {', '.join(valid_names)}",
            error_code="PRESET_NOT_FOUND",
            resource_type="preset",
            resource_id=name,
            details={"valid_names": valid_names},
        )


class ConfigurationError(AppException):
    """Configuration file missing or malformed."""

    def __init__(
        self,
        message: str = "Configuration error",
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(
            message=message,
            error_code="CONFIGURATION_ERROR",
            exit_code=EXIT_VALIDATION,
            details=details,
        )


class ResourceLimitError(AppException):
    """Problem size exceeds the configured cap."""

    def __init__(self, n: int, max_sites: int) -> None:
        super().__init__(
            message=f"Ring of {n} sites exceeds the configured cap of {max_sites} (2^n dense matrices)",
            error_code="RESOURCE_LIMIT",
            exit_code=EXIT_VALIDATION,
            details={"n": n, "max_sites": max_sites},
        )


class ContractError(AppException):
    """Arguments are inconsistent with each other (e.g. dimension mismatch)."""

    def __init__(
        self,
        message: str = "Contract violated",
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(
            message=message,
            error_code="CONTRACT_ERROR",
            exit_code=EXIT_VALIDATION,
            details=details,
        )


class DomainError(AppException):
    """Argument outside the mathematical domain of the operation."""

    def __init__(
        self,
        message: str = "Argument outside domain",
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(
            message=message,
            error_code="DOMAIN_ERROR",
            exit_code=EXIT_VALIDATION,
            details=details,
        )

# ============================================
# Numerical Errors (exit 2)
# ============================================

class NumericalError(AppException):
    """A numerical routine failed or produced an inconsistent result."""

    def __init__(
        self,
        message: str = "Numerical failure",
        error_code: str = "NUMERICAL_ERROR",
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(
            message=message,
            error_code=error_code,
            exit_code=EXIT_NUMERICAL,
            details=details,
        )


class ConvergenceError(NumericalError):
    """Eigensolver did not converge or its residual is out of tolerance."""

    def __init__(self, message: str, residual_norm: float | None = None) -> None:
        details: dict[str, Any] = {}
        if residual_norm is not None:
            details["residual_norm"] = residual_norm
        super().__init__(message=message, error_code="CONVERGENCE_ERROR", details=details)


class InvalidStateError(NumericalError):
    """Density matrix violates positivity (e.g. R has a negative eigenvalue)."""

    def __init__(self, message: str, min_eigenvalue: float) -> None:
        super().__init__(
            message=message,
            error_code="INVALID_STATE",
            details={"min_eigenvalue": min_eigenvalue},
        )


class BracketError(NumericalError):
    """Temperature bracket does not straddle the vanishing point of C."""

    def __init__(
        self,
        t_lo: float,
        t_hi: float,
        c_lo: float,
        c_hi: float,
        epsilon: float,
    ) -> None:
        super().__init__(
            message=(
                f"Invalid bracket [{t_lo}, {t_hi}]: need C(t_lo) > {epsilon} and "
                f"C(t_hi) <= {epsilon}, measured C(t_lo)={c_lo:.6g}, C(t_hi)={c_hi:.6g}"
            ),
            error_code="BRACKET_ERROR",
            details={"t_lo": t_lo, "t_hi": t_hi, "c_lo": c_lo, "c_hi": c_hi, "epsilon": epsilon},
        )


class SweepPointError(NumericalError):
    """A grid point of a sweep failed; carries the offending axis values."""

    def __init__(self, point: dict[str, float], cause: AppException) -> None:
        super().__init__(
            message=f"Sweep failed at {point}: {cause.message}",
            error_code="SWEEP_POINT_ERROR",
            details={"grid_point": point, "cause": cause.to_dict()["error"]},
        )
