"""Tests for custom exceptions in core.exceptions."""

from pydantic import BaseModel, Field
from pydantic import ValidationError as PydanticValidationError

from src.xxzring.core.exceptions import (
    EXIT_NUMERICAL,
    EXIT_VALIDATION,
    AppException,
    BracketError,
    ConfigurationError,
    ContractError,
    ConvergenceError,
    DomainError,
    InvalidStateError,
    NotFoundError,
    NumericalError,
    PresetNotFoundError,
    ResourceLimitError,
    SweepPointError,
    UsageError,
    ValidationError,
)


def test_app_exception_to_dict():
    """Test the to_dict method serialization."""
    exc = AppException("Test message", "TEST_CODE", 1, {"key": "value"})
    data = exc.to_dict()
    assert data["error"]["code"] == "TEST_CODE"
    assert data["error"]["message"] == "Test message"
    assert data["error"]["details"]["key"] == "value"
    assert exc.exit_code == 1


def test_input_errors_exit_with_validation_code():
    for exc in (
        ValidationError(),
        UsageError("bad flag"),
        NotFoundError(resource_type="plan", resource_id="missing.json"),
        PresetNotFoundError("fig9", ["fig1a", "fig1b"]),
        ConfigurationError(),
        ResourceLimitError(20, 14),
        ContractError(),
        DomainError(),
    ):
        assert exc.exit_code == EXIT_VALIDATION


def test_numerical_errors_exit_with_numerical_code():
    for exc in (
        NumericalError(),
        ConvergenceError("no convergence", residual_norm=1e-3),
        InvalidStateError("negative", min_eigenvalue=-0.1),
        BracketError(0.1, 5.0, 0.0, 0.0, 1e-6),
    ):
        assert exc.exit_code == EXIT_NUMERICAL
        assert isinstance(exc, NumericalError)


def test_preset_not_found_lists_valid_names():
    exc = PresetNotFoundError("fig9", ["fig1a", "fig1b"])
    assert "fig1a, fig1b" in exc.message
    assert exc.details["valid_names"] == ["fig1a", "fig1b"]
    assert exc.details["resource_id"] == "fig9"


def test_bracket_error_carries_measurements():
    exc = BracketError(0.5, 4.0, 0.0, 0.2, 1e-6)
    assert exc.details["c_lo"] == 0.0
    assert exc.details["c_hi"] == 0.2
    assert "C(t_lo)=0" in exc.message


def test_convergence_error_carries_residual():
    assert ConvergenceError("x", residual_norm=2.5e-7).details["residual_norm"] == 2.5e-7


def test_sweep_point_error_wraps_cause():
    cause = InvalidStateError("negative", min_eigenvalue=-0.2)
    exc = SweepPointError({"alpha": 0.4}, cause)
    assert exc.details["grid_point"] == {"alpha": 0.4}
    assert exc.details["cause"]["code"] == "INVALID_STATE"
    assert exc.exit_code == EXIT_NUMERICAL


def test_validation_error_from_pydantic_names_fields():
    class Model(BaseModel):
        n: int = Field(ge=3)

    try:
        Model(n=1)
    except PydanticValidationError as e:
        exc = ValidationError.from_pydantic(e, "Invalid model")
    assert "n" in exc.message
    assert exc.details["validation_errors"][0]["field"] == "n"
