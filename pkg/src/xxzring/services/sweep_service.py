"""
Sweep Service.

Evaluates pair concurrences over one- or two-dimensional parameter grids and
locates critical temperatures by bisection.

Grid points sharing a Hamiltonian (same spec apart from temperature) form a
single work item, so a temperature axis reuses one eigendecomposition for all
of its values. Work items run on a thread pool; rows are sorted back into
axis1-major, axis2, pair order before they are returned.
"""
from __future__ import annotations

import hashlib
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from datetime import UTC, datetime

import orjson
import structlog

from ..core.config import get_settings
from ..core.exceptions import BracketError, DomainError, NumericalError, SweepPointError
from ..models.states import SpectralDecomposition
from ..schemas.entanglement import QubitPair
from ..schemas.ring import RingSpec
from ..schemas.sweep import SweepMetadata, SweepPlan, SweepResult, SweepRow
from .entanglement_service import ThermalPipeline, concurrence, partial_trace_pair
from .thermal_service import gibbs_state

logger = structlog.get_logger(__name__)

# (axis1 index, axis2 index) -> spec
GridIndex = tuple[int, int]


def _grid_specs(plan: SweepPlan) -> dict[GridIndex, RingSpec]:
    specs: dict[GridIndex, RingSpec] = {}
    second = plan.axis2.grid if plan.axis2 is not None else (None,)
    for a, value1 in enumerate(plan.axis1.grid):
        for b, value2 in enumerate(second):
            overrides = {plan.axis1.param.value: value1}
            if plan.axis2 is not None and value2 is not None:
                overrides[plan.axis2.param.value] = value2
            specs[(a, b)] = plan.base.with_overrides(**overrides)
    return specs


def _point(plan: SweepPlan, index: GridIndex) -> dict[str, float]:
    point = {plan.axis1.param.value: plan.axis1.grid[index[0]]}
    if plan.axis2 is not None:
        point[plan.axis2.param.value] = plan.axis2.grid[index[1]]
    return point


def plan_hash(plan: SweepPlan) -> str:
    payload = orjson.dumps(plan.model_dump(mode="json"), option=orjson.OPT_SORT_KEYS)
    return hashlib.sha256(payload).hexdigest()


def run_sweep(plan: SweepPlan, max_workers: int | None = None) -> SweepResult:
    """
    Concurrences for every grid point and pair of ``plan``.

    Raises:
        DomainError: If ``max_workers`` is negative
        SweepPointError: If a numerical failure occurs; carries the grid point
    """
    if max_workers is not None and max_workers < 0:
        raise DomainError(
            f"max_workers must be >= 0, got {max_workers}", details={"max_workers": max_workers}
        )
    settings = get_settings()
    workers = max_workers or settings.sweep_workers
    pairs = plan.resolved_pairs()
    specs = _grid_specs(plan)

    groups: dict[tuple[object, ...], list[GridIndex]] = defaultdict(list)
    for index, spec in specs.items():
        groups[spec.hamiltonian_key()].append(index)

    pipeline = ThermalPipeline(max_spectra=workers, max_states=1)
    log = logger.bind(points=len(specs), hamiltonians=len(groups), pairs=len(pairs), workers=workers)
    log.info("sweep_started", axis1=plan.axis1.param.value,
             axis2=plan.axis2.param.value if plan.axis2 is not None else None)

    def evaluate(indices: list[GridIndex]) -> dict[GridIndex, list[float]]:
        values: dict[GridIndex, list[float]] = {}
        decomp: SpectralDecomposition | None = None
        for index in indices:
            spec = specs[index]
            try:
                if decomp is None:
                    # every index of a group shares one Hamiltonian
                    decomp = pipeline.spectrum(spec)
                rho = gibbs_state(decomp, spec.temperature)
                values[index] = [
                    concurrence(partial_trace_pair(rho, pair, spec.n)).value for pair in pairs
                ]
            except NumericalError as e:
                raise SweepPointError(_point(plan, index), e)
        return values

    results: dict[GridIndex, list[float]] = {}
    if workers == 1 or len(groups) == 1:
        for indices in groups.values():
            results.update(evaluate(indices))
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for chunk in pool.map(evaluate, groups.values()):
                results.update(chunk)

    rows: list[SweepRow] = []
    for index in sorted(results):
        value1 = plan.axis1.grid[index[0]]
        value2 = plan.axis2.grid[index[1]] if plan.axis2 is not None else None
        for pair, value in zip(pairs, results[index], strict=True):
            rows.append(SweepRow(axis1=value1, axis2=value2, pair=pair.label, concurrence=value))

    log.info("sweep_finished", rows=len(rows))
    return SweepResult(
        plan=plan,
        rows=rows,
        metadata=SweepMetadata(
            timestamp=datetime.now(UTC),
            code_version=settings.APP_VERSION,
            spec_hash=plan.base.spec_hash(),
            plan_hash=plan_hash(plan),
        ),
    )


def critical_temperature(
    spec: RingSpec,
    pair: QubitPair,
    t_lo: float,
    t_hi: float,
    tol: float,
    pipeline: ThermalPipeline | None = None,
) -> float:
    """
    Vanishing point of C(T) for ``pair``, located by bisection to width ``tol``.

    C counts as vanished at or below ``CONCURRENCE_EPSILON``. The spectrum is
    computed once; each probe only reweights it.

    Raises:
        DomainError: If the bracket is not 0 < t_lo < t_hi or tol <= 0
        BracketError: If C(t_lo) <= epsilon or C(t_hi) > epsilon
    """
    if not (0.0 < t_lo < t_hi) or not tol > 0.0:
        raise DomainError(
            f"need 0 < t_lo < t_hi and tol > 0, got t_lo={t_lo}, t_hi={t_hi}, tol={tol}",
            details={"t_lo": t_lo, "t_hi": t_hi, "tol": tol},
        )
    pair.check_within(spec.n)
    epsilon = get_settings().CONCURRENCE_EPSILON
    decomp = (pipeline or ThermalPipeline()).spectrum(spec)

    def c_at(temperature: float) -> float:
        return concurrence(partial_trace_pair(gibbs_state(decomp, temperature), pair, spec.n)).value

    c_lo, c_hi = c_at(t_lo), c_at(t_hi)
    if c_lo <= epsilon or c_hi > epsilon:
        raise BracketError(t_lo, t_hi, c_lo, c_hi, epsilon)

    lo, hi = t_lo, t_hi
    probes = 0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if c_at(mid) > epsilon:
            lo = mid
        else:
            hi = mid
        probes += 1

    t_c = 0.5 * (lo + hi)
    logger.info("critical_temperature_found", pair=pair.label, t_c=t_c, probes=probes)
    return t_c
