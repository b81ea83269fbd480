"""Generic Mamdani fuzzy-inference core.

Gaussian fuzzification, weighted min rule firing, min-implication with max
aggregation over a sampled output universe, and centroid defuzzification with
trapezoidal weights.  Models are immutable plain data and every operation is
a pure function of its arguments, so one model can serve any number of
concurrent inferences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

__all__ = [
    "FuzzyError",
    "InvalidInputError",
    "ModelIntegrityError",
    "NoRuleFiredError",
    "GaussianTerm",
    "FuzzyVariable",
    "Rule",
    "FuzzyModel",
    "InferenceTrace",
    "MASS_EPSILON",
    "gaussian_membership",
    "clamp_to_universe",
    "fuzzify",
    "firing_strength",
    "aggregate",
    "defuzzify_centroid",
    "infer",
    "output_grid",
]


class FuzzyError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(FuzzyError):
    """A crisp input was rejected (non-finite or not a number)."""


class ModelIntegrityError(FuzzyError):
    """A rule refers to a term or variable that does not exist."""


class NoRuleFiredError(FuzzyError):
    """Aggregated output mass fell below the defuzzification threshold."""


# Total trapezoidal mass below which defuzzify_centroid refuses to divide.
MASS_EPSILON = 1e-12


@dataclass(frozen=True)
class GaussianTerm:
    """One linguistic term shaped as a Gaussian bump.

    Attributes:
        name: term label, e.g. "Low".
        center: location of the peak, in the owning variable's units.
        sigma: positive width parameter, same units.
    """

    name: str
    center: float
    sigma: float

    def __post_init__(self):
        object.__setattr__(self, "center", float(self.center))
        object.__setattr__(self, "sigma", float(self.sigma))
        if not self.name:
            raise ValueError("term name must be non-empty")
        if not math.isfinite(self.center):
            raise ValueError(f"term '{self.name}': center must be finite")
        if not (math.isfinite(self.sigma) and self.sigma > 0.0):
            raise ValueError(f"term '{self.name}': sigma must be positive, got {self.sigma}")


@dataclass(frozen=True)
class FuzzyVariable:
    """A linguistic variable over a bounded universe of discourse.

    Terms are kept in ascending-center order; fuzzify returns degrees in the
    same order.
    """

    name: str
    lo: float
    hi: float
    terms: tuple[GaussianTerm, ...]

    def __post_init__(self):
        object.__setattr__(self, "lo", float(self.lo))
        object.__setattr__(self, "hi", float(self.hi))
        object.__setattr__(self, "terms", tuple(self.terms))
        if not self.name:
            raise ValueError("variable name must be non-empty")
        if not (self.lo < self.hi):
            raise ValueError(f"variable '{self.name}': lo must be < hi, got [{self.lo}, {self.hi}]")
        if not self.terms:
            raise ValueError(f"variable '{self.name}': needs at least one term")
        names = [t.name for t in self.terms]
        if len(set(names)) != len(names):
            raise ValueError(f"variable '{self.name}': duplicate term names")
        for t in self.terms:
            if not (self.lo <= t.center <= self.hi):
                raise ValueError(
                    f"variable '{self.name}': term '{t.name}' center {t.center} "
                    f"outside universe [{self.lo}, {self.hi}]"
                )
        centers = [t.center for t in self.terms]
        if any(a >= b for a, b in zip(centers, centers[1:])):
            raise ValueError(f"variable '{self.name}': term centers must be strictly increasing")

    def term_index(self, name: str) -> int:
        for i, t in enumerate(self.terms):
            if t.name == name:
                return i
        raise ModelIntegrityError(f"variable '{self.name}' has no term named '{name}'")


@dataclass(frozen=True)
class Rule:
    """IF antecedents THEN consequent, with a firing weight in [0, 1].

    Antecedents hold one term index per model input variable, in model input
    order; the consequent indexes the output variable's terms.
    """

    antecedents: tuple[int, ...]
    consequent: int
    weight: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "antecedents", tuple(int(i) for i in self.antecedents))
        object.__setattr__(self, "consequent", int(self.consequent))
        object.__setattr__(self, "weight", float(self.weight))
        if not (0.0 <= self.weight <= 1.0):
            raise ValueError(f"rule weight must be in [0, 1], got {self.weight}")


@dataclass(frozen=True)
class FuzzyModel:
    """Input variables, one output variable, a rule base, and grid settings.

    grid_points controls the output-universe discretization used for
    aggregation and centroid defuzzification (endpoints inclusive).
    """

    inputs: tuple[FuzzyVariable, ...]
    output: FuzzyVariable
    rules: tuple[Rule, ...]
    grid_points: int = 1001

    def __post_init__(self):
        object.__setattr__(self, "inputs", tuple(self.inputs))
        object.__setattr__(self, "rules", tuple(self.rules))
        object.__setattr__(self, "grid_points", int(self.grid_points))
        if not self.inputs:
            raise ValueError("model needs at least one input variable")
        if self.grid_points < 2:
            raise ValueError(f"grid_points must be >= 2, got {self.grid_points}")
        names = [v.name for v in self.inputs] + [self.output.name]
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique across the model")
        n_out = len(self.output.terms)
        for r, rule in enumerate(self.rules):
            if len(rule.antecedents) != len(self.inputs):
                raise ModelIntegrityError(
                    f"rule {r + 1}: expected {len(self.inputs)} antecedents, "
                    f"got {len(rule.antecedents)}"
                )
            for v, idx in enumerate(rule.antecedents):
                if not (0 <= idx < len(self.inputs[v].terms)):
                    raise ModelIntegrityError(
                        f"rule {r + 1}: antecedent index {idx} out of range "
                        f"for variable '{self.inputs[v].name}'"
                    )
            if not (0 <= rule.consequent < n_out):
                raise ModelIntegrityError(
                    f"rule {r + 1}: consequent index {rule.consequent} out of range"
                )


@dataclass(frozen=True, eq=False)
class InferenceTrace:
    """Every intermediate of one inference, for diagnostics and tests.

    aggregated_curve is an (grid_points, 2) array of (output point, degree)
    pairs; treat all arrays as read-only.
    """

    memberships: tuple[tuple[float, ...], ...]
    firing_strengths: tuple[float, ...]
    aggregated_curve: np.ndarray
    crisp_output: float


def gaussian_membership(x: float, term: GaussianTerm) -> float:
    """Degree of x in the term: exp(-(x - center)^2 / (2 sigma^2))."""
    d = float(x) - term.center
    return math.exp(-(d * d) / (2.0 * term.sigma * term.sigma))


def clamp_to_universe(var: FuzzyVariable, x: float) -> float:
    """Clamp x into [var.lo, var.hi]; out-of-range measurements are mapped
    to the nearest modeled value rather than rejected."""
    return min(max(float(x), var.lo), var.hi)


def _as_finite_float(x, what: str) -> float:
    try:
        xf = float(x)
    except (TypeError, ValueError) as exc:
        raise InvalidInputError(f"{what} must be a real number, got {x!r}") from exc
    if not math.isfinite(xf):
        raise InvalidInputError(f"{what} must be finite, got {xf}")
    return xf


def fuzzify(var: FuzzyVariable, x: float) -> np.ndarray:
    """Degrees of x in each of var's terms, in term order."""
    xf = _as_finite_float(x, f"input for '{var.name}'")
    return np.array([gaussian_membership(xf, t) for t in var.terms])


def firing_strength(rule: Rule, memberships: Sequence[Sequence[float]]) -> float:
    """weight times the min of the rule's antecedent degrees."""
    if len(rule.antecedents) != len(memberships):
        raise ModelIntegrityError(
            f"rule has {len(rule.antecedents)} antecedents but "
            f"{len(memberships)} membership vectors were supplied"
        )
    degree = math.inf
    for v, idx in enumerate(rule.antecedents):
        degs = memberships[v]
        if not (0 <= idx < len(degs)):
            raise ModelIntegrityError(f"antecedent index {idx} out of range for variable {v}")
        d = float(degs[idx])
        if d < degree:
            degree = d
    if not math.isfinite(degree):
        raise ModelIntegrityError("rule has no antecedents")
    return rule.weight * degree


class _Compiled:
    """Per-model arrays shared by aggregate/infer (model is immutable)."""

    __slots__ = ("grid", "term_curves", "antecedents", "consequents", "weights")

    def __init__(self, model: FuzzyModel):
        self.grid = np.linspace(model.output.lo, model.output.hi, model.grid_points)
        self.term_curves = np.stack(
            [
                np.exp(-((self.grid - t.center) ** 2) / (2.0 * t.sigma * t.sigma))
                for t in model.output.terms
            ]
        )
        n = len(model.inputs)
        self.antecedents = np.array(
            [r.antecedents for r in model.rules], dtype=np.intp
        ).reshape(len(model.rules), n)
        self.consequents = np.array([r.consequent for r in model.rules], dtype=np.intp)
        self.weights = np.array([r.weight for r in model.rules])


@lru_cache(maxsize=32)
def _compiled(model: FuzzyModel) -> _Compiled:
    return _Compiled(model)


def output_grid(model: FuzzyModel) -> np.ndarray:
    """The output-universe sample points (grid_points, endpoints inclusive)."""
    return _compiled(model).grid.copy()


def aggregate(model: FuzzyModel, firing_strengths: Sequence[float]) -> np.ndarray:
    """Max over rules of each consequent clipped at its firing strength.

    Returns an (grid_points, 2) array of (output point, degree) pairs.
    """
    c = _compiled(model)
    strengths = np.asarray(firing_strengths, dtype=float)
    if strengths.shape != (len(model.rules),):
        raise ModelIntegrityError(
            f"expected {len(model.rules)} firing strengths, got shape {strengths.shape}"
        )
    if len(model.rules) == 0:
        degrees = np.zeros_like(c.grid)
    else:
        # max over rules of min(strength, consequent curve), evaluated per
        # consequent term: min is monotone in the clip level, so taking the
        # max strength within each consequent group first gives bit-identical
        # values with far less work
        clip = np.zeros(len(model.output.terms))
        np.maximum.at(clip, c.consequents, strengths)
        degrees = np.minimum(clip[:, None], c.term_curves).max(axis=0)
    return np.column_stack((c.grid, degrees))


def defuzzify_centroid(curve) -> float:
    """Centroid of a sampled fuzzy set using trapezoidal weights.

    curve is a sequence of (point, degree) pairs with strictly increasing
    points.  Raises NoRuleFiredError when the total mass is below
    MASS_EPSILON.  Sums are accumulated left to right over the grid so
    repeated runs are bit-identical.
    """
    arr = np.asarray(curve, dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 2 or arr.shape[0] == 0:
        raise ValueError("curve must be a non-empty sequence of (point, degree) pairs")
    pts = arr[:, 0]
    if arr.shape[0] > 1 and not np.all(np.diff(pts) > 0):
        raise ValueError("curve points must be strictly increasing")

    points = pts.tolist()
    degrees = arr[:, 1].tolist()
    n = len(points)
    if n == 1:
        weights = [1.0]
    else:
        weights = [0.0] * n
        weights[0] = (points[1] - points[0]) / 2.0
        weights[-1] = (points[-1] - points[-2]) / 2.0
        for i in range(1, n - 1):
            weights[i] = (points[i + 1] - points[i - 1]) / 2.0

    num = 0.0
    den = 0.0
    for x, y, w in zip(points, degrees, weights):
        yw = y * w
        num += x * yw
        den += yw
    if den < MASS_EPSILON:
        raise NoRuleFiredError(f"total output mass {den} below {MASS_EPSILON}; no rule fired")
    return num / den


def infer(model: FuzzyModel, inputs: Sequence[float]) -> InferenceTrace:
    """Run the full pipeline: clamp, fuzzify, fire, aggregate, defuzzify.

    NoRuleFiredError propagates from defuzzification; with Gaussian terms
    and at least one positive rule weight every rule fires a little, so the
    error is unreachable for such models but still handled.
    """
    if len(inputs) != len(model.inputs):
        raise InvalidInputError(
            f"expected {len(model.inputs)} inputs, got {len(inputs)}"
        )
    c = _compiled(model)
    memberships = []
    for var, x in zip(model.inputs, inputs):
        xf = _as_finite_float(x, f"input for '{var.name}'")
        memberships.append(fuzzify(var, clamp_to_universe(var, xf)))

    if len(model.rules) == 0:
        strengths = np.zeros(0)
    else:
        per_var = np.stack(
            [memberships[v][c.antecedents[:, v]] for v in range(len(model.inputs))],
            axis=1,
        )
        strengths = c.weights * per_var.min(axis=1)

    curve = aggregate(model, strengths)
    crisp = defuzzify_centroid(curve)
    return InferenceTrace(
        memberships=tuple(tuple(m.tolist()) for m in memberships),
        firing_strengths=tuple(strengths.tolist()),
        aggregated_curve=curve,
        crisp_output=crisp,
    )
