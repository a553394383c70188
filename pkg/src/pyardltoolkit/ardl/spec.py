# PyArdlToolkit
# Copyright (C) 2024 JWCompDev
#
# spec.py
# Copyright (C) 2024 JWCompDev <jwcompdev@gmail.com>
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the Apache License as published by
# the Apache Software Foundation; either version 2.0 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# Apache License for more details.
#
# You should have received a copy of the Apache License
# along with this program.  If not, see <https://www.apache.org/licenses/>.

"""
Contains the ArdlSpec class, an ARDL(p, q1..qk) specification, and the
exhaustive lag-grid search that selects one by AIC or SIC.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Sequence

from pyardltoolkit.enums import BoundsCase, Criterion, DeterministicTerms
from pyardltoolkit.exceptions import EstimationError, ParameterError, SelectionError
from pyardltoolkit.regress import info_criteria, ols
from pyardltoolkit.tsdata.dataset import Dataset
from pyardltoolkit.tsdata.design import DesignMatrix, build_design, lag_label
from pystdlib.task_pool import TaskPool
from pystdlib.utils import check_argument

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ArdlSpec:
    """
    An ARDL(p, q1..qk) model: the dependent variable on its lags 1..p
    and on lags 0..qi of every regressor, with the deterministic terms
    implied by the bounds-test case.
    """

    dep: str
    regressors: tuple[str, ...]
    p: int
    q: tuple[int, ...]
    case: BoundsCase = BoundsCase.III

    def __post_init__(self):
        object.__setattr__(self, "regressors", tuple(self.regressors))
        object.__setattr__(self, "q", tuple(int(order) for order in self.q))
        object.__setattr__(self, "case", BoundsCase.parse(self.case))

        check_argument(bool(self.regressors), "an ARDL model needs a regressor",
                       ParameterError)
        check_argument(len(self.q) == len(self.regressors),
                       f"{len(self.regressors)} regressors but {len(self.q)} lag orders",
                       ParameterError)
        check_argument(int(self.p) == self.p and self.p >= 1,
                       f"p must be an integer >= 1, got {self.p!r}", ParameterError)
        check_argument(all(order >= 0 for order in self.q),
                       "regressor lag orders must be >= 0", ParameterError)
        names = (self.dep, *self.regressors)
        check_argument(len(set(names)) == len(names),
                       f"variables must be distinct: {', '.join(names)}", ParameterError)

    @property
    def det(self) -> DeterministicTerms:
        return self.case.det

    @property
    def k(self) -> int:
        return len(self.regressors)

    @property
    def order(self) -> tuple[int, ...]:
        return (int(self.p), *self.q)

    @property
    def lag_orders(self) -> dict[str, int]:
        return {self.dep: int(self.p), **dict(zip(self.regressors, self.q))}

    @property
    def max_lag(self) -> int:
        return max(self.order)

    @property
    def nparams(self) -> int:
        return self.det.n_terms + self.p + sum(order + 1 for order in self.q)

    @property
    def label(self) -> str:
        return f"ARDL({','.join(str(order) for order in self.order)})"

    def levels_labels(self) -> tuple[str, ...]:
        """The column labels of the levels design, in column order."""
        labels = list(self.det.labels)
        labels += [lag_label(self.dep, lag) for lag in range(1, self.p + 1)]
        for name, order in zip(self.regressors, self.q):
            labels += [lag_label(name, lag) for lag in range(order + 1)]
        return tuple(labels)

    def to_dict(self) -> dict:
        return {
            "dep": self.dep,
            "regressors": list(self.regressors),
            "p": int(self.p),
            "q": list(self.q),
            "case": str(self.case),
            "label": self.label,
        }


@dataclass(frozen=True)
class LagCandidate:
    """One evaluated point of the lag grid."""

    spec: ArdlSpec
    aic: float
    sic: float
    nobs: int

    def value(self, criterion: Criterion) -> float:
        return self.aic if criterion is Criterion.AIC else self.sic

    def sort_key(self, criterion: Criterion) -> tuple:
        return self.value(criterion), self.spec.nparams, self.spec.order

    def to_dict(self) -> dict:
        return {"order": list(self.spec.order), "aic": self.aic, "sic": self.sic,
                "nparams": self.spec.nparams}


def _evaluate(spec: ArdlSpec, design: DesignMatrix) -> LagCandidate | None:
    columns = [design.labels.index(label) for label in spec.levels_labels()]
    try:
        fit = ols(design.y, design.X[:, columns], spec.levels_labels())
    except EstimationError as ex:
        logger.debug("Skipping %s: %s", spec.label, ex)
        return None
    ic = info_criteria(fit)
    return LagCandidate(spec, ic.aic, ic.sic, fit.nobs)


def rank_lag_grid(ds: Dataset, dep: str, regressors: Sequence[str], pmax: int,
                  qmax: int, criterion: Criterion | str = Criterion.AIC,
                  case: BoundsCase | str = BoundsCase.III,
                  workers: int = 1) -> list[LagCandidate]:
    """
    Estimates every p in 1..pmax and qi in 0..qmax on the sample trimmed
    to max(pmax, qmax) and returns the candidates ordered by criterion,
    then by fewer parameters, then by the lexicographically smaller
    (p, q1, ..., qk). Rank-deficient candidates are left out.

    :param workers: candidates estimated concurrently; the order of the
        result does not depend on it
    :return: the evaluated candidates, best first
    :raises SelectionError: if no candidate could be estimated
    """
    criterion = Criterion.parse(criterion)
    case = BoundsCase.parse(case)
    regressors = tuple(regressors)
    check_argument(pmax >= 1, f"pmax must be >= 1, got {pmax}", ParameterError)
    check_argument(qmax >= 0, f"qmax must be >= 0, got {qmax}", ParameterError)

    trim = max(pmax, qmax)
    full = build_design(ds, dep, {dep: pmax, **{name: qmax for name in regressors}},
                        case.det, max_lag=trim, check=False)

    specs = [
        ArdlSpec(dep, regressors, p, q, case)
        for p in range(1, pmax + 1)
        for q in itertools.product(range(qmax + 1), repeat=len(regressors))
    ]
    logger.debug("Evaluating %d lag candidates for %s on %d observations",
                  len(specs), dep, full.nobs)

    pool = TaskPool(f"lags-{dep}", workers=workers)
    candidates = [
        candidate for candidate in pool.map(lambda spec: _evaluate(spec, full), specs)
        if candidate is not None
    ]
    if not candidates:
        raise SelectionError(
            f"No lag candidate for {dep} could be estimated "
            f"(pmax={pmax}, qmax={qmax}, {full.nobs} observations)"
        )
    candidates.sort(key=lambda candidate: candidate.sort_key(criterion))
    return candidates


def select_lags(ds: Dataset, dep: str, regressors: Sequence[str], pmax: int,
                qmax: int, criterion: Criterion | str = Criterion.AIC,
                case: BoundsCase | str = BoundsCase.III,
                workers: int = 1) -> ArdlSpec:
    """
    Returns the criterion minimiser of the lag grid (see rank_lag_grid).

    :raises SelectionError: if every candidate is rank deficient
    """
    best = rank_lag_grid(ds, dep, regressors, pmax, qmax, criterion, case, workers)[0]
    logger.info("Selected %s for %s (%s = %.6f)", best.spec.label, dep,
                Criterion.parse(criterion), best.value(Criterion.parse(criterion)))
    return best.spec

