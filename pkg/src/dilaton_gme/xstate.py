"""X-shaped density matrices and their block construction.

The reduced states produced by the horizon pipeline only populate the
main diagonal and the anti-diagonal.  Such a matrix is fully described by
three length-``m`` tuples (``m`` = half the dimension):

* ``a[i]`` — diagonal entry at row ``i`` (lower half),
* ``b[i]`` — diagonal entry at the mirrored row ``2m - 1 - i``,
* ``c[i]`` — coherence between row ``i`` and its mirror.

Positivity of each 2x2 block requires ``|c[i]| <= sqrt(a[i] * b[i])``.

:func:`extract_xstate` reads the triplets off a sparse density matrix and
:func:`build_block_matrix` writes them directly from the closed-form block
structure of the scenario, without ever building a state.  The two paths
must agree entry by entry; the verification suite checks that they do.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidDensity, NotXState, ScaleCap
from .hawking import BogoliubovPair, coeff_power
from .modes_state import MAX_DENSE_MODES, MAX_TOTAL_MODES, ScenarioSpec, SparseDensity

__all__ = ["XState", "extract_xstate", "build_block_matrix"]


@dataclass(frozen=True)
class XState:
    """Diagonal/anti-diagonal triplet form of an X-shaped density matrix."""

    a: tuple[float, ...]
    b: tuple[float, ...]
    c: tuple[float, ...]

    def __post_init__(self):
        a = tuple(float(v) for v in self.a)
        b = tuple(float(v) for v in self.b)
        c = tuple(float(v) for v in self.c)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        if not a or len(a) != len(b) or len(a) != len(c):
            raise InvalidDensity(
                f"triplets must share a positive length, got "
                f"({len(a)}, {len(b)}, {len(c)})"
            )
        for name, values in (("a", a), ("b", b)):
            for v in values:
                if not math.isfinite(v) or v < -1e-14:
                    raise InvalidDensity(f"{name}-entry {v!r} is not a valid population")
        trace = math.fsum(a) + math.fsum(b)
        if abs(trace - 1.0) > 1e-12:
            raise InvalidDensity(f"trace deviates from 1 by {trace - 1.0:.3e}")
        for i, (ai, bi, ci) in enumerate(zip(a, b, c)):
            bound = math.sqrt(max(ai, 0.0) * max(bi, 0.0))
            if abs(ci) > bound + 1e-12:
                raise InvalidDensity(
                    f"coherence |c[{i}]| = {abs(ci)!r} exceeds sqrt(a*b) = {bound!r}"
                )

    @property
    def half_dimension(self) -> int:
        return len(self.a)

    @property
    def dimension(self) -> int:
        return 2 * len(self.a)

    def to_array(self) -> np.ndarray:
        if self.dimension > (1 << MAX_DENSE_MODES):
            raise ScaleCap(f"dense matrix of dimension {self.dimension} exceeds the cap")
        dim = self.dimension
        mat = np.zeros((dim, dim))
        for i, (ai, bi, ci) in enumerate(zip(self.a, self.b, self.c)):
            j = dim - 1 - i
            mat[i, i] = ai
            mat[j, j] = bi
            mat[i, j] = ci
            mat[j, i] = ci
        return mat


def extract_xstate(rho: SparseDensity, tol: float = 1e-12) -> XState:
    """Read the (a, b, c) triplets off a sparse density matrix.

    Any entry with ``|value| > tol`` that sits neither on the diagonal nor
    on the anti-diagonal raises :class:`NotXState` carrying its position.
    """
    n_modes = len(rho.layout)
    if n_modes > MAX_DENSE_MODES:
        raise ScaleCap(
            f"triplet form for {n_modes} modes exceeds the {MAX_DENSE_MODES}-mode cap"
        )
    dim = 1 << n_modes
    half = dim >> 1
    diag: dict[int, float] = {}
    anti: dict[int, float] = {}
    for (row, col), value in rho.entries.items():
        if row == col:
            diag[row] = value
        elif row + col == dim - 1:
            anti[row] = value
        elif abs(value) > tol:
            raise NotXState(row, col)
    a = tuple(diag.get(i, 0.0) for i in range(half))
    b = tuple(diag.get(dim - 1 - i, 0.0) for i in range(half))
    c = tuple(anti.get(i, 0.0) for i in range(half))
    return XState(a, b, c)


def build_block_matrix(spec: ScenarioSpec, pair: BogoliubovPair) -> XState:
    """Closed-form triplets of the reduced scenario state.

    The diagonal of the lower half enumerates the kept horizon patterns:
    a pattern of weight ``w`` carries ``cos(theta)**2 * alpha**(2(n-w)) *
    beta**(2w)``.  The upper half holds a single population
    ``sin(theta)**2`` whose mirror index is ``2**n_in_kept - 1``, and the
    one coherence ``alpha**p * beta**q * cos(theta) * sin(theta)`` sits at
    that same index.
    """
    if spec.n_parties + spec.n_horizon > MAX_TOTAL_MODES:
        raise ScaleCap(
            f"scenario needs {spec.n_parties + spec.n_horizon} modes after "
            f"expansion; the exact pipeline is capped at {MAX_TOTAL_MODES}"
        )
    if spec.n_parties > MAX_DENSE_MODES:
        raise ScaleCap(
            f"triplet form for {spec.n_parties} modes exceeds the "
            f"{MAX_DENSE_MODES}-mode cap"
        )
    n = spec.n_horizon
    half = 1 << (spec.n_parties - 1)
    cos_t = math.cos(spec.theta)
    sin_t = math.sin(spec.theta)
    a = [0.0] * half
    b = [0.0] * half
    c = [0.0] * half
    cos_sq = cos_t * cos_t
    for pattern in range(1 << n):
        w = pattern.bit_count()
        a[pattern] = cos_sq * coeff_power(pair, 2 * (n - w), 2 * w)
    mirror = (1 << spec.n_in_kept) - 1
    b[mirror] = sin_t * sin_t
    c[mirror] = coeff_power(pair, spec.n_out_kept, spec.n_in_kept) * cos_t * sin_t
    return XState(tuple(a), tuple(b), tuple(c))
