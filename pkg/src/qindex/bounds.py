"""Upper bounds on q(G) and mu(G) from (n, m, delta, Delta), closed forms for
S_{n,k}, and equality certificates.

Every formula accepts Python scalars or numpy arrays of the same shape, so the
exhaustive sweeps reuse exactly the arithmetic of the single-graph API.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import math
from dataclasses import dataclass, field

import numpy as np

from .graph import DegreeProfile, Graph, connected_components, degeneracy, degree_profile, encode_graph6
from .spectral import DEFAULT_TOL, mu_index, q_index

log = logging.getLogger(__name__)

RADICAND_SLACK = 1e-12
EQUALITY_TOL = 1e-7


class FormulaDomainError(ValueError):
    """A bound was evaluated outside its domain (negative radicand, bad parameters)."""


def _root(r, name):
    """Square root that rejects genuinely negative radicands.

    Radicands in [-1e-12, 0) are rounding noise and are clamped to zero.
    """
    if np.ndim(r) == 0:
        r = float(r)
        if r < -RADICAND_SLACK:
            raise FormulaDomainError(f"{name}: negative radicand {r!r}")
        if r < 0:
            log.debug("%s: clamped radicand %r to 0", name, r)
            r = 0.0
        return math.sqrt(r)
    r = np.asarray(r, dtype=np.float64)
    if np.any(r < -RADICAND_SLACK):
        raise FormulaDomainError(f"{name}: negative radicand {r.min()!r}")
    return np.sqrt(np.maximum(r, 0.0))


def _min(a, b):
    if np.ndim(a) == 0 and np.ndim(b) == 0:
        return min(float(a), float(b))
    return np.minimum(a, b)


# -- raw formulas ------------------------------------------------------------


def main_quadratic_root(n, m, delta, Delta):
    """Larger root of q^2 - (Delta+2delta-1) q - 4m + 2(n-1+Delta) delta."""
    a = Delta + 2 * delta - 1
    return 0.5 * (a + _root(a * a + 16 * m - 8 * (n - 1 + Delta) * delta, "bound_main"))


def main_bound(n, m, delta, Delta):
    return _min(2 * Delta, main_quadratic_root(n, m, delta, Delta))


def cor1_bound(n, m, delta):
    a = n + 2 * delta - 2
    return 0.5 * (a + _root(a * a + 16 * m - 16 * (n - 1) * delta, "bound_cor1"))


def cor2_bound(m, Delta):
    a = Delta - 1
    return _min(2 * Delta, 0.5 * (a + _root(a * a + 16 * m, "bound_cor2")))


def thm_a_mu_bound(n, m, delta):
    return (delta - 1) / 2 + _root(2 * m - n * delta + (delta + 1) ** 2 / 4, "bound_thm_a_mu")


def lipa_bound(n, m, delta, Delta):
    a = delta - 1
    return 0.5 * (a + _root(a * a + 16 * m + 8 * Delta * Delta - 8 * (n - 1) * delta, "bound_lipa"))


def llt_bound(n, m, delta, Delta):
    a = Delta + delta - 1
    return 0.5 * (a + _root(a * a + 16 * m - 8 * (n - 1) * delta, "bound_llt"))


def qin_quadratic(q, n, m, delta, Delta):
    """q^2 - (Delta+2delta-1) q - 4m + 2(n-1+Delta) delta; nonpositive at q = q(G)."""
    return q * q - (Delta + 2 * delta - 1) * q - 4 * m + 2 * (n - 1 + Delta) * delta


# -- profile API ---------------------------------------------------------------


def bound_main(p: DegreeProfile) -> float:
    """min{2 Delta, larger root of the rowsum quadratic}."""
    return main_bound(p.n, p.m, p.delta, p.Delta)


def threshold_reaches_2delta(p: DegreeProfile) -> bool:
    """True when 2m >= Delta^2 + Delta + (n-1-Delta) delta, i.e. the 2 Delta cap is active."""
    hit = 2 * p.m >= p.Delta ** 2 + p.Delta + (p.n - 1 - p.Delta) * p.delta
    if hit and main_quadratic_root(p.n, p.m, p.delta, p.Delta) < 2 * p.Delta - 1e-9:
        raise AssertionError(f"threshold reached but quadratic root is below 2*Delta for {p}")
    return hit


def bound_cor1(p: DegreeProfile) -> float:
    return cor1_bound(p.n, p.m, p.delta)


def bound_cor2(p: DegreeProfile) -> float:
    return cor2_bound(p.m, p.Delta)


def bound_thm_a_mu(p: DegreeProfile) -> float:
    """(delta-1)/2 + sqrt(2m - n delta + (delta+1)^2/4), a bound on mu(G)."""
    return thm_a_mu_bound(p.n, p.m, p.delta)


def bound_lipa(p: DegreeProfile) -> float:
    return lipa_bound(p.n, p.m, p.delta, p.Delta)


def bound_llt(p: DegreeProfile) -> float:
    return llt_bound(p.n, p.m, p.delta, p.Delta)


def _check_prop1_domain(x, y, n, m):
    if n < 1 or not 0 <= m <= n * (n - 1) / 2:
        raise FormulaDomainError(f"need n >= 1 and 0 <= m <= n(n-1)/2, got n={n}, m={m}")
    avg = 2 * m / n
    if x > avg or y < avg:
        raise FormulaDomainError(f"need x <= 2m/n <= y, got x={x}, y={y}, 2m/n={avg}")


def prop1_f(x: float, y: float, n: int, m: int) -> float:
    _check_prop1_domain(x, y, n, m)
    a = y + 2 * x - 1
    return a + _root(a * a + 16 * m - 8 * (n - 1 + y) * x, "prop1_f")


def prop1_g(x: float, y: float, n: int, m: int) -> float:
    return min(2 * y, prop1_f(x, y, n, m) / 2)


def closed_mu_snk(n: int, k: int) -> float:
    """Adjacency spectral radius of S_{n,k}."""
    if not 1 <= k <= n:
        raise FormulaDomainError(f"need 1 <= k <= n, got n={n}, k={k}")
    return (k - 1) / 2 + _root(k * n - (3 * k * k + 2 * k - 1) / 4, "closed_mu_snk")


def closed_q_snk(n: int, k: int) -> float:
    """Signless Laplacian spectral radius of S_{n,k}."""
    if not 1 <= k <= n:
        raise FormulaDomainError(f"need 1 <= k <= n, got n={n}, k={k}")
    a = n + 2 * k - 2
    return 0.5 * (a + _root(a * a - 8 * (k * k - k), "closed_q_snk"))


# -- equality certificates -----------------------------------------------------

NONE = "none"
REGULAR = "regular"
SPECIAL_COMPONENT = "special-component"
REGULAR_COMPONENT = "regular-component"
DEGREE_SET = "degree-set"


@dataclass(frozen=True)
class EqualityCertificate:
    kind: str
    witness: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.kind != NONE


def _special_component(g: Graph, degs, delta, Delta):
    """A component of order Delta+1 with degrees in {delta, Delta}, all others delta-regular."""
    comps = connected_components(g)
    for comp in comps:
        if len(comp) != Delta + 1 or any(degs[v] not in (delta, Delta) for v in comp):
            continue
        inside = set(comp)
        if all(degs[v] == delta for v in range(g.n) if v not in inside):
            return comp
    return None


def literal_equality_condition(g: Graph) -> bool:
    """G is regular, or has a component of order Delta+1 whose degrees lie in
    {delta, Delta} while every other component is delta-regular.

    This is exactly the equality case of the quadratic root
    (:func:`main_quadratic_root`) and of :func:`bound_thm_a_mu`.  It is not the
    equality case of :func:`bound_main`, whose 2*Delta cap is also attained by
    any graph with a Delta-regular component.
    """
    degs = g.degrees()
    delta, Delta = min(degs), max(degs)
    return delta == Delta or _special_component(g, degs, delta, Delta) is not None


def equality_certificate_main(g: Graph) -> EqualityCertificate:
    degs = g.degrees()
    delta, Delta = min(degs), max(degs)
    if delta == Delta:
        return EqualityCertificate(REGULAR, {"degree": delta})
    comp = _special_component(g, degs, delta, Delta)
    if comp is not None:
        return EqualityCertificate(
            SPECIAL_COMPONENT,
            {"component": comp, "degrees_in_delta_Delta": True, "others_delta_regular": True},
        )
    # q(G) = 2 Delta exactly when some component is Delta-regular, and the cap makes that tight
    for comp in connected_components(g):
        if all(degs[v] == Delta for v in comp):
            return EqualityCertificate(REGULAR_COMPONENT, {"component": comp, "degree": Delta})
    return EqualityCertificate(NONE)


def equality_certificate_thm_a(g: Graph) -> EqualityCertificate:
    degs = g.degrees()
    delta, Delta = min(degs), max(degs)
    if delta == Delta:
        return EqualityCertificate(REGULAR, {"degree": delta})
    comp = _special_component(g, degs, delta, Delta)
    if comp is not None:
        return EqualityCertificate(
            SPECIAL_COMPONENT,
            {"component": comp, "degrees_in_delta_Delta": True, "others_delta_regular": True},
        )
    return EqualityCertificate(NONE)


def degree_set_condition(g: Graph) -> bool:
    """Every degree equals delta or n-1 (necessary, not sufficient, for equality)."""
    degs = g.degrees()
    delta = min(degs)
    return all(d in (delta, g.n - 1) for d in degs)


def equality_certificate_cor1(g: Graph) -> EqualityCertificate:
    """Degrees in {delta, n-1}, and either a vertex of degree n-1 exists or 2 delta >= n-2.

    A d-regular graph gives bound_cor1 = max(n-2, 2d), so sparse regular graphs
    (2d < n-2, e.g. C_7) satisfy the degree condition without attaining the bound.
    """
    degs = g.degrees()
    delta, Delta = min(degs), max(degs)
    if not degree_set_condition(g):
        return EqualityCertificate(NONE)
    if Delta != g.n - 1 and 2 * delta < g.n - 2:
        return EqualityCertificate(NONE, {"regular_but_sparse": True})
    return EqualityCertificate(DEGREE_SET, {"degrees": sorted(set(degs))})


# -- per-graph report ----------------------------------------------------------

BOUND_NAMES = ("bound_main", "bound_cor1", "bound_cor2", "bound_thm_a_mu", "bound_lipa", "bound_llt")

CSV_COLUMNS = (
    "graph6", "n", "m", "delta", "Delta", "degeneracy", "q", "mu",
    *BOUND_NAMES,
    "equality_main", "equality_cor1", "equality_thm_a",
    *(f"gap_{name[len('bound_'):]}" for name in BOUND_NAMES),
)


@dataclass(frozen=True)
class BoundReport:
    graph6: str
    profile: DegreeProfile
    degeneracy: int
    q_exact: float
    mu_exact: float
    bound_main: float
    bound_cor1: float
    bound_cor2: float
    bound_thm_a_mu: float
    bound_lipa: float
    bound_llt: float
    equality_main: str
    equality_cor1: str
    equality_thm_a: str

    @property
    def gaps(self) -> dict[str, float]:
        out = {}
        for name in BOUND_NAMES:
            exact = self.mu_exact if name == "bound_thm_a_mu" else self.q_exact
            out[f"gap_{name[len('bound_'):]}"] = getattr(self, name) - exact
        return out

    def row(self) -> dict:
        p = self.profile
        row = {
            "graph6": self.graph6, "n": p.n, "m": p.m, "delta": p.delta, "Delta": p.Delta,
            "degeneracy": self.degeneracy, "q": self.q_exact, "mu": self.mu_exact,
        }
        row.update({name: getattr(self, name) for name in BOUND_NAMES})
        row.update(equality_main=self.equality_main, equality_cor1=self.equality_cor1,
                   equality_thm_a=self.equality_thm_a)
        row.update(self.gaps)
        return row

    def to_json(self) -> str:
        return json.dumps(self.row())

    def to_csv_row(self) -> str:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerow([_fmt(self.row()[c]) for c in CSV_COLUMNS])
        return buf.getvalue()


def _fmt(x):
    return repr(x) if isinstance(x, float) else str(x)


def csv_header() -> str:
    return ",".join(CSV_COLUMNS) + "\n"


def bound_report(g: Graph, tol: float = DEFAULT_TOL) -> BoundReport:
    p = degree_profile(g)
    return BoundReport(
        graph6=encode_graph6(g),
        profile=p,
        degeneracy=degeneracy(g),
        q_exact=q_index(g, tol),
        mu_exact=mu_index(g, tol),
        bound_main=bound_main(p),
        bound_cor1=bound_cor1(p),
        bound_cor2=bound_cor2(p),
        bound_thm_a_mu=bound_thm_a_mu(p),
        bound_lipa=bound_lipa(p),
        bound_llt=bound_llt(p),
        equality_main=equality_certificate_main(g).kind,
        equality_cor1=equality_certificate_cor1(g).kind,
        equality_thm_a=equality_certificate_thm_a(g).kind,
    )
