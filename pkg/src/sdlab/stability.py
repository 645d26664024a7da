"""Stability conditions on the bounded derived category of a Dynkin quiver.

A stability condition is stored as the charge vector on the simples together
with its semistable records: triples (catalog id, shift, phase) listing the
semistable indecomposable objects whose phase lies in the heart window
(0, 1].  Autoequivalence and rotation actions move the records; every
derived quantity (global dimension, masses, exceptional collections) is
computed from the records and the catalog's exact hom/ext tables.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import exactmat as xm
from .derived import DerivedObject, serre_apply, standard_generator
from .entropy import _sample_points, _fit_intercept
from .errors import (
    ConfigError,
    DisconnectedQuiver,
    GldimTooLarge,
    HeartEscape,
    HeartMismatch,
    NotAllSemistable,
    NotAStabilityFunction,
    NotConnectedSubset,
    NotDynkin,
    QuiverMismatch,
)
from .prng import SplitMix64, fold_seed
from .quivers import Quiver, classify_dynkin, parse_quiver
from .reps import IndecCatalog, catalog_for

PHASE_TOL = 1e-9


@dataclass(frozen=True)
class Record:
    """One semistable object: module `ident` shifted by `shift`, at `phase`.

    `z` is the charge of the underlying module under the current charge
    vector; the object's phase and |z| feed the mass computations.
    """

    ident: int
    shift: int
    phase: float
    z: complex


@dataclass(frozen=True)
class StabilityCondition:
    quiver: Quiver
    z_simples: tuple
    records: tuple
    support_constant: float

    def record_by_ident(self, ident: int) -> Record | None:
        for r in self.records:
            if r.ident == ident:
                return r
        return None

    def to_json(self) -> dict:
        return {
            "quiver": self.quiver.text(),
            "z_simples": [[z.real, z.imag] for z in self.z_simples],
        }


def sigma_from_json(obj: dict) -> StabilityCondition:
    q = parse_quiver(obj["quiver"])
    z = tuple(complex(re, im) for re, im in obj["z_simples"])
    return make_stability(q, z)


def _charge(z_simples, dim) -> complex:
    return sum(d * z for d, z in zip(dim, z_simples))


def _support_constant(cat: IndecCatalog, z_simples) -> float:
    worst = 0.0
    for e in cat.entries:
        norm = math.sqrt(sum(d * d for d in e.dim_vector))
        worst = max(worst, norm / abs(_charge(z_simples, e.dim_vector)))
    return 1.01 * worst


def _assemble(q: Quiver, cat: IndecCatalog, z_simples, triples) -> StabilityCondition:
    records = []
    for ident, shift, phase in triples:
        z = _charge(z_simples, cat.entries[ident].dim_vector)
        records.append(Record(ident, shift, phase, z))
    records.sort(key=lambda r: (r.phase, r.ident, r.shift))
    return StabilityCondition(
        quiver=q,
        z_simples=tuple(z_simples),
        records=tuple(records),
        support_constant=_support_constant(cat, z_simples),
    )


def make_stability(q: Quiver, z_simples) -> StabilityCondition:
    """Stability condition with heart mod(kQ) from charges on the simples.

    Every charge must lie in the upper half plane extended by the negative
    real axis.  Semistability of an indecomposable M is decided against all
    indecomposable subobjects: no submodule may carry a larger phase.
    """
    z_simples = tuple(complex(z) for z in z_simples)
    if len(z_simples) != q.n:
        raise NotAStabilityFunction(
            "expected %d charges, got %d" % (q.n, len(z_simples))
        )
    for i, z in enumerate(z_simples, start=1):
        if not (z.imag > 0 or (z.imag == 0 and z.real < 0)):
            raise NotAStabilityFunction(
                "charge %r at vertex %d leaves the closed upper half plane" % (z, i)
            )
    cat = catalog_for(q)
    cat.require_complete()
    phases = {}
    for e in cat.entries:
        z = _charge(z_simples, e.dim_vector)
        phases[e.ident] = math.atan2(z.imag, z.real) / math.pi
    triples = []
    for e in cat.entries:
        p = phases[e.ident]
        stable = True
        for f in cat.entries:
            if f.ident == e.ident:
                continue
            if all(df <= de for df, de in zip(f.dim_vector, e.dim_vector)) and cat.mono(
                f.ident, e.ident
            ):
                if phases[f.ident] > p + PHASE_TOL:
                    stable = False
                    break
        if stable:
            triples.append((e.ident, 0, p))
    return _assemble(q, cat, z_simples, triples)


def semistable_indecomposables(sigma: StabilityCondition):
    """The records themselves: semistable indecomposables with phases."""
    return sigma.records


def gldim(sigma: StabilityCondition) -> float:
    """sup of phase(B) - phase(A) + m over nonzero Hom^m(A, B) with A, B
    semistable.  Only m = 0, 1 contribute for a hereditary heart, and the
    sup is attained on the records."""
    cat = catalog_for(sigma.quiver)
    best = 0.0
    for r1 in sigma.records:
        rho1 = r1.phase - r1.shift
        for r2 in sigma.records:
            rho2 = r2.phase - r2.shift
            if cat.hom_dim(r1.ident, r2.ident) > 0:
                best = max(best, rho2 - rho1)
            if cat.ext_dim(r1.ident, r2.ident) > 0:
                best = max(best, rho2 - rho1 + 1.0)
    return best


def mass(sigma: StabilityCondition, t: float, x: DerivedObject) -> float:
    """sum over summands of |Z| * exp(phase * t); every summand must be
    semistable for the mass to be this simple sum."""
    if x.quiver != sigma.quiver:
        raise QuiverMismatch("object lives on a different quiver")
    by_ident = {r.ident: r for r in sigma.records}
    total = 0.0
    for ident, k in x.summands:
        r = by_ident.get(ident)
        if r is None:
            raise NotAllSemistable("summand id %d is not semistable" % ident)
        phase_obj = r.phase + (k - r.shift)
        total += abs(r.z) * math.exp(phase_obj * t)
    return total


@dataclass(frozen=True)
class MassGrowth:
    t_grid: tuple
    rates: tuple  # extrapolated growth rate of log mass(S^n G) per t
    phase_upper: float  # windowed max of (max object phase at level n) / n
    phase_lower: float  # windowed max of (min object phase at level n) / n


def mass_growth(sigma: StabilityCondition, t_grid, n_max: int = 30) -> MassGrowth:
    ts = [float(t) for t in t_grid]
    if not ts:
        raise ConfigError("mass growth needs a nonempty t grid")
    q = sigma.quiver
    by_ident = {r.ident: r for r in sigma.records}
    g = standard_generator(q)
    x = g
    level_data = []  # per n: list of (|z|, object phase)
    for n in range(n_max + 1):
        data = []
        for ident, k in x.summands:
            r = by_ident.get(ident)
            if r is None:
                raise NotAllSemistable(
                    "summand id %d of S^%d G is not semistable" % (ident, n)
                )
            data.append((abs(r.z), r.phase + (k - r.shift)))
        level_data.append(data)
        if n < n_max:
            x = serre_apply(x, 1)
    ns = _sample_points(q, n_max)
    rates = []
    for t in ts:
        ys = []
        for n in ns:
            logm = _logsum(math.log(a) + p * t for a, p in level_data[n])
            ys.append(logm / n)
        rates.append(_fit_intercept(ns, ys))
    lo = max(1, n_max - n_max // 2)
    phase_upper = max(max(p for _, p in level_data[n]) / n for n in range(lo, n_max + 1))
    phase_lower = max(min(p for _, p in level_data[n]) / n for n in range(lo, n_max + 1))
    return MassGrowth(
        t_grid=tuple(ts),
        rates=tuple(rates),
        phase_upper=phase_upper,
        phase_lower=phase_lower,
    )


def _logsum(terms) -> float:
    vals = list(terms)
    top = max(vals)
    return top + math.log(sum(math.exp(v - top) for v in vals))


# ------------------------------------------------------------------- actions


def _ceil_snapped(x: float) -> int:
    return math.ceil(x - PHASE_TOL)


def act(sigma: StabilityCondition, action) -> StabilityCondition:
    """Right-hand side of the group actions on stability conditions.

    A complex number mu acts by rotating every charge by exp(-i pi mu) and
    re-slotting each record into the heart window, so phases move by
    -Re(mu) modulo the shift bookkeeping; the string "serre" applies the
    Serre functor to every record while keeping phases fixed and moves the
    charge vector by the inverse transpose of its K-theory action.
    """
    q = sigma.quiver
    cat = catalog_for(q)
    if isinstance(action, str):
        if action != "serre":
            raise ConfigError("unknown action %r" % action)
        inv = xm.to_int_rows(xm.inverse(xm.from_int_rows(
            [list(row) for row in cat.euler_data.serre_k_action]
        )))
        n = q.n
        new_z = tuple(
            sum(sigma.z_simples[j] * inv[j][i] for j in range(n)) for i in range(n)
        )
        triples = []
        for r in sigma.records:
            ident2, delta = cat.serre_step(r.ident)
            triples.append((ident2, r.shift + delta, r.phase))
        return _assemble(q, cat, new_z, triples)
    mu = complex(action)
    w = cmath.exp(-1j * math.pi * mu)
    new_z = tuple(z * w for z in sigma.z_simples)
    triples = []
    for r in sigma.records:
        psi = r.phase - mu.real
        j = 1 - _ceil_snapped(psi)
        p = psi + j
        if not (0.0 < p <= 1.0 + PHASE_TOL):
            raise HeartEscape("record phase %r left the heart window" % p)
        triples.append((r.ident, r.shift + j, p))
    return _assemble(q, cat, new_z, triples)


@dataclass(frozen=True)
class GepnerReport:
    mu: float
    charge_match: bool
    slicing_match: bool

    @property
    def verdict(self) -> bool:
        return self.charge_match and self.slicing_match


def gepner_check(sigma: StabilityCondition, mu: float) -> GepnerReport:
    """Does the Serre functor act on sigma exactly like the rotation by mu?

    Charges are compared componentwise; slicings are compared as the finite
    record sets, which suffices because both actions permute the same
    finitely many indecomposables."""
    lhs = act(sigma, "serre")
    rhs = act(sigma, mu)
    scale = max(abs(z) for z in sigma.z_simples)
    charge_match = all(
        abs(a - b) <= 1e-9 * max(1.0, scale)
        for a, b in zip(lhs.z_simples, rhs.z_simples)
    )
    lmap = {(r.ident, r.shift): r.phase for r in lhs.records}
    rmap = {(r.ident, r.shift): r.phase for r in rhs.records}
    slicing_match = set(lmap) == set(rmap) and all(
        abs(lmap[k] - rmap[k]) <= 1e-9 for k in lmap
    )
    return GepnerReport(mu=float(mu), charge_match=charge_match, slicing_match=slicing_match)


def gepner_construct(q: Quiver) -> StabilityCondition:
    """Build the fractional Calabi-Yau stability condition whose slicing the
    Serre functor rotates by (h-2)/h, when the standard heart admits one.

    The charge vector must be a left eigenvector of the K-theory Serre
    action for the eigenvalue exp(i pi (h-2)/h); candidate global rotations
    place one coordinate on the negative real axis in turn, and the first
    rotation (ordered by angle) keeping every charge in the closed upper
    half plane wins.  If no rotation does, the heart itself obstructs and
    HeartMismatch reports it.
    """
    dyn = classify_dynkin(q)
    if dyn is None:
        raise NotDynkin("Gepner construction needs a Dynkin quiver")
    h = dyn.coxeter_number
    cat = catalog_for(q)
    alpha = np.array(
        [[float(v) for v in row] for row in cat.euler_data.serre_k_action]
    )
    target = cmath.exp(1j * math.pi * (h - 2) / h)
    vals, vecs = np.linalg.eig(alpha.T)
    idx = int(np.argmin(np.abs(vals - target)))
    if abs(vals[idx] - target) > 1e-6:
        raise AssertionError("expected Coxeter eigenvalue is missing")
    w = vecs[:, idx]
    scale = float(np.max(np.abs(w)))
    if scale == 0.0:
        raise HeartMismatch("degenerate eigenvector")
    w = w / scale
    tol = 1e-9
    thetas = []
    for wi in w:
        if abs(wi) < 1e-12:
            continue
        theta = (math.pi - cmath.phase(complex(wi))) % (2 * math.pi)
        if all(abs(theta - t0) > 1e-12 for t0 in thetas):
            thetas.append(theta)
    for theta in sorted(thetas):
        z = [cmath.exp(1j * theta) * complex(wi) for wi in w]
        snapped = []
        ok = True
        for zi in z:
            if abs(zi.imag) <= tol:
                zi = complex(zi.real, 0.0)
                if zi.real >= 0:
                    ok = False
                    break
            elif zi.imag < 0:
                ok = False
                break
            snapped.append(zi)
        if ok:
            return make_stability(q, snapped)
    raise HeartMismatch(
        "no global rotation places every simple charge in the heart window"
    )


def sample_stability(q: Quiver, seed: int) -> StabilityCondition:
    """Random charge vector: phases uniform in (0, 1], moduli log-uniform in
    [0.1, 10].  Deterministic in (quiver, seed)."""
    gen = SplitMix64(fold_seed("sample-stability", q.fingerprint(), seed))
    z = []
    for _ in range(q.n):
        theta = 1.0 - gen.next_float()
        r = 10.0 ** (2.0 * gen.next_float() - 1.0)
        z.append(r * cmath.exp(1j * math.pi * theta))
    return make_stability(q, z)


# -------------------------------------------------- exceptional collections


def extract_exceptional_collection(sigma: StabilityCondition):
    """Greedy full exceptional collection from the semistables of a
    stability condition with global dimension strictly below 1.

    Start from the minimal-phase record; repeatedly admit the minimal-phase
    object receiving a degree-respecting map from the accepted part while
    sending nothing back.  Returns (catalog id, shift) pairs in order.
    """
    q = sigma.quiver
    if not q.is_connected():
        raise DisconnectedQuiver("exceptional collection needs a connected quiver")
    g = gldim(sigma)
    if g >= 1.0 - PHASE_TOL:
        raise GldimTooLarge(
            "global dimension %.9f is not strictly below 1" % g
        )
    cat = catalog_for(q)
    recs = list(sigma.records)
    by_ident = {r.ident: r for r in recs}

    def obj_phase(ident: int, shift: int) -> float:
        r = by_ident[ident]
        return r.phase + (shift - r.shift)

    first = min(recs, key=lambda r: (r.phase, r.ident, r.shift))
    accepted = [(first.ident, first.shift)]
    pool: set = set()
    while len(accepted) < q.n:
        m_id, m_k = accepted[-1]
        for r in recs:
            if cat.hom_dim(m_id, r.ident) > 0:
                pool.add((r.ident, m_k))
            if cat.ext_dim(m_id, r.ident) > 0:
                pool.add((r.ident, m_k + 1))
        pool -= set(accepted)
        valid = []
        for nid, j in pool:
            ok = True
            for aid, ak in accepted:
                if cat.hom_dim(nid, aid) or cat.ext_dim(nid, aid):
                    ok = False
                    break
                if cat.hom_dim(aid, nid) and j != ak:
                    ok = False
                    break
                if cat.ext_dim(aid, nid) and j != ak + 1:
                    ok = False
                    break
            if ok:
                valid.append((nid, j))
        if not valid:
            raise AssertionError("exceptional collection extraction stalled")
        pick = min(valid, key=lambda c: (obj_phase(*c), c[0], c[1]))
        accepted.append(pick)
        pool.discard(pick)
    return accepted


def restrict_to_subquiver(sigma: StabilityCondition, subset) -> StabilityCondition:
    """Restriction to the full subquiver on `subset`: keep those charges and
    rebuild.  Valid when the ambient global dimension is at most 1 (so the
    subcategory inherits the heart cleanly) and the subset is connected."""
    q = sigma.quiver
    vs = sorted({int(v) for v in subset})
    if not vs or vs[0] < 1 or vs[-1] > q.n:
        raise ConfigError("subset must be nonempty vertex labels of the quiver")
    g = gldim(sigma)
    if g > 1.0 + PHASE_TOL:
        raise GldimTooLarge(
            "restriction requires global dimension at most 1, found %.9f" % g
        )
    renum = {v: i + 1 for i, v in enumerate(vs)}
    arrows = tuple(
        (renum[s], renum[t]) for s, t in q.arrows if s in renum and t in renum
    )
    sub_q = Quiver(len(vs), arrows)
    if not sub_q.is_connected():
        raise NotConnectedSubset("induced subquiver on %s is disconnected" % (vs,))
    z = tuple(sigma.z_simples[v - 1] for v in vs)
    return make_stability(sub_q, z)
