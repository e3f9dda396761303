"""Exhaustive search for normal forms matching topological constraints.

Given Betti numbers of a space (and optionally of its fixed locus), plus
duality and surjectivity hypotheses, :func:`enumerate_decompositions` lists
every normal form consistent with the data.  The search walks singular
degrees 0..2n in increasing order.  At degree d it must account for:

* one unit of degree-d dimension per free summand at (d, q);
* two units per antipodal 0-sphere at shift d;
* one unit per positive antipodal sphere at shift d, whose second unit (the
  "tail") lands higher, offset by the sphere dimension, and consumes budget
  there when that degree is reached.

Pruning is by running budgets (singular, scheduled tails, fixed-locus Betti
numbers) and, when duality is asserted, by mirror forcing: once the degree
passes n, every free multiplicity is determined by its mirror below n, and
antipodal multiplicities whose mirror shift was already processed are
likewise forced.  Every candidate that survives is re-checked through the
public localization and classification operations before being returned, so
the output is sound by construction and the pruning only affects speed.

The search is single-threaded; output is canonically sorted so it does not
depend on exploration order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import GradedDims, NormalFormModule, make_module
from .classification import MaximalityClass, classify
from .exceptions import ConstraintViolation, InfeasibleBounds, SchemaError
from .localization import (
    forgetful_image_dims,
    pd_symmetric,
    real_manifold_validate,
    rho_localize,
    underlying_singular,
)

__all__ = [
    "ConstraintSet",
    "MaximalityPrediction",
    "enumerate_decompositions",
    "satisfies_constraints",
    "krasnov_predict",
    "threefold_predict",
]


@dataclass(frozen=True)
class ConstraintSet:
    """Topological data driving the decomposition search.

    ``betti_total`` are the mod-2 Betti numbers of the ambient space,
    supported in degrees 0..2n; ``betti_fixed``, when given, those of the
    fixed locus.  ``poincare_dual`` asserts the compact-Real-manifold mirror
    symmetries; ``forgetful_onto_degrees`` lists degrees where restriction
    to singular cohomology must be surjective.
    """

    dimension: int
    betti_total: GradedDims
    betti_fixed: GradedDims | None = None
    has_fixed_point: bool = False
    connected: bool = False
    poincare_dual: bool = False
    forgetful_onto_degrees: frozenset[int] | None = None
    class_filter: MaximalityClass | None = None

    def __post_init__(self):
        if self.dimension < 0:
            raise ConstraintViolation("dimension must be nonnegative")
        if self.forgetful_onto_degrees is not None:
            object.__setattr__(
                self, "forgetful_onto_degrees", frozenset(self.forgetful_onto_degrees)
            )
        if self.connected and self.betti_total.get(0) != 1:
            raise ConstraintViolation(
                "a connected space has degree-0 Betti number 1, got "
                f"{self.betti_total.get(0)}"
            )
        if (
            self.has_fixed_point
            and self.betti_fixed is not None
            and self.betti_fixed.total() == 0
        ):
            raise ConstraintViolation(
                "a nonempty fixed locus has positive total Betti number"
            )

    def to_json_dict(self) -> dict:
        top = max([2 * self.dimension] + list(self.betti_total.support()))
        fixed = None
        if self.betti_fixed is not None:
            upper = max([self.dimension] + list(self.betti_fixed.support()))
            fixed = self.betti_fixed.to_list(upper)
        return {
            "n": self.dimension,
            "betti_total": self.betti_total.to_list(top),
            "betti_fixed": fixed,
            "has_fixed_point": self.has_fixed_point,
            "connected": self.connected,
            "poincare_dual": self.poincare_dual,
            "forgetful_onto_degrees": (
                sorted(self.forgetful_onto_degrees)
                if self.forgetful_onto_degrees is not None
                else None
            ),
            "class_filter": self.class_filter.value if self.class_filter else None,
        }

    @staticmethod
    def from_json_dict(data, field: str = "constraints") -> "ConstraintSet":
        if not isinstance(data, dict):
            raise SchemaError(field, "expected an object")

        def require(key, kinds, allow_none=False):
            if key not in data:
                if allow_none:
                    return None
                raise SchemaError(f"{field}.{key}", "missing required field")
            value = data[key]
            if value is None and allow_none:
                return None
            if not isinstance(value, kinds) or isinstance(value, bool) and kinds is int:
                raise SchemaError(f"{field}.{key}", f"expected {kinds}")
            return value

        n = require("n", int)
        if isinstance(n, bool) or n < 0:
            raise SchemaError(f"{field}.n", "expected a nonnegative integer")

        def betti_list(key, allow_none):
            value = require(key, list, allow_none=allow_none)
            if value is None:
                return None
            for i, entry in enumerate(value):
                if not isinstance(entry, int) or isinstance(entry, bool) or entry < 0:
                    raise SchemaError(f"{field}.{key}[{i}]", "expected a nonnegative integer")
            return GradedDims.from_list(value)

        total = betti_list("betti_total", allow_none=False)
        fixed = betti_list("betti_fixed", allow_none=True)

        def flag(key):
            value = require(key, bool, allow_none=True)
            return bool(value)

        forgetful = require("forgetful_onto_degrees", list, allow_none=True)
        if forgetful is not None:
            for i, entry in enumerate(forgetful):
                if not isinstance(entry, int) or isinstance(entry, bool):
                    raise SchemaError(
                        f"{field}.forgetful_onto_degrees[{i}]", "expected an integer"
                    )
            forgetful = frozenset(forgetful)

        class_code = require("class_filter", str, allow_none=True)
        class_filter = MaximalityClass.from_code(class_code) if class_code else None

        return ConstraintSet(
            dimension=n,
            betti_total=total,
            betti_fixed=fixed,
            has_fixed_point=flag("has_fixed_point"),
            connected=flag("connected"),
            poincare_dual=flag("poincare_dual"),
            forgetful_onto_degrees=forgetful,
            class_filter=class_filter,
        )


def satisfies_constraints(cs: ConstraintSet, module: NormalFormModule) -> bool:
    """Re-check a module against every constraint via the public operations."""
    n = cs.dimension
    if underlying_singular(module).dims() != cs.betti_total:
        return False
    if cs.betti_fixed is not None and rho_localize(module) != cs.betti_fixed:
        return False
    if cs.poincare_dual:
        if not pd_symmetric(module, n).holds:
            return False
        report = real_manifold_validate(module, n, cs.has_fixed_point, cs.connected)
        if not report.passed:
            return False
    if cs.forgetful_onto_degrees:
        image = forgetful_image_dims(module)
        for degree in cs.forgetful_onto_degrees:
            if image.get(degree) != cs.betti_total.get(degree):
                return False
    if cs.class_filter is not None and classify(module) is not cs.class_filter:
        return False
    return True


# Slot kinds used by the per-degree composition enumerator.
_FREE = 0  # one free summand key (d, q); unit cost 1
_FREE_PAIR = 1  # mirror-linked keys (n, q) and (n, n - q); unit cost 2
_ANTI0 = 2  # antipodal 0-sphere at shift d; unit cost 2
_ANTI = 3  # antipodal n-sphere, n > 0, at shift d; unit cost 1 plus a tail


def enumerate_decompositions(cs: ConstraintSet) -> list[NormalFormModule]:
    """All normal forms consistent with the constraints, canonically sorted.

    Raises :class:`InfeasibleBounds` when ``betti_total`` is supported
    outside degrees 0..2n.  An empty list is a legitimate answer.
    """
    n = cs.dimension
    top = 2 * n
    for d, v in cs.betti_total.items():
        if d < 0 or d > top:
            raise InfeasibleBounds(
                f"betti_total has dimension {v} in degree {d}, outside [0, {top}]"
            )

    betti = cs.betti_total.to_list(top)
    pd = cs.poincare_dual
    forgetful = cs.forgetful_onto_degrees or frozenset()
    klass = cs.class_filter

    fixed_target = None
    if cs.betti_fixed is not None:
        if any(d < 0 or d > top for d in cs.betti_fixed.support()):
            return []  # no key in the box reaches those fixed degrees
        fixed_target = cs.betti_fixed.to_list(top)

    min_shift = 1 if cs.has_fixed_point else 0
    span_cap = top - 1 if cs.has_fixed_point else top

    tails = [0] * (top + 2)
    fixed_used = [0] * (top + 1)
    free_chosen: dict[tuple[int, int], int] = {}
    anti_chosen: dict[tuple[int, int], int] = {}
    results: list[NormalFormModule] = []

    def anti_t_range(d: int):
        return range(0, span_cap - d + 1)

    def anti_allowed(d: int, t: int, c: int) -> bool:
        """Budget/forgetful/class feasibility of c copies of A_t at shift d."""
        if c == 0:
            return True
        if klass is MaximalityClass.MAXIMAL:
            return False
        if t > 0 and klass is MaximalityClass.GALOIS_MAXIMAL_ONLY:
            return False
        if t == 0 and d in forgetful:
            return False
        if t > 0 and (d + t) in forgetful:
            return False
        if t > 0 and tails[d + t] + c > betti[d + t]:
            return False
        return True

    def finalize():
        module = make_module(
            [(p, q, c) for (p, q), c in free_chosen.items() if c],
            [(r, t, c) for (r, t), c in anti_chosen.items() if c],
        )
        if satisfies_constraints(cs, module):
            results.append(module)

    def fill(slots, i, remaining, d):
        if i == len(slots):
            if remaining == 0:
                process(d + 1)
            return
        kind, q_or_t, cost = slots[i]
        cap = remaining // cost
        if kind in (_FREE, _FREE_PAIR):
            if fixed_target is not None:
                k = d - q_or_t
                cap = min(cap, fixed_target[k] - fixed_used[k])
                if kind == _FREE_PAIR:
                    # the partner key (n, n-q) hits fixed degree q
                    cap = min(cap, fixed_target[q_or_t] - fixed_used[q_or_t])
            if pd and kind == _FREE and d < n:
                cap = min(cap, betti[top - d])  # mirror head must fit later
                if fixed_target is not None:
                    cap = min(cap, fixed_target[n - d + q_or_t])
        else:
            t = q_or_t
            if not anti_allowed(d, t, 1):
                cap = 0
            elif t > 0:
                cap = min(cap, betti[d + t] - tails[d + t])
            if pd:
                mirror_r = top - d - t
                if mirror_r > d:
                    if not anti_allowed(mirror_r, t, 1):
                        cap = 0
                    else:
                        cap = min(cap, betti[mirror_r])
                        if t > 0:
                            cap = min(cap, betti[top - d])
        for c in range(max(cap, 0) + 1):
            undo = apply_slot(slots[i], c, d)
            fill(slots, i + 1, remaining - c * cost, d)
            undo()

    def apply_slot(slot, c, d):
        kind, q_or_t, _cost = slot
        keys = []
        tail_deg = None
        if kind == _FREE:
            keys = [((d, q_or_t), d - q_or_t)]
        elif kind == _FREE_PAIR:
            keys = [((n, q_or_t), n - q_or_t), ((n, n - q_or_t), q_or_t)]
        elif kind == _ANTI0:
            anti_chosen[(d, 0)] = c
        else:
            anti_chosen[(d, q_or_t)] = c
            tail_deg = d + q_or_t
            tails[tail_deg] += c
        for key, fixed_deg in keys:
            free_chosen[key] = c
            fixed_used[fixed_deg] += c

        def undo():
            for key, fixed_deg in keys:
                del free_chosen[key]
                fixed_used[fixed_deg] -= c
            if kind == _ANTI0:
                del anti_chosen[(d, 0)]
            elif kind == _ANTI:
                del anti_chosen[(d, q_or_t)]
                tails[tail_deg] -= c

        return undo

    def process(d):
        if d > top:
            if fixed_target is not None and fixed_used != fixed_target:
                return
            finalize()
            return

        if fixed_target is not None:
            expired = d - n - 1
            if expired >= 0 and fixed_used[expired] != fixed_target[expired]:
                return

        avail = betti[d] - tails[d]
        if avail < 0:
            return

        applied = []

        def abort():
            for undo in reversed(applied):
                undo()

        # Mirror-forced multiplicities (duality): free keys once past the
        # middle degree, antipodal keys whose mirror shift lies behind us.
        if pd:
            if d > n:
                for q in range(min(d, n) + 1):
                    c = free_chosen.get((top - d, n - q), 0)
                    avail -= c
                    if avail < 0:
                        abort()
                        return
                    if fixed_target is not None:
                        k = d - q
                        if fixed_used[k] + c > fixed_target[k]:
                            abort()
                            return
                    free_chosen[(d, q)] = c
                    fixed_used[d - q] += c

                    def undo_free(key=(d, q), fd=d - q, cc=c):
                        del free_chosen[key]
                        fixed_used[fd] -= cc

                    applied.append(undo_free)
            if d >= min_shift:
                for t in anti_t_range(d):
                    mirror_r = top - d - t
                    if mirror_r >= d:
                        continue
                    c = anti_chosen.get((mirror_r, t), 0)
                    if not anti_allowed(d, t, c):
                        abort()
                        return
                    avail -= (2 if t == 0 else 1) * c
                    if avail < 0:
                        abort()
                        return
                    anti_chosen[(d, t)] = c
                    if t > 0:
                        tails[d + t] += c

                    def undo_anti(key=(d, t), td=d + t if t else None, cc=c):
                        del anti_chosen[key]
                        if td is not None:
                            tails[td] -= cc

                    applied.append(undo_anti)

        slots = []
        if not pd or d < n:
            for q in range(min(d, n) + 1):
                slots.append((_FREE, q, 1))
        elif d == n:
            for q in range(n // 2 + 1):
                if q < n - q:
                    slots.append((_FREE_PAIR, q, 2))
                else:
                    slots.append((_FREE, q, 1))
        if d >= min_shift:
            for t in anti_t_range(d):
                if pd and top - d - t < d:
                    continue  # forced above
                slots.append((_ANTI0, 0, 2) if t == 0 else (_ANTI, t, 1))

        fill(slots, 0, avail, d)
        abort()

    process(0)
    results.sort(key=lambda m: m.sort_key())
    return results


@dataclass(frozen=True)
class MaximalityPrediction:
    """Outcome of a sufficiency criterion for Galois-maximality."""

    applicable: bool
    prediction: str | None = None  # "GM" when applicable

    def admits(self, klass: MaximalityClass) -> bool:
        """Whether a classification is consistent with the prediction."""
        if not self.applicable:
            return True
        return klass.is_galois_maximal

    def to_json_dict(self) -> dict:
        return {"applicable": self.applicable, "prediction": self.prediction}


def krasnov_predict(cs: ConstraintSet) -> MaximalityPrediction:
    """Surface criterion: a real point and no first cohomology force GM."""
    applicable = (
        cs.dimension == 2
        and cs.has_fixed_point
        and cs.poincare_dual
        and cs.betti_total.get(1) == 0
    )
    return MaximalityPrediction(applicable, "GM" if applicable else None)


def threefold_predict(cs: ConstraintSet) -> MaximalityPrediction:
    """Threefold criterion: additionally needs surjectivity in degree 4."""
    applicable = (
        cs.dimension == 3
        and cs.has_fixed_point
        and cs.poincare_dual
        and cs.betti_total.get(1) == 0
        and cs.forgetful_onto_degrees is not None
        and 4 in cs.forgetful_onto_degrees
    )
    return MaximalityPrediction(applicable, "GM" if applicable else None)
