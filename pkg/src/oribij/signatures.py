"""Acyclic circuit and cocircuit signatures.

A signature picks one direction for every circuit (or cocircuit) support.
It is acyclic when no nonnegative combination of the chosen vectors vanishes,
which happens exactly when some weight vector has strictly positive inner
product with every choice.  Signatures are built either from a weight vector
or from an explicit list of choices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Literal, NamedTuple, Sequence

from . import fourier_motzkin as fm
from .core import (
    DEFAULT_ELEMENT_CAP,
    Orientation,
    RegularMatroidRep,
    SignedSupportVector,
    enumerate_signed_circuits,
    enumerate_signed_cocircuits,
)
from .errors import (
    CapExceededError,
    InputError,
    InvariantViolationError,
    NonGenericWeightsError,
)

DEFAULT_SUPPORT_CAP = 20

CIRCUIT: Literal["circuit"] = "circuit"
COCIRCUIT: Literal["cocircuit"] = "cocircuit"
Side = Literal["circuit", "cocircuit"]


@dataclass(frozen=True)
class Signature:
    """One chosen signed vector per circuit (or cocircuit) support."""

    side: Side
    chosen: tuple[SignedSupportVector, ...]
    provenance: str = "explicit"

    @cached_property
    def by_support(self) -> dict[frozenset[int], SignedSupportVector]:
        return {vec.support: vec for vec in self.chosen}

    def choice(self, support: Iterable[int]) -> SignedSupportVector:
        key = frozenset(support)
        try:
            return self.by_support[key]
        except KeyError:
            raise InputError(f"no circuit with support {sorted(key)}") from None

    @cached_property
    def chosen_masks(self) -> tuple[tuple[int, int], ...]:
        return tuple((v.pos_mask, v.neg_mask) for v in self.chosen)

    @cached_property
    def anti_masks(self) -> tuple[tuple[int, int], ...]:
        """(pos, neg) masks of the rejected direction of each support."""
        return tuple((v.neg_mask, v.pos_mask) for v in self.chosen)


class Acyclicity(NamedTuple):
    acyclic: bool
    witness: tuple[Fraction, ...] | None


def _supports_for(rep: RegularMatroidRep, side: Side, cap: int):
    if side == CIRCUIT:
        return enumerate_signed_circuits(rep, cap)
    if side == COCIRCUIT:
        return enumerate_signed_cocircuits(rep, cap)
    raise InputError(f"unknown signature side {side!r}")


def signature_from_weights(
    rep: RegularMatroidRep,
    weights: Sequence[int | Fraction],
    side: Side,
    *,
    cap: int = DEFAULT_ELEMENT_CAP,
    support_cap: int = DEFAULT_SUPPORT_CAP,
) -> Signature:
    """Choose, per support, the direction with positive weight inner product.

    Ties (inner product zero) fall back to the canonical representative,
    whose lowest-index entry is +1; that matches refining the weights by the
    unit-basis order.  A tie-broken signature is re-validated with
    is_acyclic, and rejected as non-generic if validation is impossible or
    fails.
    """
    w = [Fraction(x) for x in weights]
    if len(w) != rep.element_count:
        raise InputError("weight vector length disagrees with the ground set")
    chosen = []
    tied = False
    for vec in _supports_for(rep, side, cap):
        score = sum(a * b for a, b in zip(w, vec.entries))
        if score > 0:
            chosen.append(vec)
        elif score < 0:
            chosen.append(-vec)
        else:
            tied = True
            chosen.append(vec)
    sig = Signature(side=side, chosen=tuple(chosen), provenance="weights")
    if tied:
        hint = (
            "weights are not generic for some support; append a lexicographic "
            "tiebreaker such as adding epsilon * (1, 3, 9, ...)"
        )
        if len(chosen) > support_cap:
            raise NonGenericWeightsError(hint)
        if not is_acyclic(rep, sig, cap=support_cap).acyclic:
            raise NonGenericWeightsError(hint)
    return sig


def explicit_signature(
    rep: RegularMatroidRep,
    side: Side,
    choices: Iterable[SignedSupportVector | Sequence[int]],
    *,
    cap: int = DEFAULT_ELEMENT_CAP,
) -> Signature:
    """Validate and package an explicit list of chosen directions.

    Every circuit support must be covered exactly once and every choice must
    be one of the two signed vectors on its support.
    """
    canonical = {vec.support: vec for vec in _supports_for(rep, side, cap)}
    seen: dict[frozenset[int], SignedSupportVector] = {}
    for raw in choices:
        entries = tuple(int(x) for x in (raw.entries if isinstance(raw, SignedSupportVector) else raw))
        vec = SignedSupportVector(entries, "kernel" if side == CIRCUIT else "image")
        ref = canonical.get(vec.support)
        if ref is None:
            raise InputError(f"{sorted(vec.support)} is not a {side} support")
        if entries not in (ref.entries, (-ref).entries):
            raise InputError(f"{entries} is not a signed {side} on its support")
        if vec.support in seen:
            raise InputError(f"support {sorted(vec.support)} chosen twice")
        seen[vec.support] = vec if entries == ref.entries else -ref
    missing = set(canonical) - set(seen)
    if missing:
        raise InputError(f"{len(missing)} supports have no chosen direction")
    ordered = tuple(seen[vec.support] for vec in canonical.values())
    return Signature(side=side, chosen=ordered, provenance="explicit")


def is_acyclic(
    rep: RegularMatroidRep, sig: Signature, cap: int = DEFAULT_SUPPORT_CAP
) -> Acyclicity:
    """Decide acyclicity by exact rational feasibility.

    Maximizes t subject to <w, v> >= t for every chosen vector v and the box
    -1 <= w_e <= 1; the signature is acyclic iff the maximum is positive, and
    the maximizing w is returned as a strict witness.
    """
    if len(sig.chosen) > cap:
        raise CapExceededError(f"{len(sig.chosen)} supports exceeds the cap {cap}")
    n = rep.element_count
    if not sig.chosen:
        return Acyclicity(True, tuple(Fraction(0) for _ in range(n)))
    rows = []
    for vec in sig.chosen:
        rows.append(tuple(vec.entries) + (-1, 0))
    for j in range(n):
        unit = [0] * (n + 2)
        unit[j], unit[n + 1] = 1, 1
        rows.append(tuple(unit))
        unit = [0] * (n + 2)
        unit[j], unit[n + 1] = -1, 1
        rows.append(tuple(unit))
    sup, point = fm.maximize(rows, n + 1, n)
    if sup is None or sup <= 0:
        return Acyclicity(False, None)
    witness = tuple(point[:n])
    for vec in sig.chosen:
        if sum(a * b for a, b in zip(witness, vec.entries)) <= 0:
            raise InvariantViolationError("witness does not separate strictly")
    return Acyclicity(True, witness)


def directed_circuits_in(
    rep: RegularMatroidRep, o: Orientation, side: Side = CIRCUIT,
    cap: int = DEFAULT_ELEMENT_CAP,
) -> list[SignedSupportVector]:
    """All signed circuits (or cocircuits) whose arcs all appear in o."""
    out = []
    for vec in _supports_for(rep, side, cap):
        for cand in (vec, -vec):
            if cand.in_orientation(o):
                out.append(cand)
    return out


def is_compatible(rep: RegularMatroidRep, o: Orientation | int, sig: Signature) -> bool:
    """True when every directed circuit in o is the chosen one for its support."""
    m = o if isinstance(o, int) else o.mask
    for pos, neg in sig.anti_masks:
        if (pos & ~m) == 0 and (neg & m) == 0:
            return False
    return True


def canonical_weights(n: int) -> tuple[int, ...]:
    """Powers of three: never orthogonal to a nonzero {0,+-1} vector."""
    return tuple(3 ** j for j in range(n))


@lru_cache(maxsize=None)
def canonical_signature_pair(rep: RegularMatroidRep) -> tuple[Signature, Signature]:
    """The deterministic weight-induced signature pair used as a default."""
    w = canonical_weights(rep.element_count)
    return (
        signature_from_weights(rep, w, CIRCUIT),
        signature_from_weights(rep, w, COCIRCUIT),
    )
