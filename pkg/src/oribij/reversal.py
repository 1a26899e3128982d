"""Circuit/cocircuit reversals, compatible representatives, and classes.

Reversing a directed circuit in an orientation subtracts its sign vector.
Under an acyclic signature every reversal class has a unique compatible
orientation; iterating "reverse an anti-chosen circuit" reaches it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Literal

from .core import (
    DEFAULT_ELEMENT_CAP,
    Orientation,
    RegularMatroidRep,
    SignedSupportVector,
    conformal_decompose,
    split_kernel_image,
)
from .errors import CapExceededError, InputError, InvariantViolationError
from .signatures import (
    CIRCUIT,
    COCIRCUIT,
    Signature,
    canonical_signature_pair,
)
from . import ratlin

Kind = Literal["cycle", "cocycle", "cycle-cocycle"]
KINDS: tuple[Kind, ...] = ("cycle", "cocycle", "cycle-cocycle")


@dataclass(frozen=True)
class ClassDecomposition:
    """An orientation as its compatible representative plus disjoint reversals."""

    representative: Orientation
    cycles: tuple[SignedSupportVector, ...]
    cocycles: tuple[SignedSupportVector, ...]


def reverse(o: Orientation, vec: SignedSupportVector) -> Orientation:
    """Reverse the arcs of ``vec`` in ``o`` (the vector must lie in ``o``)."""
    if not vec.in_orientation(o):
        raise InputError("vector is not contained in the orientation")
    mask = (o.mask & ~vec.pos_mask) | vec.neg_mask
    return Orientation.from_mask(len(o.signs), mask)


def _representative_mask(
    rep: RegularMatroidRep, mask: int, sig: Signature, rng: random.Random | None
) -> int:
    """Reverse anti-chosen circuits until the orientation is compatible."""
    guard = (1 << rep.element_count) + 1
    order = list(range(len(sig.chosen)))
    for _ in range(guard):
        if rng is not None:
            rng.shuffle(order)
        hit = None
        for i in order:
            pos, neg = sig.anti_masks[i]
            if (pos & ~mask) == 0 and (neg & mask) == 0:
                hit = i
                break
        if hit is None:
            return mask
        pos, neg = sig.anti_masks[hit]
        mask = (mask & ~pos) | neg
    raise InvariantViolationError(
        "reversal did not terminate; the signature is probably not acyclic"
    )


def circuit_class_representative(
    rep: RegularMatroidRep, o: Orientation, sig: Signature,
    rng: random.Random | None = None,
) -> Orientation:
    """The unique sig-compatible orientation in o's circuit reversal class."""
    if sig.side != CIRCUIT:
        raise InputError("expected a circuit signature")
    mask = _representative_mask(rep, o.mask, sig, rng)
    return Orientation.from_mask(rep.element_count, mask)


def cocircuit_class_representative(
    rep: RegularMatroidRep, o: Orientation, sig: Signature,
    rng: random.Random | None = None,
) -> Orientation:
    """The unique sig-compatible orientation in o's cocircuit reversal class."""
    if sig.side != COCIRCUIT:
        raise InputError("expected a cocircuit signature")
    mask = _representative_mask(rep, o.mask, sig, rng)
    return Orientation.from_mask(rep.element_count, mask)


def _joint_representative_mask(
    rep: RegularMatroidRep, mask: int, sig: Signature, cosig: Signature,
    rng: random.Random | None = None,
) -> int:
    guard = (1 << rep.element_count) + 1
    for _ in range(guard):
        mask = _representative_mask(rep, mask, sig, rng)
        nxt = _representative_mask(rep, mask, cosig, rng)
        if nxt == mask:
            return mask
        mask = nxt
    raise InvariantViolationError("alternating reversal passes did not stabilize")


def compatible_decomposition(
    rep: RegularMatroidRep, o: Orientation, sig: Signature, cosig: Signature,
    rng: random.Random | None = None,
) -> ClassDecomposition:
    """Representative of o's joint class plus the disjoint reversals producing o.

    The difference representative - o splits exactly into a kernel part and a
    row-space part, both {0,+-1} with disjoint supports; each part then
    decomposes conformally into the reversed circuits and cocircuits.
    """
    if sig.side != CIRCUIT or cosig.side != COCIRCUIT:
        raise InputError("need a circuit signature and a cocircuit signature")
    n = rep.element_count
    cp_mask = _joint_representative_mask(rep, o.mask, sig, cosig, rng)
    cp = Orientation.from_mask(n, cp_mask)
    d = [a - b for a, b in zip(cp.vector(), o.vector())]
    c, cstar = split_kernel_image(rep, d)
    if not (c.is_sign_vector() and cstar.is_sign_vector()):
        raise InvariantViolationError("same-class split is not a sign vector")
    if (c.pos_mask | c.neg_mask) & (cstar.pos_mask | cstar.neg_mask):
        raise InvariantViolationError("kernel and image parts overlap")
    cycles = conformal_decompose(rep, c) if c.support else ()
    cocycles = conformal_decompose(rep, cstar) if cstar.support else ()
    for piece in (*cycles, *cocycles):
        if not piece.in_orientation(cp):
            raise InvariantViolationError("reversed piece is not in the representative")
    return ClassDecomposition(representative=cp, cycles=cycles, cocycles=cocycles)


def same_class(
    rep: RegularMatroidRep, o1: Orientation, o2: Orientation, kind: Kind
) -> bool:
    """Whether two orientations differ by reversals of the given kind."""
    d = [a - b for a, b in zip(o1.vector(), o2.vector())]
    if kind == "cycle":
        return rep.in_kernel(d)
    if kind == "cocycle":
        return rep.in_row_space(d)
    if kind == "cycle-cocycle":
        sig, cosig = canonical_signature_pair(rep)
        return _joint_representative_mask(rep, o1.mask, sig, cosig) == \
            _joint_representative_mask(rep, o2.mask, sig, cosig)
    raise InputError(f"unknown reversal kind {kind!r}")


def enumerate_classes(
    rep: RegularMatroidRep, kind: Kind, cap: int = DEFAULT_ELEMENT_CAP
) -> tuple[tuple[Orientation, ...], ...]:
    """Partition of all orientations into reversal classes of the given kind.

    Cycle and cocycle classes are keyed by exact linear invariants (the image
    under A, resp. the pairing with the kernel); joint classes are grouped by
    their compatible representative under the canonical signature pair.
    """
    n = rep.element_count
    if n > cap:
        raise CapExceededError(f"{n} elements exceeds the enumeration cap {cap}")
    if kind not in KINDS:
        raise InputError(f"unknown reversal kind {kind!r}")
    groups: dict[tuple | int, list[int]] = {}
    if kind == "cycle-cocycle":
        sig, cosig = canonical_signature_pair(rep)
        for m in rep.orientation_universe():
            key = _joint_representative_mask(rep, m, sig, cosig)
            groups.setdefault(key, []).append(m)
    else:
        rows = rep.matrix if kind == "cycle" else rep.kernel_basis
        for m in rep.orientation_universe():
            vec = [(m >> j) & 1 for j in range(n)]
            key = tuple(ratlin.dot(row, vec) for row in rows)
            groups.setdefault(key, []).append(m)
    classes = sorted(groups.values(), key=min)
    return tuple(
        tuple(Orientation.from_mask(n, m) for m in sorted(members))
        for members in classes
    )
