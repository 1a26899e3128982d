"""The orientation/subgraph correspondence and its restrictions.

A basis is sent to the orientation that follows the chosen direction of each
fundamental circuit (off the basis) and fundamental cocircuit (on it); that
map is a bijection onto the jointly compatible orientations.  Extending by
"add reversed circuit supports, remove reversed cocircuit supports" turns it
into a bijection from all orientations to all subsets of the ground set.
Inverses are table-based: the forward map is enumerated once per
(rep, signatures) triple and cached.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Literal

from .core import (
    Basis,
    DEFAULT_ELEMENT_CAP,
    Orientation,
    PartialOrientation,
    RegularMatroidRep,
    bits_of,
    closure_mask_partition,
    enumerate_bases,
    fundamental_circuit,
    fundamental_cocircuit,
    mask_of,
)
from .errors import InputError, InvariantViolationError, NotCompatibleError
from .reversal import compatible_decomposition
from .signatures import CIRCUIT, COCIRCUIT, Signature, is_compatible

Tag = Literal["basis", "forest", "connected-spanning", "general"]

_TABLE_CACHE: dict[tuple, "BijectionTable"] = {}


class BijectionTable:
    """Frozen forward/inverse tables of the subgraph map for one signature pair."""

    def __init__(self, rep, circuit_signature, cocircuit_signature, forward, tags,
                 basis_orientations, orientation_bases):
        self.rep = rep
        self.circuit_signature = circuit_signature
        self.cocircuit_signature = cocircuit_signature
        self.forward: dict[int, int] = forward
        self.tags: dict[int, Tag] = tags
        self.basis_orientations: dict[frozenset[int], int] = basis_orientations
        self.orientation_bases: dict[int, frozenset[int]] = orientation_bases
        self.inverse: dict[int, int] = {s: m for m, s in forward.items()}

    # -- queries -------------------------------------------------------------

    def subgraph_of(self, o: Orientation) -> frozenset[int]:
        return frozenset(bits_of(self.forward[o.mask]))

    def orientation_of(self, subgraph: Iterable[int]) -> Orientation:
        m = mask_of(subgraph)
        if m not in self.inverse:
            raise InputError("subset is outside the ground set")
        return Orientation.from_mask(self.rep.element_count, self.inverse[m])

    def tag_of(self, o: Orientation) -> Tag:
        return self.tags[o.mask]

    def rows(self):
        n = self.rep.element_count
        for m in sorted(self.forward):
            yield (Orientation.from_mask(n, m),
                   frozenset(bits_of(self.forward[m])),
                   self.tags[m])

    # -- construction ----------------------------------------------------------

    @classmethod
    def build(
        cls, rep: RegularMatroidRep, sig: Signature, cosig: Signature,
        cap: int = DEFAULT_ELEMENT_CAP, use_cache: bool = True,
    ) -> "BijectionTable":
        if sig.side != CIRCUIT or cosig.side != COCIRCUIT:
            raise InputError("need a circuit signature and a cocircuit signature")
        key = (rep, sig, cosig, rep.graph is not None)
        if use_cache and key in _TABLE_CACHE:
            return _TABLE_CACHE[key]

        n = rep.element_count
        basis_orientations: dict[frozenset[int], int] = {}
        for basis in enumerate_bases(rep, cap):
            m = _orient_basis_mask(rep, basis, sig, cosig)
            basis_orientations[basis.elements] = m
        orientation_bases = {m: b for b, m in basis_orientations.items()}
        if len(orientation_bases) != len(basis_orientations):
            raise InvariantViolationError("basis map is not injective")

        sigma_ok = [is_compatible(rep, m, sig) for m in rep.orientation_universe()]
        star_ok = [is_compatible(rep, m, cosig) for m in rep.orientation_universe()]

        proj, scale = rep._projection
        forward: dict[int, int] = {}
        tags: dict[int, Tag] = {}
        for members in closure_mask_partition(rep, "cycle-cocycle"):
            compatible = [m for m in members if sigma_ok[m] and star_ok[m]]
            if len(compatible) != 1:
                raise InvariantViolationError(
                    f"class has {len(compatible)} compatible orientations, not 1"
                )
            cp = compatible[0]
            tree = orientation_bases.get(cp)
            if tree is None:
                raise InvariantViolationError(
                    "compatible orientation missed by the basis map"
                )
            tree_mask = mask_of(tree)
            cp_vec = [(cp >> j) & 1 for j in range(n)]
            for m in members:
                d = [cp_vec[j] - ((m >> j) & 1) for j in range(n)]
                support = [k for k in range(n) if d[k]]
                kmask = imask = 0
                for j in range(n):
                    num = sum(proj[j][k] * d[k] for k in support)
                    if num % scale:
                        raise InvariantViolationError("class split is not integral")
                    star = num // scale
                    if star == 0:
                        if d[j]:
                            kmask |= 1 << j
                    elif star == d[j]:
                        imask |= 1 << j
                    else:
                        raise InvariantViolationError("class split is not a sign split")
                forward[m] = (tree_mask | kmask) & ~imask
                if sigma_ok[m] and star_ok[m]:
                    tags[m] = "basis"
                elif sigma_ok[m]:
                    tags[m] = "forest"
                elif star_ok[m]:
                    tags[m] = "connected-spanning"
                else:
                    tags[m] = "general"

        if len(set(forward.values())) != 1 << n:
            raise InvariantViolationError("forward map is not a bijection")
        for m, s in forward.items():
            _check_tag(rep, tags[m], s)

        table = cls(rep, sig, cosig, forward, tags, basis_orientations, orientation_bases)
        if use_cache:
            _TABLE_CACHE[key] = table
        return table


def _check_tag(rep: RegularMatroidRep, tag: Tag, subgraph_mask: int):
    independent = subgraph_mask in rep._independent_masks
    spanning = subgraph_mask in rep._spanning_masks
    expected = {
        "basis": (True, True),
        "forest": (True, False),
        "connected-spanning": (False, True),
        "general": (False, False),
    }[tag]
    if (independent, spanning) != expected:
        raise InvariantViolationError(
            f"{tag} orientation mapped to a subgraph with "
            f"(independent, spanning) = {(independent, spanning)}"
        )


def _orient_basis_mask(rep, basis: Basis, sig: Signature, cosig: Signature) -> int:
    mask = 0
    for e in range(rep.element_count):
        if e in basis.elements:
            vec = fundamental_cocircuit(rep, basis, e)
            chosen = cosig.choice(vec.support)
        else:
            vec = fundamental_circuit(rep, basis, e)
            chosen = sig.choice(vec.support)
        if chosen.entries[e] > 0:
            mask |= 1 << e
    return mask


# ---------------------------------------------------------------------------
# the maps

def basis_to_orientation(
    rep: RegularMatroidRep, basis: Basis, sig: Signature, cosig: Signature
) -> Orientation:
    """Orient every element by its chosen fundamental circuit/cocircuit direction."""
    mask = _orient_basis_mask(rep, basis, sig, cosig)
    o = Orientation.from_mask(rep.element_count, mask)
    if not (is_compatible(rep, o, sig) and is_compatible(rep, o, cosig)):
        raise InvariantViolationError("basis image is not jointly compatible")
    return o


def basis_from_orientation(
    rep: RegularMatroidRep, o: Orientation, sig: Signature, cosig: Signature
) -> Basis:
    """Invert basis_to_orientation on a jointly compatible orientation."""
    if not (is_compatible(rep, o, sig) and is_compatible(rep, o, cosig)):
        raise NotCompatibleError("orientation is not jointly compatible")
    table = BijectionTable.build(rep, sig, cosig)
    found = table.orientation_bases.get(o.mask)
    if found is None:
        raise InvariantViolationError("compatible orientation has no basis preimage")
    return Basis(found)


def orientation_to_subgraph(
    rep: RegularMatroidRep, o: Orientation, sig: Signature, cosig: Signature
) -> frozenset[int]:
    """Map an orientation to a subgraph via its class decomposition.

    The subgraph is the representative's basis, plus the supports of the
    reversed circuits, minus the supports of the reversed cocircuits.
    """
    dec = compatible_decomposition(rep, o, sig, cosig)
    out = set(basis_from_orientation(rep, dec.representative, sig, cosig).elements)
    for piece in dec.cycles:
        out |= piece.support
    for piece in dec.cocycles:
        out -= piece.support
    return frozenset(out)


def subgraph_to_orientation(
    rep: RegularMatroidRep, subgraph: Iterable[int], sig: Signature, cosig: Signature
) -> Orientation:
    """Table-based inverse of orientation_to_subgraph."""
    table = BijectionTable.build(rep, sig, cosig)
    return table.orientation_of(subgraph)


def orientation_to_subgraph_complement(
    rep: RegularMatroidRep, o: Orientation, sig: Signature, cosig: Signature
) -> frozenset[int]:
    """Complement of the subgraph map; also a bijection onto all subsets."""
    full = frozenset(range(rep.element_count))
    return full - orientation_to_subgraph(rep, o, sig, cosig)


def classify_specialization(
    rep: RegularMatroidRep, o: Orientation, sig: Signature, cosig: Signature
) -> Tag:
    """Tag an orientation by which compatibility it enjoys, with cross-check."""
    table = BijectionTable.build(rep, sig, cosig)
    tag = table.tags[o.mask]
    _check_tag(rep, tag, table.forward[o.mask])
    return tag


def restricted_subgraph_map(
    rep: RegularMatroidRep, partial: PartialOrientation,
    sig: Signature, cosig: Signature,
) -> dict[tuple[bool, ...], frozenset[int]]:
    """Fix a partial orientation; map the free orientations to free subsets.

    Keys are sign tuples over the free elements in increasing order; values
    are the image subgraphs with the fixed elements dropped.  The result is
    always a bijection.
    """
    n = rep.element_count
    table = BijectionTable.build(rep, sig, cosig)
    free = sorted(set(range(n)) - partial.support)
    base = partial.forward_mask
    out: dict[tuple[bool, ...], frozenset[int]] = {}
    for combo in itertools.product((False, True), repeat=len(free)):
        m = base | mask_of(e for e, s in zip(free, combo) if s)
        image = table.forward[m]
        out[combo] = frozenset(e for e in free if image >> e & 1)
    return out


def restricted_orientation_map(
    rep: RegularMatroidRep, include: Iterable[int], exclude: Iterable[int],
    sig: Signature, cosig: Signature,
) -> dict[frozenset[int], tuple[bool, ...]]:
    """Fix elements in/out of the subgraph; map free subsets to free orientations.

    Inverts the subgraph map over subsets containing ``include`` and avoiding
    ``exclude``, then drops the fixed elements.  Always a bijection.
    """
    include = frozenset(include)
    exclude = frozenset(exclude)
    if include & exclude:
        raise InputError("included and excluded elements overlap")
    n = rep.element_count
    table = BijectionTable.build(rep, sig, cosig)
    free = sorted(set(range(n)) - include - exclude)
    base = mask_of(include)
    out: dict[frozenset[int], tuple[bool, ...]] = {}
    for size in range(len(free) + 1):
        for combo in itertools.combinations(free, size):
            s = base | mask_of(combo)
            m = table.inverse[s]
            out[frozenset(combo)] = tuple(bool(m >> e & 1) for e in free)
    return out
