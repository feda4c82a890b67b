"""Permutations of labeled finite sets, cycle notation, and explicit group closure.

Everything here is deliberately explicit and desk-scale: groups are stored as
full element lists (canonically ordered), and homomorphisms as full tables
verified at construction.  No Schreier-Sims machinery.
"""

from __future__ import annotations

import math
import os
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

DEFAULT_GROUP_CAP = math.factorial(10)

_ENV_GROUP_CAP = "GENEO_MAX_GROUP"


class CycleParseError(ValueError):
    """Malformed cycle-product text."""


class DomainMismatchError(ValueError):
    """Operands live on different indexed sets."""


class CapExceededError(RuntimeError):
    """An enumeration grew past its configured size cap."""


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(n))


@dataclass(frozen=True)
class Permutation:
    """A bijection of {0..n-1}; ``images[i]`` is the image of element i.

    ``labels`` names the underlying set for parsing/printing; all computation
    uses integer indices.
    """

    images: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(n)):
            raise ValueError(f"not a bijection of 0..{n - 1}: {self.images}")
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("label count does not match domain size")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __str__(self) -> str:
        return format_cycles(self)

    def is_identity(self) -> bool:
        return all(im == i for i, im in enumerate(self.images))

    def effective_labels(self) -> tuple[str, ...]:
        return self.labels if self.labels is not None else default_labels(self.n)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, im in enumerate(self.images):
            inv[im] = i
        return Permutation(tuple(inv), self.labels)

    def pullback(self, values: Sequence) -> tuple:
        """Precompose a coordinate vector: (values o self)[i] = values[self(i)]."""
        return tuple(values[im] for im in self.images)

    def cycles(self, include_fixed: bool = False) -> list[list[int]]:
        """Disjoint cycles, each starting at its smallest index, sorted by that index."""
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            cur = self.images[start]
            while cur != start:
                cyc.append(cur)
                seen[cur] = True
                cur = self.images[cur]
            if len(cyc) > 1 or include_fixed:
                out.append(cyc)
        return out


def identity(n: int, labels: tuple[str, ...] | None = None) -> Permutation:
    return Permutation(tuple(range(n)), labels)


def _merge_labels(p: Permutation, q: Permutation) -> tuple[str, ...] | None:
    if p.labels is not None and q.labels is not None and p.labels != q.labels:
        raise DomainMismatchError(f"label sets differ: {p.labels} vs {q.labels}")
    return p.labels if p.labels is not None else q.labels


def compose(p: Permutation, q: Permutation) -> Permutation:
    """(p o q)(x) = p(q(x))."""
    if p.n != q.n:
        raise DomainMismatchError(f"domain sizes differ: {p.n} vs {q.n}")
    labels = _merge_labels(p, q)
    return Permutation(tuple(p.images[qi] for qi in q.images), labels)


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, labels: Sequence[str]) -> Permutation:
    """Parse a disjoint-cycle product like "(A,C)(B,D)" over the given labels.

    The literal token "id" parses to the identity.  Raises CycleParseError on
    unknown labels, a label repeated anywhere in the product, or stray text.
    """
    labels = tuple(labels)
    index = {lab: i for i, lab in enumerate(labels)}
    if len(index) != len(labels):
        raise CycleParseError(f"duplicate labels in domain: {labels}")
    stripped = text.strip()
    if stripped == "id":
        return identity(len(labels), labels)
    if _CYCLE_RE.sub("", stripped).strip():
        raise CycleParseError(f"malformed cycle product: {text!r}")
    images = list(range(len(labels)))
    used: set[int] = set()
    matched_any = False
    for m in _CYCLE_RE.finditer(stripped):
        matched_any = True
        names = [tok for tok in re.split(r"[,\s]+", m.group(1).strip()) if tok]
        if len(names) < 2:
            raise CycleParseError(f"cycle needs at least two elements: ({m.group(1)})")
        idxs = []
        for name in names:
            if name not in index:
                raise CycleParseError(f"unknown label {name!r} (domain {labels})")
            idxs.append(index[name])
        for i in idxs:
            if i in used:
                raise CycleParseError(f"label {labels[i]!r} repeated in {text!r}")
            used.add(i)
        for a, b in zip(idxs, idxs[1:] + idxs[:1]):
            images[a] = b
    if not matched_any:
        raise CycleParseError(f"malformed cycle product: {text!r}")
    return Permutation(tuple(images), labels)


def format_cycles(p: Permutation) -> str:
    """Inverse of parse_cycles: disjoint cycles, fixed points omitted, identity as "id"."""
    labels = p.effective_labels()
    cycles = p.cycles()
    if not cycles:
        return "id"
    return "".join("(" + ",".join(labels[i] for i in cyc) + ")" for cyc in cycles)


def _group_cap(max_size: int | None) -> int:
    if max_size is not None:
        return max_size
    env = os.environ.get(_ENV_GROUP_CAP)
    if env:
        return int(env)
    return DEFAULT_GROUP_CAP


@dataclass(frozen=True)
class FiniteGroup:
    """An explicit permutation group: all elements, canonically ordered.

    Elements are sorted lexicographically by image array so that every
    downstream enumeration (orbits, censuses, witnesses) is deterministic.
    """

    elements: tuple[Permutation, ...]
    generators: tuple[Permutation, ...]
    identity: Permutation

    def __post_init__(self):
        object.__setattr__(self, "_members", frozenset(self.elements))

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def degree(self) -> int:
        return self.identity.n

    @property
    def labels(self) -> tuple[str, ...]:
        return self.identity.effective_labels()

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in self._members  # type: ignore[attr-defined]

    def coordinate_orbits(self) -> list[list[int]]:
        """Orbits of the group action on the underlying indices, each sorted."""
        n = self.degree
        parent = list(range(n))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for g in self.generators:
            for i, im in enumerate(g.images):
                ri, rj = find(i), find(im)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
        buckets: dict[int, list[int]] = {}
        for i in range(n):
            buckets.setdefault(find(i), []).append(i)
        return [sorted(v) for _, v in sorted(buckets.items())]


def generate_group(
    generators: Iterable[Permutation],
    *,
    domain_size: int | None = None,
    labels: Sequence[str] | None = None,
    max_size: int | None = None,
) -> FiniteGroup:
    """Smallest group containing the generators, by breadth-first closure.

    For an empty generator list, domain_size or labels must be given.  Raises
    CapExceededError if the closure grows past the cap (default 10!,
    overridable via the GENEO_MAX_GROUP environment variable).
    """
    gens = list(generators)
    cap = _group_cap(max_size)
    if gens:
        n = gens[0].n
        lab = gens[0].labels
        for g in gens[1:]:
            if g.n != n:
                raise DomainMismatchError("generators act on different domain sizes")
            lab = _merge_labels(gens[0], g)
    else:
        if labels is not None:
            n, lab = len(labels), tuple(labels)
        elif domain_size is not None:
            n, lab = domain_size, None
        else:
            raise ValueError("empty generator list needs domain_size or labels")
    ident = identity(n, lab)
    elements = {ident}
    frontier = [g for g in gens if g not in elements]
    elements.update(frontier)
    while frontier:
        if len(elements) > cap:
            raise CapExceededError(f"group closure exceeded cap {cap}")
        new = []
        for a in gens:
            for b in frontier:
                c = compose(a, b)
                if c not in elements:
                    elements.add(c)
                    new.append(c)
        frontier = new
    if len(elements) > cap:
        raise CapExceededError(f"group closure exceeded cap {cap}")
    ordered = tuple(sorted(elements, key=lambda p: p.images))
    return FiniteGroup(ordered, tuple(gens), ident)


def trivial_group(labels: Sequence[str]) -> FiniteGroup:
    return generate_group([], labels=tuple(labels))


def group_from_elements(elements: Iterable[Permutation], verify: bool = True) -> FiniteGroup:
    """Wrap an explicit element set as a FiniteGroup, with a small greedy generating set.

    With verify=True the elements are checked to form a group (contain the
    identity, closed under composition and inverse); pass verify=False when the
    set is a group by construction, e.g. the image of a group homomorphism.
    """
    elems = sorted(set(elements), key=lambda p: p.images)
    if not elems:
        raise ValueError("a group needs at least the identity")
    n = elems[0].n
    lab = elems[0].labels
    ident = identity(n, lab)
    member = frozenset(elems)
    if ident not in member:
        raise ValueError("element set lacks the identity")
    if verify:
        for p in elems:
            if p.inverse() not in member:
                raise ValueError(f"element set not closed under inverse at {p}")
        for p in elems:
            for q in elems:
                if compose(p, q) not in member:
                    raise ValueError(f"element set not closed under composition at {p}, {q}")
    gens: list[Permutation] = []
    have = {ident}
    for p in elems:
        if p not in have:
            gens.append(p)
            have = set(generate_group(gens, max_size=len(elems)).elements)
            if len(have) == len(elems):
                break
    return FiniteGroup(tuple(elems), tuple(gens), ident)


@dataclass
class Homomorphism:
    """A group homomorphism as a full table, verified exhaustively at construction."""

    source: FiniteGroup
    target: FiniteGroup
    table: dict[Permutation, Permutation]

    def __post_init__(self):
        if set(self.table) != set(self.source.elements):
            raise ValueError("homomorphism table must cover every source element")
        for v in self.table.values():
            if v not in self.target:
                raise ValueError(f"image {v} not in target group")
        if self.table[self.source.identity] != self.target.identity:
            raise ValueError("homomorphism must map identity to identity")
        for a in self.source.elements:
            for b in self.source.elements:
                if self.table[compose(a, b)] != compose(self.table[a], self.table[b]):
                    raise ValueError(
                        f"not multiplicative at ({format_cycles(a)}, {format_cycles(b)})"
                    )

    def __call__(self, g: Permutation) -> Permutation:
        return self.table[g]

    def is_identity(self) -> bool:
        return self.source == self.target and all(k == v for k, v in self.table.items())

    @classmethod
    def identity_on(cls, group: FiniteGroup) -> "Homomorphism":
        return cls(group, group, {g: g for g in group.elements})

    @classmethod
    def from_generator_images(
        cls,
        source: FiniteGroup,
        target: FiniteGroup,
        pairs: Sequence[tuple[Permutation, Permutation]],
    ) -> "Homomorphism":
        """Extend generator assignments g_i -> k_i to the whole source group.

        The given permutations must generate the source group; the extension is
        then verified exhaustively, which also certifies well-definedness.
        """
        for g, k in pairs:
            if g not in source:
                raise ValueError(f"{format_cycles(g)} not in source group")
            if k not in target:
                raise ValueError(f"{format_cycles(k)} not in target group")
        table = {source.identity: target.identity}
        frontier = [source.identity]
        while frontier:
            new = []
            for g, k in pairs:
                for e in frontier:
                    ge = compose(g, e)
                    im = compose(k, table[e])
                    if ge not in table:
                        table[ge] = im
                        new.append(ge)
                    elif table[ge] != im:
                        raise ValueError("generator images do not define a homomorphism")
            frontier = new
        if len(table) != source.order:
            raise ValueError("given permutations do not generate the source group")
        return cls(source, target, table)

    def then(self, other: "Homomorphism") -> "Homomorphism":
        """Composite homomorphism (other after self)."""
        if self.target != other.source:
            raise DomainMismatchError("homomorphisms do not chain: target != source")
        return Homomorphism(self.source, other.target, {g: other(self(g)) for g in self.source})
