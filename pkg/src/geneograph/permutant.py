"""Mappings between labeled finite sets, the action (g, f) -> g o f o T(g^-1),
orbit enumeration, and validation of generalized permutants and permutant
measures.

A classical permutant (bijections of X closed under conjugation by G) is the
special case where source and target coincide and T is the identity; no
separate representation is used for it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Mapping as MappingABC, Sequence

from .graph import complete_graph, edge_automorphism_group, induced_edge_permutation, vertex_automorphism_group
from .perception import as_fraction
from .perm import (
    CapExceededError,
    DomainMismatchError,
    FiniteGroup,
    Homomorphism,
    Permutation,
    parse_cycles,
)

DEFAULT_MAP_SPACE_CAP = 10**6


@dataclass(frozen=True)
class Mapping:
    """An arbitrary function between labeled finite sets: source[y] -> target[images[y]].

    Not necessarily injective or surjective.
    """

    source_labels: tuple[str, ...]
    target_labels: tuple[str, ...]
    images: tuple[int, ...]

    def __post_init__(self):
        if len(self.images) != len(self.source_labels):
            raise ValueError("image count does not match the source size")
        n = len(self.target_labels)
        for i in self.images:
            if not 0 <= i < n:
                raise ValueError(f"image index {i} out of range for target of size {n}")

    @property
    def source_size(self) -> int:
        return len(self.source_labels)

    @property
    def target_size(self) -> int:
        return len(self.target_labels)

    def __call__(self, y: int) -> int:
        return self.images[y]

    def __str__(self) -> str:
        try:
            return self.compact()
        except ValueError:
            return "[" + ",".join(self.target_labels[i] for i in self.images) + "]"

    def image_size(self) -> int:
        return len(set(self.images))

    def is_bijection(self) -> bool:
        return self.source_size == self.target_size and self.image_size() == self.source_size

    def compact(self) -> str:
        """Concatenated target labels in source order, e.g. "caf"; needs 1-char labels."""
        if any(len(lab) != 1 for lab in self.target_labels):
            raise ValueError("compact form needs single-character target labels")
        return "".join(self.target_labels[i] for i in self.images)

    def as_permutation(self) -> Permutation:
        if self.source_labels != self.target_labels or not self.is_bijection():
            raise ValueError(f"{self} is not a permutation of its source set")
        return Permutation(self.images, self.target_labels)


def mapping_from_permutation(p: Permutation) -> Mapping:
    labels = p.effective_labels()
    return Mapping(labels, labels, p.images)


def mapping_from_labels(
    names: Sequence[str], source_labels: Sequence[str], target_labels: Sequence[str]
) -> Mapping:
    target_labels = tuple(target_labels)
    index = {lab: i for i, lab in enumerate(target_labels)}
    try:
        images = tuple(index[name] for name in names)
    except KeyError as exc:
        raise ValueError(f"unknown target label {exc.args[0]!r}") from exc
    return Mapping(tuple(source_labels), target_labels, images)


def parse_mapping(text: str, source_labels: Sequence[str], target_labels: Sequence[str]) -> Mapping:
    """Parse the compact form, one target label character per source element."""
    if any(len(lab) != 1 for lab in target_labels):
        raise ValueError("compact form needs single-character target labels")
    if len(text) != len(source_labels):
        raise ValueError(
            f"expected {len(source_labels)} characters for source {tuple(source_labels)}, got {text!r}"
        )
    return mapping_from_labels(list(text), source_labels, target_labels)


@dataclass(frozen=True)
class ActionContext:
    """The data (G, K, T) of the action (g, f) -> g o f o T(g^-1) on maps Y -> X.

    G acts on the target set X, K on the source set Y, and T : G -> K is a
    verified homomorphism.
    """

    G: FiniteGroup
    K: FiniteGroup
    T: Homomorphism

    def __post_init__(self):
        if self.T.source != self.G or self.T.target != self.K:
            raise ValueError("homomorphism must map the acting group G into K")

    @property
    def x_labels(self) -> tuple[str, ...]:
        return self.G.labels

    @property
    def y_labels(self) -> tuple[str, ...]:
        return self.K.labels

    def map_space_size(self) -> int:
        return self.G.degree ** self.K.degree

    def mapping(self, value) -> Mapping:
        """Coerce a compact string, label list, or Mapping into this context."""
        if isinstance(value, Mapping):
            self._check_mapping(value)
            return value
        if isinstance(value, str):
            return parse_mapping(value, self.y_labels, self.x_labels)
        return mapping_from_labels(value, self.y_labels, self.x_labels)

    def _check_mapping(self, f: Mapping) -> None:
        if f.source_labels != self.y_labels or f.target_labels != self.x_labels:
            raise DomainMismatchError(
                f"mapping {f} does not go from {self.y_labels} to {self.x_labels}"
            )

    def all_mappings(self) -> Iterator[Mapping]:
        """Every map Y -> X in lexicographic image order."""
        for images in product(range(self.G.degree), repeat=self.K.degree):
            yield Mapping(self.y_labels, self.x_labels, images)


def endo_context(group: FiniteGroup) -> ActionContext:
    return ActionContext(group, group, Homomorphism.identity_on(group))


def alpha_action(g: Permutation, f: Mapping, ctx: ActionContext) -> Mapping:
    """The left action alpha(g, f) = g o f o T(g^-1)."""
    if g not in ctx.G:
        raise ValueError(f"{g} is not in the acting group")
    ctx._check_mapping(f)
    tg_inv = ctx.T(g.inverse())
    images = tuple(g.images[f.images[tg_inv.images[y]]] for y in range(f.source_size))
    return Mapping(f.source_labels, f.target_labels, images)


@dataclass(frozen=True)
class GeneralizedPermutant:
    """A finite, alpha-closed set of maps Y -> X; closure is checked at construction."""

    context: ActionContext
    members: tuple[Mapping, ...]

    def __post_init__(self):
        seen = set(self.members)
        if len(seen) != len(self.members):
            raise ValueError("duplicate members")
        for f in self.members:
            self.context._check_mapping(f)
        gens = self.context.G.generators
        for f in self.members:
            for g in gens:
                moved = alpha_action(g, f, self.context)
                if moved not in seen:
                    raise ValueError(f"not alpha-closed: alpha({g}, {f}) = {moved} escapes")
        object.__setattr__(self, "members", tuple(sorted(self.members, key=lambda m: m.images)))

    @property
    def size(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Mapping]:
        return iter(self.members)

    def __contains__(self, f: Mapping) -> bool:
        return f in set(self.members)

    def representative(self) -> Mapping:
        if not self.members:
            raise ValueError("the empty permutant has no representative")
        return self.members[0]


def orbit(f: Mapping | str, ctx: ActionContext) -> GeneralizedPermutant:
    """The orbit of f under alpha, enumerated by closure over G's generators."""
    f = ctx.mapping(f)
    seen = {f}
    frontier = [f]
    gens = ctx.G.generators
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                moved = alpha_action(g, h, ctx)
                if moved not in seen:
                    seen.add(moved)
                    nxt.append(moved)
        frontier = nxt
    return GeneralizedPermutant(ctx, tuple(seen))


def all_orbits(
    ctx: ActionContext, max_maps: int = DEFAULT_MAP_SPACE_CAP
) -> tuple[list[GeneralizedPermutant], dict[int, int]]:
    """Partition the whole map space X^Y into orbits, with a size -> count census.

    Orbits are listed by their lexicographically smallest member, smallest
    first; that member is also each orbit's canonical representative.
    """
    total = ctx.map_space_size()
    if total > max_maps:
        raise CapExceededError(f"map space has {total} elements, over the cap {max_maps}")
    orbits: list[GeneralizedPermutant] = []
    visited: set[Mapping] = set()
    for f in ctx.all_mappings():
        if f in visited:
            continue
        o = orbit(f, ctx)
        visited.update(o.members)
        orbits.append(o)
    census: dict[int, int] = {}
    for o in orbits:
        census[o.size] = census.get(o.size, 0) + 1
    return orbits, dict(sorted(census.items()))


def is_generalized_permutant(
    members: Iterable[Mapping], ctx: ActionContext
) -> tuple[bool, tuple[Mapping, Permutation] | None]:
    """Whether a set of maps is alpha-closed; on failure, a witness (h, g) with
    alpha(g, h) outside the set.

    Two equivalent characterizations are evaluated (closure under every group
    element, and equality with the union of members' orbits) and must agree.
    """
    mset = set(members)
    for f in mset:
        ctx._check_mapping(f)
    ordered = sorted(mset, key=lambda m: m.images)
    closed, witness = True, None
    for h in ordered:
        for g in ctx.G.elements:
            if alpha_action(g, h, ctx) not in mset:
                closed, witness = False, (h, g)
                break
        if not closed:
            break
    union: set[Mapping] = set()
    for h in ordered:
        union.update(orbit(h, ctx).members)
    assert closed == (union == mset), "closure and union-of-orbits checks disagree"
    return closed, witness


@dataclass(frozen=True)
class PermutantMeasure:
    """A finitely supported signed weighting on maps Y -> X; maps not listed
    weigh zero.  Invariance under the alpha action is checked separately by
    is_permutant_measure."""

    context: ActionContext
    weights: MappingABC[Mapping, Fraction]

    def __post_init__(self):
        clean = {}
        for f, w in self.weights.items():
            self.context._check_mapping(f)
            w = as_fraction(w)
            if w != 0:
                clean[f] = w
        object.__setattr__(self, "weights", clean)

    def weight(self, f: Mapping) -> Fraction:
        return self.weights.get(f, Fraction(0))

    @property
    def support(self) -> tuple[Mapping, ...]:
        return tuple(sorted(self.weights, key=lambda m: m.images))

    def total_variation(self) -> Fraction:
        return sum((abs(w) for w in self.weights.values()), Fraction(0))


def measure_on_orbit(o: GeneralizedPermutant, weight) -> PermutantMeasure:
    """Equal weight on every member of an orbit (alpha-invariant by construction)."""
    w = as_fraction(weight)
    return PermutantMeasure(o.context, {f: w for f in o.members})


def uniform_measure(h: GeneralizedPermutant) -> PermutantMeasure:
    """The averaging measure 1/|H| on a nonempty permutant."""
    if h.size == 0:
        raise ValueError("cannot average over the empty permutant")
    return PermutantMeasure(h.context, {f: Fraction(1, h.size) for f in h.members})


def is_permutant_measure(
    m: PermutantMeasure,
) -> tuple[bool, tuple[Mapping, Permutation] | None]:
    """Atom-level alpha-invariance of the weights; sufficient since the measure
    is atomic and every subset of the finite map space is measurable."""
    for f in m.support:
        for g in m.context.G.elements:
            if m.weight(alpha_action(g, f, m.context)) != m.weight(f):
                return False, (f, g)
    return True, None


def transposition_permutant(n: int, model: str = "edge") -> GeneralizedPermutant:
    """The permutant of all vertex transpositions of K_n, or of the edge
    permutations they induce (model="edge")."""
    if not 2 <= n <= 6:
        raise ValueError(f"transposition permutant supports 2 <= n <= 6, got {n}")
    if model not in ("vertex", "edge"):
        raise ValueError(f"model must be 'vertex' or 'edge', got {model!r}")
    kn = complete_graph(n)
    swaps = [
        parse_cycles(f"({kn.vertex_labels[i]},{kn.vertex_labels[j]})", kn.vertex_labels)
        for i in range(n)
        for j in range(i + 1, n)
    ]
    if model == "vertex":
        ctx = endo_context(vertex_automorphism_group(kn))
        members = {mapping_from_permutation(p) for p in swaps}
    else:
        ctx = endo_context(edge_automorphism_group(kn))
        members = {mapping_from_permutation(induced_edge_permutation(kn, p)) for p in swaps}
    return GeneralizedPermutant(ctx, tuple(members))
