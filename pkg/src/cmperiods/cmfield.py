"""Combinatorial models of CM-field embedding sets.

A CM field is modelled by its finite set of complex embeddings together
with a fixed-point-free conjugation involution, a finite group of
permutations commuting with conjugation, and CM types (sections of the
conjugation pairing).  Everything downstream — conjugated signatures,
conjugated weights, displacement signs — consumes only this permutation
data, so no actual number fields appear anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import (
    IllPosedModelError,
    InvalidCMTypeError,
    InvalidModelError,
    PreconditionError,
    UnreachablePointError,
)

Perm = dict[str, str]


def compose(outer: Perm, inner: Perm) -> Perm:
    """Composite permutation x -> outer[inner[x]]."""
    return {x: outer[inner[x]] for x in inner}


def invert(perm: Perm) -> Perm:
    return {v: k for k, v in perm.items()}


def _is_permutation(perm: Perm, domain: tuple[str, ...]) -> bool:
    return set(perm) == set(domain) and set(perm.values()) == set(domain)


@dataclass(frozen=True, eq=True)
class CMFieldModel:
    """Embedding set with conjugation and a finite commuting group action.

    ``group`` maps element names to permutations of ``embeddings``.  The
    named identity element is looked up by its permutation; the group is
    required to be closed under composition and inverses so that
    displacement-sign families are well posed.
    """

    embeddings: tuple[str, ...]
    conj: Perm
    group: dict[str, Perm]

    def __post_init__(self):
        emb = self.embeddings
        if len(set(emb)) != len(emb):
            raise InvalidModelError("duplicate embedding names")
        if len(emb) % 2 != 0:
            raise InvalidModelError("embedding set must have even size")
        if not _is_permutation(self.conj, emb):
            raise InvalidModelError("conj is not a permutation of the embeddings")
        for t in emb:
            if self.conj[t] == t:
                raise InvalidModelError(f"conj fixes {t!r}; conjugation must be fixed-point free")
            if self.conj[self.conj[t]] != t:
                raise InvalidModelError("conj is not an involution")
        if not self.group:
            raise InvalidModelError("group must contain at least one element")
        for name, perm in self.group.items():
            if not _is_permutation(perm, emb):
                raise InvalidModelError(f"group element {name!r} is not a permutation")
            for t in emb:
                if perm[self.conj[t]] != self.conj[perm[t]]:
                    raise InvalidModelError(f"group element {name!r} does not commute with conj")
        # Closure and inverses; with these, every coset computation below is total.
        perms = {self._key(p): n for n, p in self.group.items()}
        for g, h in itertools.product(self.group.values(), repeat=2):
            if self._key(compose(g, h)) not in perms:
                raise InvalidModelError("group is not closed under composition")
        for name, perm in self.group.items():
            if self._key(invert(perm)) not in perms:
                raise InvalidModelError(f"group element {name!r} has no inverse in the model")

    @staticmethod
    def _key(perm: Perm) -> tuple[tuple[str, str], ...]:
        return tuple(sorted(perm.items()))

    @property
    def degree_plus(self) -> int:
        return len(self.embeddings) // 2

    def element(self, name: str) -> Perm:
        try:
            return self.group[name]
        except KeyError:
            raise PreconditionError(f"unknown group element {name!r}") from None

    def name_of(self, perm: Perm) -> str:
        key = self._key(perm)
        for name, p in self.group.items():
            if self._key(p) == key:
                return name
        raise PreconditionError("permutation is not a group element of the model")

    def inverse_name(self, name: str) -> str:
        return self.name_of(invert(self.element(name)))

    def compose_names(self, outer: str, inner: str) -> str:
        return self.name_of(compose(self.element(outer), self.element(inner)))

    def canonical_cm_type(self) -> "CMType":
        """The CM type taking the first-listed member of each conjugate pair."""
        members = []
        seen: set[str] = set()
        for t in self.embeddings:
            if t not in seen:
                members.append(t)
                seen.add(t)
                seen.add(self.conj[t])
        return CMType(frozenset(members))

    def cm_types(self):
        """All CM types of the model, in a deterministic order."""
        pairs = []
        seen = set()
        for t in self.embeddings:
            if t not in seen:
                seen.add(t)
                seen.add(self.conj[t])
                pairs.append((t, self.conj[t]))
        for choice in itertools.product(*pairs):
            yield CMType(frozenset(choice))


@dataclass(frozen=True, eq=True)
class CMType:
    """A choice of one embedding from each conjugate pair."""

    members: frozenset[str]

    def validate(self, model: CMFieldModel) -> None:
        conj_members = {model.conj[t] for t in self.members}
        if self.members & conj_members:
            raise InvalidCMTypeError("CM type contains a conjugate pair")
        if self.members | conj_members != set(model.embeddings):
            raise InvalidCMTypeError("CM type does not cover every conjugate pair")

    def sorted_members(self) -> tuple[str, ...]:
        return tuple(sorted(self.members))


@dataclass(frozen=True, eq=True)
class EmbFamilyModel:
    """A finite pointed set carrying the model group's action.

    Stands in for a family of coefficient-field embeddings: ``action``
    maps each group-element name to a permutation of ``points``.  The
    base point anchors the coset structure; two elements may reach the
    same point, and consumers must verify sign coherence explicitly.
    """

    points: tuple[str, ...]
    base: str
    action: dict[str, Perm] = field(compare=False)

    def validate(self, model: CMFieldModel) -> None:
        if self.base not in self.points:
            raise InvalidModelError("base point is not in the point set")
        if set(self.action) != set(model.group):
            raise InvalidModelError("action must name exactly the model's group elements")
        for name, perm in self.action.items():
            if not _is_permutation(perm, self.points):
                raise InvalidModelError(f"action of {name!r} is not a permutation of the points")
        # Action compatibility: composing two named actions realizes the
        # action of some element whose embedding permutation matches.
        for g, h in itertools.product(model.group, repeat=2):
            comp_emb = CMFieldModel._key(compose(model.element(g), model.element(h)))
            comp_pts = compose(self.action[g], self.action[h])
            ok = any(
                CMFieldModel._key(model.element(k)) == comp_emb
                and self.action[k] == comp_pts
                for k in model.group
            )
            if not ok:
                raise InvalidModelError(
                    f"composite of {g!r} and {h!r} is not realized by any named element"
                )


def conjugate_cm_type(model: CMFieldModel, phi: CMType, g: str) -> CMType:
    """Image CM type {g(t) for t in phi}; valid because g commutes with conj."""
    phi.validate(model)
    perm = model.element(g)
    return CMType(frozenset(perm[t] for t in phi.members))


def displacement_sign(model: CMFieldModel, phi: CMType, g: str) -> int:
    """(-1)**|phi minus g(phi)|, the sign measuring how far g moves the CM type."""
    phi.validate(model)
    perm = model.element(g)
    moved = {perm[t] for t in phi.members}
    return -1 if len(phi.members - moved) % 2 else 1


def displacement_sign_family(
    model: CMFieldModel, phi: CMType, fam: EmbFamilyModel
) -> dict[str, int]:
    """Sign at each family point, via any group element reaching it from the base.

    Verifies well-definedness: every element reaching a point must give the
    same sign, and every point must be reachable.
    """
    phi.validate(model)
    fam.validate(model)
    signs: dict[str, int] = {}
    for rho in fam.points:
        reaching = [g for g in model.group if fam.action[g][fam.base] == rho]
        if not reaching:
            raise UnreachablePointError(f"no group element reaches point {rho!r}")
        values = {displacement_sign(model, phi, g) for g in reaching}
        if len(values) > 1:
            raise IllPosedModelError(
                f"point {rho!r} is reached with both signs; the family is ill posed"
            )
        signs[rho] = values.pop()
    return signs


@dataclass(frozen=True)
class InvarianceReport:
    passed: bool
    failures: tuple[tuple[str, str], ...]  # (group element, point) counterexamples


def displacement_sign_invariance_check(
    model: CMFieldModel, phi: CMType, fam: EmbFamilyModel, fixers: set[str]
) -> InvarianceReport:
    """Check sign(g . rho) == sign(rho) for every CM-type-stabilizing g.

    Each fixer must satisfy g(phi) == phi; that hypothesis models group
    elements acting trivially on the relevant fixed field.
    """
    for g in sorted(fixers):
        if conjugate_cm_type(model, phi, g) != phi:
            raise PreconditionError(f"element {g!r} does not stabilize the CM type")
    signs = displacement_sign_family(model, phi, fam)
    failures = []
    for g in sorted(fixers):
        act = fam.action[g]
        for rho in fam.points:
            if signs[act[rho]] != signs[rho]:
                failures.append((g, rho))
    return InvarianceReport(passed=not failures, failures=tuple(failures))


def extend_signature(
    model: CMFieldModel, sig: dict[str, tuple[int, int]]
) -> dict[str, tuple[int, int]]:
    """Extend (r, s) data from a CM type to all embeddings by swapping at conjugates."""
    full = dict(sig)
    for t, (r, s) in sig.items():
        full[model.conj[t]] = (s, r)
    if set(full) != set(model.embeddings):
        raise PreconditionError("signature resolves to a partial map on the embeddings")
    return full


def conjugate_signature(
    model: CMFieldModel, sig: dict[str, tuple[int, int]], g: str
) -> dict[str, tuple[int, int]]:
    """Pull back a signature along g: result[t] = sig_extended[g(t)].

    ``sig`` is given on a CM type (its key set); the result is returned on
    the same CM type.
    """
    phi = CMType(frozenset(sig))
    phi.validate(model)
    full = extend_signature(model, sig)
    perm = model.element(g)
    return {t: full[perm[t]] for t in sig}


# Ready-made model factories used by tests, scripts, and scenario files.


def cyclic_model(d: int) -> CMFieldModel:
    """2d embeddings on a cycle; conjugation is the half-turn, group is the full cycle."""
    if d < 1:
        raise InvalidModelError("need at least one conjugate pair")
    emb = [f"t{i}" for i in range(1, d + 1)] + [f"c{i}" for i in range(1, d + 1)]
    cycle = {emb[i]: emb[(i + 1) % (2 * d)] for i in range(2 * d)}
    conj = {emb[i]: emb[(i + d) % (2 * d)] for i in range(2 * d)}
    group: dict[str, Perm] = {}
    current = {t: t for t in emb}
    for k in range(2 * d):
        group[f"g{k}"] = dict(current)
        current = compose(cycle, current)
    return CMFieldModel(embeddings=tuple(emb), conj=conj, group=group)


def klein_model() -> CMFieldModel:
    """Four embeddings with the Klein four-group acting."""
    emb = ("t1", "t2", "c1", "c2")
    conj = {"t1": "c1", "c1": "t1", "t2": "c2", "c2": "t2"}
    swap = {"t1": "t2", "t2": "t1", "c1": "c2", "c2": "c1"}
    ident = {t: t for t in emb}
    group = {
        "e": ident,
        "c": dict(conj),
        "s": swap,
        "sc": compose(swap, conj),
    }
    return CMFieldModel(embeddings=emb, conj=conj, group=group)


def dihedral_model(d: int) -> CMFieldModel:
    """Dihedral group of order 4d acting on 2d embeddings; conjugation is the half-turn."""
    base = cyclic_model(d)
    emb = base.embeddings
    n = len(emb)
    refl = {emb[i]: emb[(-i) % n] for i in range(n)}
    group = dict(base.group)
    for k in range(n):
        group[f"r{k}"] = compose(base.group[f"g{k}"], refl)
    return CMFieldModel(embeddings=emb, conj=base.conj, group=group)


def regular_family(model: CMFieldModel) -> EmbFamilyModel:
    """Family whose points are the group elements with the left-translation action."""
    names = tuple(sorted(model.group))
    ident = model.name_of({t: t for t in model.embeddings})
    action = {
        g: {h: model.compose_names(g, h) for h in names}
        for g in names
    }
    return EmbFamilyModel(points=names, base=ident, action=action)
