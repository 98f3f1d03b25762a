"""Finite group arithmetic and homomorphism enumeration.

Groups are given by explicit multiplication tables over element indices
0..n-1 with index 0 the identity.  Presets fix a documented element order so
serialized output is byte-stable:

* ``Z/n`` (2 <= n <= 16): residues 0..n-1 in order, addition mod n.
* ``S3``, ``S4``: permutations in lexicographic one-line order,
  ``table[a][b] = a after b`` (i.e. composition ``a(b(x))``).
* ``D4``: rotations ``e, r, r2, r3`` then reflections ``s, rs, r2s, r3s``.
* ``Q8``: ``1, -1, i, -i, j, -j, k, -k``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import (
    NoIdentity,
    NoInverse,
    NonAssociative,
    NotClosed,
    NotLatinSquare,
    SizeLimit,
    UnknownName,
)

DEFAULT_HOM_CANDIDATE_CAP = 10**8


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group presented by its multiplication table.

    Immutable after construction; safe for concurrent use.
    """

    order: int
    table: tuple[tuple[int, ...], ...]
    name: Optional[str] = None
    inverse: tuple[int, ...] = field(default=(), compare=False)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conj(self, h: int, g: int) -> int:
        """h g h^-1."""
        return self.table[self.table[h][g]][self.inverse[h]]

    def elements(self) -> range:
        return range(self.order)

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    def word(self, letters: Iterable[int]) -> int:
        """Product of elements, left to right; empty product is the identity."""
        acc = 0
        for g in letters:
            acc = self.table[acc][g]
        return acc

    def is_abelian(self) -> bool:
        return all(
            self.table[a][b] == self.table[b][a]
            for a in self.elements()
            for b in self.elements()
        )


def group_from_table(table: Sequence[Sequence[int]], name: Optional[str] = None) -> FiniteGroup:
    """Validate a multiplication table and wrap it as a FiniteGroup.

    Index 0 must be a two-sided identity; associativity is checked by the
    full triple loop (intended for n <= 64).
    """
    n = len(table)
    if n == 0:
        raise NoIdentity("empty table has no identity element")
    rows: list[tuple[int, ...]] = []
    for i, row in enumerate(table):
        if len(row) != n:
            raise NotLatinSquare(f"row {i} has length {len(row)}, expected {n}")
        vals = tuple(int(x) for x in row)
        if any(x < 0 or x >= n for x in vals):
            bad = next(x for x in vals if x < 0 or x >= n)
            raise NotLatinSquare(f"row {i} contains out-of-range entry {bad}")
        rows.append(vals)
    tab = tuple(rows)

    for a in range(n):
        if tab[0][a] != a or tab[a][0] != a:
            raise NoIdentity(f"index 0 is not an identity at element {a}")
    for i in range(n):
        if len(set(tab[i])) != n:
            raise NotLatinSquare(f"row {i} is not a permutation of 0..{n - 1}")
        col = tuple(tab[j][i] for j in range(n))
        if len(set(col)) != n:
            raise NotLatinSquare(f"column {i} is not a permutation of 0..{n - 1}")
    inverse = [-1] * n
    for a in range(n):
        for b in range(n):
            if tab[a][b] == 0 and tab[b][a] == 0:
                inverse[a] = b
                break
        if inverse[a] < 0:
            raise NoInverse(f"element {a} has no two-sided inverse")
    for a in range(n):
        for b in range(n):
            tab_ab = tab[a][b]
            row_a = tab[a]
            for c in range(n):
                if tab[tab_ab][c] != row_a[tab[b][c]]:
                    raise NonAssociative(f"associativity fails at triple ({a}, {b}, {c})")
    return FiniteGroup(order=n, table=tab, name=name, inverse=tuple(inverse))


def _cyclic_table(n: int) -> list[list[int]]:
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def _symmetric_table(degree: int) -> list[list[int]]:
    perms = list(itertools.permutations(range(degree)))
    index = {p: i for i, p in enumerate(perms)}
    # identity (0,1,..,degree-1) is lexicographically first, so index 0.
    table = []
    for a in perms:
        row = []
        for b in perms:
            row.append(index[tuple(a[b[x]] for x in range(degree))])
        table.append(row)
    return table


def _dihedral4_table() -> list[list[int]]:
    # element a + 4b  <->  r^a s^b;  s r s = r^-1.
    def mul(x: int, y: int) -> int:
        a1, b1 = x % 4, x // 4
        a2, b2 = y % 4, y // 4
        a = (a1 + (a2 if b1 == 0 else -a2)) % 4
        return a + 4 * ((b1 + b2) % 2)

    return [[mul(x, y) for y in range(8)] for x in range(8)]


def _quaternion_table() -> list[list[int]]:
    # index 2u + s  <->  (-1)^s * unit[u],  units 1, i, j, k.
    unit_mul = {
        (0, 0): (0, 0), (0, 1): (1, 0), (0, 2): (2, 0), (0, 3): (3, 0),
        (1, 0): (1, 0), (1, 1): (0, 1), (1, 2): (3, 0), (1, 3): (2, 1),
        (2, 0): (2, 0), (2, 1): (3, 1), (2, 2): (0, 1), (2, 3): (1, 0),
        (3, 0): (3, 0), (3, 1): (2, 0), (3, 2): (1, 1), (3, 3): (0, 1),
    }

    def mul(x: int, y: int) -> int:
        ux, sx = x // 2, x % 2
        uy, sy = y // 2, y % 2
        u, s = unit_mul[(ux, uy)]
        return 2 * u + (sx + sy + s) % 2

    return [[mul(x, y) for y in range(8)] for x in range(8)]


def preset_group(name: str) -> FiniteGroup:
    """Return a named group with the documented fixed element order."""
    if name.startswith("Z/"):
        try:
            n = int(name[2:])
        except ValueError:
            raise UnknownName(f"unknown group preset {name!r}") from None
        if not 2 <= n <= 16:
            raise UnknownName(f"cyclic preset order {n} outside 2..16")
        return group_from_table(_cyclic_table(n), name=name)
    if name == "S3":
        return group_from_table(_symmetric_table(3), name=name)
    if name == "S4":
        return group_from_table(_symmetric_table(4), name=name)
    if name == "D4":
        return group_from_table(_dihedral4_table(), name=name)
    if name == "Q8":
        return group_from_table(_quaternion_table(), name=name)
    raise UnknownName(f"unknown group preset {name!r}")


PRESET_GROUP_NAMES = tuple(f"Z/{n}" for n in range(2, 17)) + ("S3", "S4", "D4", "Q8")


def conjugacy_classes(group: FiniteGroup) -> list[list[int]]:
    """Partition of element indices into conjugacy classes, each sorted,
    ordered by smallest member."""
    seen = [False] * group.order
    classes: list[list[int]] = []
    for g in group.elements():
        if seen[g]:
            continue
        cls = sorted({group.conj(h, g) for h in group.elements()})
        for x in cls:
            seen[x] = True
        classes.append(cls)
    return classes


def centralizer(group: FiniteGroup, subset: Iterable[int]) -> list[int]:
    """All g commuting with every element of ``subset`` (a subgroup)."""
    elems = list(subset)
    return [
        g
        for g in group.elements()
        if all(group.table[g][s] == group.table[s][g] for s in elems)
    ]


@dataclass(frozen=True)
class Presentation:
    """A finite presentation; relator letters are nonzero integers,
    ``+k`` meaning generator ``k-1`` and ``-k`` its inverse."""

    num_generators: int
    relators: tuple[tuple[int, ...], ...] = ()
    name: Optional[str] = None

    def __post_init__(self) -> None:
        for rel in self.relators:
            for letter in rel:
                if letter == 0 or abs(letter) > self.num_generators:
                    raise ValueError(f"relator letter {letter} out of range")

    def evaluate(self, group: FiniteGroup, images: Sequence[int], relator: Sequence[int]) -> int:
        acc = 0
        for letter in relator:
            g = images[abs(letter) - 1]
            if letter < 0:
                g = group.inv(g)
            acc = group.table[acc][g]
        return acc


def free_presentation(rank: int, name: Optional[str] = None) -> Presentation:
    return Presentation(rank, (), name)


def cyclic_presentation(k: int) -> Presentation:
    return Presentation(1, ((1,) * k,), name=f"Z/{k}")


def abelian_free_presentation(rank: int) -> Presentation:
    """Z^rank: pairwise commutators of the generators."""
    rels = tuple(
        (i + 1, j + 1, -(i + 1), -(j + 1))
        for i in range(rank)
        for j in range(i + 1, rank)
    )
    return Presentation(rank, rels, name=f"Z^{rank}")


def surface_presentation(genus: int) -> Presentation:
    """Fundamental group of the closed oriented genus-g surface."""
    rel: list[int] = []
    for i in range(genus):
        x, y = 2 * i + 1, 2 * i + 2
        rel += [x, y, -x, -y]
    rels = (tuple(rel),) if genus > 0 else ()
    return Presentation(2 * genus, rels, name=f"Sigma_{genus}")


def product_with_z_presentation(base: Presentation) -> Presentation:
    """pi_1(base) x Z: add a generator commuting with every old generator."""
    t = base.num_generators + 1
    rels = list(base.relators)
    for i in range(base.num_generators):
        rels.append((i + 1, t, -(i + 1), -t))
    return Presentation(t, tuple(rels), name=f"{base.name}xZ" if base.name else None)


def enumerate_homs(
    pres: Presentation,
    group: FiniteGroup,
    candidate_cap: int = DEFAULT_HOM_CANDIDATE_CAP,
) -> list[tuple[int, ...]]:
    """All generator-image tuples satisfying every relator, in lexicographic
    order.  Plain backtracking over generator images; raises SizeLimit when
    |G|^num_generators exceeds the candidate cap."""
    k = pres.num_generators
    if group.order**k > candidate_cap:
        raise SizeLimit(
            f"{group.order}^{k} candidate tuples exceed cap {candidate_cap}"
        )
    if k == 0:
        return [()]

    # Relators only involving generators < d can be checked at depth d.
    by_depth: list[list[tuple[int, ...]]] = [[] for _ in range(k + 1)]
    for rel in pres.relators:
        depth = max((abs(s) for s in rel), default=0)
        by_depth[depth].append(rel)

    out: list[tuple[int, ...]] = []
    images: list[int] = []

    def descend() -> None:
        d = len(images)
        if d == k:
            out.append(tuple(images))
            return
        for g in group.elements():
            images.append(g)
            if all(
                pres.evaluate(group, images, rel) == 0 for rel in by_depth[d + 1]
            ):
                descend()
            images.pop()

    if all(pres.evaluate(group, [], rel) == 0 for rel in by_depth[0]):
        descend()
    return out


@dataclass(frozen=True)
class HomClassTable:
    """Conjugation orbits of a set of homomorphisms.

    ``orbits[i]`` lists the member index range into ``homs``; stabilizer
    sizes satisfy orbit size x stabilizer size = |G|.
    """

    homs: tuple[tuple[int, ...], ...]
    orbits: tuple[tuple[int, ...], ...]
    stabilizer_sizes: tuple[int, ...]

    @property
    def representatives(self) -> list[tuple[int, ...]]:
        return [self.homs[orbit[0]] for orbit in self.orbits]

    def measure_total(self) -> Fraction:
        """Sum over orbits of 1 / stabilizer size."""
        return sum((Fraction(1, s) for s in self.stabilizer_sizes), Fraction(0))


def hom_orbits(group: FiniteGroup, homs: Sequence[tuple[int, ...]]) -> HomClassTable:
    """Group homomorphism tuples into pointwise-conjugation orbits."""
    hom_list = [tuple(h) for h in homs]
    index = {h: i for i, h in enumerate(hom_list)}
    if len(index) != len(hom_list):
        raise NotClosed("duplicate homomorphisms in input")
    seen = [False] * len(hom_list)
    orbit_lists: list[tuple[int, ...]] = []
    stab_sizes: list[int] = []
    for i, h in enumerate(hom_list):
        if seen[i]:
            continue
        members = set()
        stab = 0
        for g in group.elements():
            image = tuple(group.conj(g, x) for x in h)
            j = index.get(image)
            if j is None:
                raise NotClosed(
                    f"conjugating hom {h} by {g} leaves the input set"
                )
            members.add(j)
            if image == h:
                stab += 1
        for j in members:
            seen[j] = True
        orbit = tuple(sorted(members))
        orbit_lists.append(orbit)
        stab_sizes.append(stab)
        assert len(orbit) * stab == group.order
    return HomClassTable(tuple(hom_list), tuple(orbit_lists), tuple(stab_sizes))


# -- serialization -----------------------------------------------------------

def group_to_json(group: FiniteGroup) -> dict:
    data: dict = {"order": group.order, "table": [list(r) for r in group.table]}
    if group.name is not None:
        data["name"] = group.name
    return data


def group_from_json(data: dict) -> FiniteGroup:
    return group_from_table(data["table"], name=data.get("name"))


def load_group(path: str) -> FiniteGroup:
    with open(path, "r", encoding="utf-8") as fh:
        return group_from_json(json.load(fh))
