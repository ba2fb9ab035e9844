"""Finite commutative monoids as explicit operation tables.

Provides validation, absorbing/cancellative element detection, congruences
(kernel and image congruences of a homomorphism), quotients, exactness of
two-step sequences, and the Grothendieck group.  Everything is exhaustive:
the monoids in this package have at most a few hundred elements.

Only finite monoids are handled.  Exactness of monoid sequences is known to
behave oddly in the infinite case (the inclusion of the natural numbers into
the integers followed by the zero map satisfies the kernel-equals-image
condition without the inclusion being surjective); nothing of the sort can
occur here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MonoidError


class FiniteCommMonoid:
    """Explicit finite commutative monoid: labels, operation table, identity index."""

    def __init__(self, labels, table, identity: int):
        self.labels = [str(x) for x in labels]
        self.table = [list(row) for row in table]
        self.identity = identity
        if len(set(self.labels)) != len(self.labels):
            raise MonoidError("element labels must be distinct")
        n = len(self.labels)
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise MonoidError("operation table must be square of size |elements|")
        for i, row in enumerate(self.table):
            for j, v in enumerate(row):
                if not (0 <= v < n):
                    raise MonoidError(f"table entry ({i},{j}) out of range: {v}")
        if not (0 <= identity < n):
            raise MonoidError(f"identity index out of range: {identity}")

    @property
    def size(self) -> int:
        return len(self.labels)

    def op(self, i: int, j: int) -> int:
        return self.table[i][j]

    def index_of(self, label: str) -> int:
        return self.labels.index(label)

    def power(self, i: int, k: int) -> int:
        result = self.identity
        for _ in range(k):
            result = self.table[result][i]
        return result

    def __eq__(self, other):
        return (isinstance(other, FiniteCommMonoid)
                and self.labels == other.labels
                and self.table == other.table
                and self.identity == other.identity)

    def __repr__(self):
        return f"FiniteCommMonoid({self.size} elements, identity={self.labels[self.identity]!r})"

    def to_json_dict(self) -> dict:
        return {"elements": list(self.labels),
                "table": [list(row) for row in self.table],
                "identity": self.identity}

    @classmethod
    def from_json_dict(cls, data: dict) -> FiniteCommMonoid:
        return cls(data["elements"], data["table"], data["identity"])


def find_monoid_violation(m: FiniteCommMonoid):
    """First failing axiom as (kind, witness indices), or None."""
    n = m.size
    t = m.table
    e = m.identity
    for x in range(n):
        if t[e][x] != x or t[x][e] != x:
            return ("identity", (e, x))
    for x in range(n):
        for y in range(x + 1, n):
            if t[x][y] != t[y][x]:
                return ("commutativity", (x, y))
    for x in range(n):
        for y in range(n):
            xy = t[x][y]
            for z in range(n):
                if t[xy][z] != t[x][t[y][z]]:
                    return ("associativity", (x, y, z))
    return None


def validate_monoid(m: FiniteCommMonoid) -> bool:
    return find_monoid_violation(m) is None


def require_valid_monoid(m: FiniteCommMonoid) -> None:
    bad = find_monoid_violation(m)
    if bad is not None:
        kind, witness = bad
        labels = tuple(m.labels[i] for i in witness)
        raise MonoidError(f"{kind} fails at {labels}")


def find_absorbing(m: FiniteCommMonoid):
    """Index of the absorbing element, or None; a monoid has at most one."""
    for z in range(m.size):
        if all(m.table[z][x] == z for x in range(m.size)):
            return z
    return None


def cancellative_elements(m: FiniteCommMonoid) -> list[int]:
    """Indices x such that x*y = x*z forces y = z."""
    out = []
    for x in range(m.size):
        row = m.table[x]
        if len(set(row)) == m.size:
            out.append(x)
    return out


def submonoid(m: FiniteCommMonoid, indices) -> FiniteCommMonoid:
    """Restrict to a subset closed under the operation and containing the identity."""
    indices = sorted(indices)
    if m.identity not in indices:
        raise MonoidError("subset does not contain the identity")
    pos = {old: new for new, old in enumerate(indices)}
    table = []
    for i in indices:
        row = []
        for j in indices:
            v = m.table[i][j]
            if v not in pos:
                raise MonoidError(
                    f"subset not closed: {m.labels[i]}*{m.labels[j]} = {m.labels[v]}"
                )
            row.append(pos[v])
        table.append(row)
    return FiniteCommMonoid([m.labels[i] for i in indices], table, pos[m.identity])


class MonoidHom:
    """Map between finite commutative monoids given by an index table."""

    def __init__(self, source: FiniteCommMonoid, target: FiniteCommMonoid, mapping):
        self.source = source
        self.target = target
        self.mapping = list(mapping)
        if len(self.mapping) != source.size:
            raise MonoidError("mapping must assign every source element")

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    def find_violation(self):
        f = self.mapping
        if f[self.source.identity] != self.target.identity:
            return ("identity", (self.source.identity,))
        for x in range(self.source.size):
            for y in range(self.source.size):
                if f[self.source.table[x][y]] != self.target.table[f[x]][f[y]]:
                    return ("multiplicativity", (x, y))
        return None

    def is_valid(self) -> bool:
        return self.find_violation() is None

    def is_injective(self) -> bool:
        return len(set(self.mapping)) == self.source.size

    def is_surjective(self) -> bool:
        return len(set(self.mapping)) == self.target.size

    @classmethod
    def from_label_map(cls, source, target, fn) -> MonoidHom:
        return cls(source, target,
                   [target.index_of(fn(lbl)) for lbl in source.labels])


class Congruence:
    """Equivalence relation on a monoid compatible with the operation.

    Stored as class ids per element index; class ids are assigned in order of
    each class's least member, so the representation is canonical.
    """

    def __init__(self, monoid: FiniteCommMonoid, class_of):
        self.monoid = monoid
        self.class_of = _normalize_class_ids(list(class_of))

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.num_classes)]
        for i, c in enumerate(self.class_of):
            out[c].append(i)
        return out

    @property
    def num_classes(self) -> int:
        return max(self.class_of) + 1 if self.class_of else 0

    def same(self, i: int, j: int) -> bool:
        return self.class_of[i] == self.class_of[j]

    def __eq__(self, other):
        return (isinstance(other, Congruence)
                and self.monoid == other.monoid
                and self.class_of == other.class_of)

    def find_violation(self):
        """Pair of pairs where [x][z] -> [xz] fails to be well-defined, or None."""
        m = self.monoid
        reps = [cls[0] for cls in self.classes()]
        for x in range(m.size):
            for z in range(m.size):
                expected = self.class_of[m.table[reps[self.class_of[x]]][reps[self.class_of[z]]]]
                if self.class_of[m.table[x][z]] != expected:
                    return (x, z)
        return None

    def is_congruence(self) -> bool:
        return self.find_violation() is None


def _normalize_class_ids(class_of: list[int]) -> list[int]:
    remap: dict[int, int] = {}
    out = []
    for c in class_of:
        if c not in remap:
            remap[c] = len(remap)
        out.append(remap[c])
    return out


def congruence_from_pairs(monoid: FiniteCommMonoid, pairs) -> Congruence:
    """Smallest congruence containing the given pairs (fixed-point closure)."""
    parent = list(range(monoid.size))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
            return True
        return False

    for i, j in pairs:
        union(i, j)
    changed = True
    while changed:
        changed = False
        for x in range(monoid.size):
            for y in range(x + 1, monoid.size):
                if find(x) != find(y):
                    continue
                for z in range(monoid.size):
                    if union(monoid.table[x][z], monoid.table[y][z]):
                        changed = True
    return Congruence(monoid, [find(i) for i in range(monoid.size)])


def kernel_congruence(f: MonoidHom) -> Congruence:
    """Partition of the source by equal image."""
    return Congruence(f.source, list(f.mapping))


def image_congruence(f: MonoidHom) -> Congruence:
    """Congruence on the target: z ~ w iff f(x)z = f(y)w for some source x, y."""
    b = f.target
    image = sorted(set(f.mapping))

    def related(z, w):
        return any(b.table[fx][z] == b.table[fy][w]
                   for fx in image for fy in image)

    class_of = [-1] * b.size
    reps: list[int] = []
    for z in range(b.size):
        for c, r in enumerate(reps):
            if related(r, z):
                class_of[z] = c
                break
        else:
            class_of[z] = len(reps)
            reps.append(z)
    cong = Congruence(b, class_of)
    # The relation is an equivalence for commutative monoids; verify rather
    # than assume, since the partition above was built greedily.
    for z in range(b.size):
        for w in range(b.size):
            if related(z, w) != cong.same(z, w):
                raise MonoidError(
                    f"image relation is not transitive at ({b.labels[z]}, {b.labels[w]})"
                )
    return cong


def quotient_monoid(monoid: FiniteCommMonoid, cong: Congruence) -> FiniteCommMonoid:
    """Quotient by a congruence; class labels are the least members' labels."""
    if cong.monoid != monoid:
        raise MonoidError("congruence belongs to a different monoid")
    bad = cong.find_violation()
    if bad is not None:
        x, z = bad
        raise MonoidError(
            f"partition is not a congruence: product ill-defined at "
            f"({monoid.labels[x]}, {monoid.labels[z]})"
        )
    classes = cong.classes()
    reps = [cls[0] for cls in classes]
    labels = [monoid.labels[r] for r in reps]
    table = [[cong.class_of[monoid.table[ri][rj]] for rj in reps] for ri in reps]
    return FiniteCommMonoid(labels, table, cong.class_of[monoid.identity])


def quotient_map(monoid: FiniteCommMonoid, cong: Congruence) -> MonoidHom:
    return MonoidHom(monoid, quotient_monoid(monoid, cong), list(cong.class_of))


def is_exact(f: MonoidHom, g: MonoidHom) -> bool:
    """Exactness of source(f) -> target(f) = source(g) -> target(g).

    Holds iff f is injective, g is surjective, and the kernel congruence of g
    equals the image congruence of f.
    """
    if f.target != g.source:
        raise MonoidError("sequence not composable: target(f) != source(g)")
    if not f.is_injective() or not g.is_surjective():
        return False
    return kernel_congruence(g) == image_congruence(f)


@dataclass
class AbelianGroup:
    """A finite abelian group with its invariant-factor decomposition.

    ``monoid`` is the group table, ``invariant_factors`` is the ascending
    chain d1 | d2 | ... (empty for the trivial group), and ``universal_map``
    sends each element of the original monoid to its class.
    """

    monoid: FiniteCommMonoid
    invariant_factors: list[int]
    universal_map: list[int]

    @property
    def order(self) -> int:
        return self.monoid.size

    def is_trivial(self) -> bool:
        return self.monoid.size == 1


def grothendieck_group(m: FiniteCommMonoid) -> AbelianGroup:
    """Universal group of a finite commutative monoid.

    Built as pairs (x, x') modulo (x, x') ~ (y, y') iff x*y'*z = x'*y*z has a
    solution z; the class of (x, 1) is the image of x.  If the monoid has an
    absorbing element the result is trivial.
    """
    n = m.size
    t = m.table
    pairs = [(x, xp) for x in range(n) for xp in range(n)]

    def related(p, q):
        x, xp = p
        y, yp = q
        a = t[x][yp]
        b = t[xp][y]
        return any(t[a][z] == t[b][z] for z in range(n))

    class_of: dict[tuple[int, int], int] = {}
    reps: list[tuple[int, int]] = []
    for p in pairs:
        for c, r in enumerate(reps):
            if related(r, p):
                class_of[p] = c
                break
        else:
            class_of[p] = len(reps)
            reps.append(p)

    size = len(reps)
    labels = [f"[{m.labels[x]},{m.labels[xp]}]" for x, xp in reps]
    table = []
    for x, xp in reps:
        row = []
        for y, yp in reps:
            prod = (t[x][y], t[xp][yp])
            row.append(class_of[prod])
        table.append(row)
    e = class_of[(m.identity, m.identity)]
    group = FiniteCommMonoid(labels, table, e)
    # Quotient op must not depend on representatives; verify via the hom rule.
    for p in pairs:
        for q in pairs:
            prod = (t[p[0]][q[0]], t[p[1]][q[1]])
            if class_of[prod] != table[class_of[p]][class_of[q]]:
                raise MonoidError("Grothendieck relation is not a congruence")
    factors = _invariant_factors(group)
    universal = [class_of[(x, m.identity)] for x in range(n)]
    return AbelianGroup(group, factors, universal)


def _element_order(m: FiniteCommMonoid, x: int) -> int:
    k = 1
    acc = x
    while acc != m.identity:
        acc = m.table[acc][x]
        k += 1
    return k


def _invariant_factors(group: FiniteCommMonoid) -> list[int]:
    """Invariant factors by repeatedly splitting off a maximal-order cyclic piece."""
    if group.size == 1:
        return []
    orders = [_element_order(group, x) for x in range(group.size)]
    top = max(orders)
    gen = orders.index(top)
    # Cosets of the cyclic subgroup generated by `gen`.
    cyclic = set()
    acc = group.identity
    for _ in range(top):
        cyclic.add(acc)
        acc = group.table[acc][gen]
    seen: dict[int, int] = {}
    reps: list[int] = []
    for x in range(group.size):
        if x in seen:
            continue
        c = len(reps)
        reps.append(x)
        for h in cyclic:
            seen[group.table[x][h]] = c
    table = [[seen[group.table[i][j]] for j in reps] for i in reps]
    quotient = FiniteCommMonoid([str(i) for i in range(len(reps))], table,
                                seen[group.identity])
    return _invariant_factors(quotient) + [top]
