"""Finite groups and skew braces as validated Cayley tables.

Carrier elements are plain indices 0..n-1.  Tables are read-only numpy
integer arrays, which keeps the exhaustive axiom sweeps (order^3 triples)
vectorized and sub-second up to the catalog maximum of order 48.
Validation is eager: no constructor hands out an unvalidated value.
"""

from __future__ import annotations

from itertools import permutations

import numpy as np

from .errors import (CompatibilityError, IdentityMismatchError, MorphismError,
                     NotAGroupError, ValidationError)

ORDER_CAP = 200


def _as_table(table) -> np.ndarray:
    arr = np.array(table, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValidationError(f"table must be square, got shape {arr.shape}")
    if arr.shape[0] > ORDER_CAP:
        raise ValidationError(f"order {arr.shape[0]} exceeds cap {ORDER_CAP}")
    return arr


def _first_bad_triple(mism) -> tuple[int, int, int]:
    a, b, c = np.argwhere(mism)[0]
    return int(a), int(b), int(c)


class FiniteGroup:
    """A finite group as an order x order Cayley table on indices."""

    __slots__ = ("table", "order", "identity", "inverses")

    def __init__(self, table):
        table = _as_table(table)
        n = table.shape[0]
        if table.min() < 0 or table.max() >= n:
            raise NotAGroupError("table entries out of range")
        rng = np.arange(n)
        for a in range(n):
            if sorted(table[a]) != list(rng):
                raise NotAGroupError(f"row {a} is not a permutation (not a Latin square)",
                                     witness=(a,))
            if sorted(table[:, a]) != list(rng):
                raise NotAGroupError(f"column {a} is not a permutation (not a Latin square)",
                                     witness=(a,))
        # associativity: (ab)c == a(bc) for all triples
        lhs = table[table, :]          # [a,b,c] -> (ab)c
        rhs = table[:, table]          # [a,b,c] -> a(bc)
        mism = lhs != rhs
        if mism.any():
            triple = _first_bad_triple(mism)
            raise NotAGroupError(f"associativity fails at triple {triple}",
                                 witness=triple)
        ident = [e for e in range(n)
                 if (table[e] == rng).all() and (table[:, e] == rng).all()]
        if not ident:
            raise NotAGroupError("no two-sided identity")
        e = ident[0]
        inverses = np.empty(n, dtype=np.int64)
        for a in range(n):
            bs = np.nonzero(table[a] == e)[0]
            if len(bs) != 1 or table[bs[0], a] != e:
                raise NotAGroupError(f"element {a} has no two-sided inverse",
                                     witness=(a,))
            inverses[a] = bs[0]
        table.setflags(write=False)
        inverses.setflags(write=False)
        self.table = table
        self.order = n
        self.identity = e
        self.inverses = inverses

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def conj(self, a: int, b: int) -> int:
        """a b a^-1."""
        return int(self.table[self.table[a, b], self.inverses[a]])

    def commutator(self, a: int, b: int) -> int:
        """a b a^-1 b^-1."""
        return int(self.table[self.conj(a, b), self.inverses[b]])

    # ---------------------------------------------------------- subgroups

    def subgroup_generated(self, gens) -> tuple[int, ...]:
        cur = {self.identity}
        cur.update(int(g) for g in gens)
        cur.update(self.inv(g) for g in gens)
        frontier = set(cur)
        while frontier:
            new = set()
            for a in frontier:
                for b in cur:
                    new.add(self.mul(a, b))
                    new.add(self.mul(b, a))
            new -= cur
            cur |= new
            frontier = new
        return tuple(sorted(cur))

    def normal_closure(self, gens) -> tuple[int, ...]:
        gens = set(int(g) for g in gens)
        while True:
            sub = set(self.subgroup_generated(gens))
            conj = {self.conj(a, x) for a in range(self.order) for x in sub}
            if conj <= sub:
                return tuple(sorted(sub))
            gens = sub | conj

    def center(self) -> tuple[int, ...]:
        t = self.table
        central = np.nonzero((t == t.T).all(axis=1))[0]
        return tuple(int(g) for g in central)

    def is_subgroup(self, carrier) -> bool:
        s = set(carrier)
        if self.identity not in s:
            return False
        return all(self.mul(a, b) in s and self.inv(a) in s
                   for a in s for b in s)

    def is_normal(self, carrier) -> bool:
        s = set(carrier)
        return self.is_subgroup(s) and all(
            self.conj(a, x) in s for a in range(self.order) for x in s)

    def all_subgroups(self) -> list[tuple[int, ...]]:
        """Every subgroup, by closure BFS from the trivial subgroup."""
        trivial = (self.identity,)
        found = {trivial}
        frontier = [trivial]
        while frontier:
            nxt = []
            for sub in frontier:
                inside = set(sub)
                for g in range(self.order):
                    if g in inside:
                        continue
                    bigger = self.subgroup_generated(inside | {g})
                    if bigger not in found:
                        found.add(bigger)
                        nxt.append(bigger)
            frontier = nxt
        return sorted(found, key=lambda s: (len(s), s))

    def quotient(self, carrier) -> tuple["FiniteGroup", list[int]]:
        """Quotient by a normal subgroup; returns (group, projection)."""
        if not self.is_normal(carrier):
            raise ValidationError(f"subgroup {tuple(carrier)} is not normal")
        n = self.order
        rep = [None] * n
        for g in range(n):
            rep[g] = min(self.mul(g, x) for x in carrier)
        reps = sorted(set(rep))
        coset_of = {r: i for i, r in enumerate(reps)}
        proj = [coset_of[rep[g]] for g in range(n)]
        k = len(reps)
        table = [[coset_of[rep[self.mul(reps[i], reps[j])]] for j in range(k)]
                 for i in range(k)]
        return FiniteGroup(table), proj

    def __eq__(self, other):
        return (isinstance(other, FiniteGroup)
                and self.order == other.order
                and (self.table == other.table).all())

    def __hash__(self):
        return hash((self.order, self.table.tobytes()))

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"


# ------------------------------------------------------ group constructors

def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise ValidationError("order must be positive")
    idx = np.arange(n)
    return FiniteGroup((idx[:, None] + idx[None, :]) % n)


def symmetric_group(n: int) -> FiniteGroup:
    """S_n on tuples in lexicographic order; (p*q)[i] = p[q[i]]."""
    if n > 4:
        raise ValidationError("symmetric_group supports n <= 4")
    elems = sorted(permutations(range(n)))
    index = {p: i for i, p in enumerate(elems)}
    table = [[index[tuple(p[q[i]] for i in range(n))] for q in elems]
             for p in elems]
    return FiniteGroup(table)


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n; index r + n*s for rot^r flip^s."""
    if n < 1:
        raise ValidationError("order must be positive")

    def mul(x, y):
        r1, s1 = x % n, x // n
        r2, s2 = y % n, y // n
        r = (r1 + (r2 if s1 == 0 else -r2)) % n
        return r + n * ((s1 + s2) % 2)

    return FiniteGroup([[mul(x, y) for y in range(2 * n)] for x in range(2 * n)])


def product_group(g1: FiniteGroup, g2: FiniteGroup) -> FiniteGroup:
    n1, n2 = g1.order, g2.order
    if n1 * n2 > ORDER_CAP:
        raise ValidationError(f"product order {n1 * n2} exceeds cap {ORDER_CAP}")
    a1, a2 = np.divmod(np.arange(n1 * n2), n2)
    return FiniteGroup(g1.table[np.ix_(a1, a1)] * n2 + g2.table[np.ix_(a2, a2)])


# ---------------------------------------------------------------- braces

class SkewBrace:
    """Two validated group tables on one carrier, sharing an identity,
    with the compatibility law a o (b.c) = (a o b) . a^-1 . (a o c)."""

    __slots__ = ("dot", "circ", "order", "identity",
                 "lambda_table", "star_table")

    def __init__(self, dot: FiniteGroup, circ: FiniteGroup):
        if dot.order != circ.order:
            raise ValidationError("the two groups have different carriers")
        if dot.identity != circ.identity:
            raise IdentityMismatchError(
                f"identities differ: dot has {dot.identity}, circ has {circ.identity}")
        n = dot.order
        d, o = dot.table, circ.table
        dinv = dot.inverses
        lhs = o[:, d]                                    # a o (b.c)
        u = d[o, dinv[:, None]]                          # (a o b) . a^-1
        rhs = d[u[:, :, None], o[:, None, :]]            # ... . (a o c)
        mism = lhs != rhs
        if mism.any():
            triple = _first_bad_triple(mism)
            raise CompatibilityError(f"compatibility fails at triple {triple}",
                                     witness=triple)
        lam = d[dinv[:, None], o]                        # a^-1 . (a o b)
        star = d[lam, dinv[None, :]]                     # lambda_a(b) . b^-1
        lam.setflags(write=False)
        star.setflags(write=False)
        self.dot = dot
        self.circ = circ
        self.order = n
        self.identity = dot.identity
        self.lambda_table = lam
        self.star_table = star

    def lambda_act(self, a: int, b: int) -> int:
        return int(self.lambda_table[a, b])

    def star_set(self, a: int, b: int) -> int:
        return int(self.star_table[a, b])

    def star_image(self) -> tuple[int, ...]:
        return tuple(int(x) for x in sorted(np.unique(self.star_table)))

    def is_trivial(self) -> bool:
        return bool((self.dot.table == self.circ.table).all())

    def __eq__(self, other):
        return (isinstance(other, SkewBrace)
                and self.dot == other.dot and self.circ == other.circ)

    def __hash__(self):
        return hash((self.dot, self.circ))

    def __repr__(self):
        return f"SkewBrace(order={self.order})"


def validate_skew_brace(dot_table, circ_table, identity: int | None = None) -> SkewBrace:
    """Validate both tables and the compatibility law; raises with the
    first violated axiom and its witnessing tuple."""
    dot = FiniteGroup(dot_table)
    circ = FiniteGroup(circ_table)
    if identity is not None and (dot.identity != identity or circ.identity != identity):
        raise IdentityMismatchError(
            f"declared identity {identity} but tables have "
            f"dot={dot.identity}, circ={circ.identity}")
    return SkewBrace(dot, circ)


def trivial_brace(g: FiniteGroup) -> SkewBrace:
    return SkewBrace(g, FiniteGroup(g.table.copy()))


def opposite_brace(g: FiniteGroup) -> SkewBrace:
    """a o b := b.a; the classical almost-trivial skew brace."""
    return SkewBrace(g, FiniteGroup(g.table.T.copy()))


def radical_c4_brace() -> SkewBrace:
    """Carrier Z/4 with a.b = a+b and a o b = a+b+2ab."""
    idx = np.arange(4)
    circ = (idx[:, None] + idx[None, :] + 2 * idx[:, None] * idx[None, :]) % 4
    return SkewBrace(cyclic_group(4), FiniteGroup(circ))


def direct_product(b1: SkewBrace, b2: SkewBrace) -> SkewBrace:
    return SkewBrace(product_group(b1.dot, b2.dot),
                     product_group(b1.circ, b2.circ))


# -------------------------------------------------------------- morphisms

class BraceMap:
    """A set map between brace carriers, validated as a homomorphism for
    both products (hence a brace morphism on group-likes)."""

    __slots__ = ("source", "target", "images")

    def __init__(self, source: SkewBrace, target: SkewBrace, images):
        images = tuple(int(i) for i in images)
        if len(images) != source.order:
            raise MorphismError(
                f"image array has length {len(images)}, carrier has {source.order}")
        if any(not 0 <= i < target.order for i in images):
            raise MorphismError("image index out of range")
        img = np.asarray(images, dtype=np.int64)
        if images[source.identity] != target.identity:
            raise MorphismError("identity is not preserved",
                                witness=(source.identity,))
        for name, ts, tt in (("dot", source.dot.table, target.dot.table),
                             ("circ", source.circ.table, target.circ.table)):
            mism = img[ts] != tt[img[:, None], img[None, :]]
            if mism.any():
                a, b = np.argwhere(mism)[0]
                raise MorphismError(
                    f"not a {name}-homomorphism at pair ({int(a)}, {int(b)})",
                    witness=(int(a), int(b)))
        self.source = source
        self.target = target
        self.images = images

    def __call__(self, g: int) -> int:
        return self.images[g]

    def kernel_set(self) -> tuple[int, ...]:
        e = self.target.identity
        return tuple(g for g in range(self.source.order) if self.images[g] == e)

    def image_set(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.images)))

    def is_surjective(self) -> bool:
        return len(set(self.images)) == self.target.order

    def __eq__(self, other):
        return (isinstance(other, BraceMap) and self.source == other.source
                and self.target == other.target and self.images == other.images)

    def __repr__(self):
        return f"BraceMap(order {self.source.order} -> {self.target.order})"


def is_brace_morphism(source: SkewBrace, target: SkewBrace, images) -> bool:
    try:
        BraceMap(source, target, images)
        return True
    except MorphismError:
        return False
