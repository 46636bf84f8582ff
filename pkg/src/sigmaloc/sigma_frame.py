"""Sigma-frames, desk scale.

Two realizations live here.  FiniteDistributiveLattice is the oracle
workhorse: a validated finite distributive lattice, where countable
joins collapse to finite ones, so the sigma-frame laws are checkable by
exhaustive sweep.  The free_* functions realize the free sigma-frame on
a countable generator set as enumerations of generators together with a
distinguished TOP_GENERATOR that absorbs everything above it; the
finite quotient of that realization (free_lattice) is what the tests
compare against.
"""

from dataclasses import dataclass
from typing import Dict

from .enumeration import (
    Enumeration,
    SemiDecidableEquality,
    ext_equal_finite,
    union_countable,
)
from .pairing import pair_decode
from .semidecision import SemiDecision, from_boolean


class LatticeError(Exception):
    def __init__(self, message, witnesses=()):
        super().__init__(message)
        self.witnesses = tuple(witnesses)


class NotAPartialOrder(LatticeError):
    pass


class MissingMeetOrJoin(LatticeError):
    pass


class NotDistributive(LatticeError):
    pass


class FiniteDistributiveLattice:
    """Finite distributive lattice with precomputed operation tables.

    Build one with validate_lattice or lattice_from_leq_pairs; the raw
    constructor trusts its tables.
    """

    def __init__(self, elements, leq_matrix, meet_table, join_table,
                 bottom_index, top_index):
        self.elements = list(elements)
        self._index = {e: i for i, e in enumerate(self.elements)}
        self._leq = leq_matrix
        self._meet = meet_table
        self._join = join_table
        self.bottom = self.elements[bottom_index]
        self.top = self.elements[top_index]

    def __len__(self):
        return len(self.elements)

    def index(self, x):
        try:
            return self._index[x]
        except KeyError:
            raise LatticeError("not a lattice element: %r" % (x,), (x,))

    def leq(self, x, y):
        return self._leq[self.index(x)][self.index(y)]

    def meet(self, x, y):
        return self.elements[self._meet[self.index(x)][self.index(y)]]

    def join(self, x, y):
        return self.elements[self._join[self.index(x)][self.index(y)]]

    def meet_all(self, xs):
        acc = self.top
        for x in xs:
            acc = self.meet(acc, x)
        return acc

    def join_all(self, xs):
        acc = self.bottom
        for x in xs:
            acc = self.join(acc, x)
        return acc


def _as_matrix(elements, leq):
    n = len(elements)
    if callable(leq):
        return [[bool(leq(elements[i], elements[j])) for j in range(n)]
                for i in range(n)]
    return [[bool(leq[i][j]) for j in range(n)] for i in range(n)]


def validate_lattice(elements, leq):
    """Check order and lattice laws, returning the validated lattice.

    leq is a callable on elements or a square boolean matrix in element
    order.  Raises NotAPartialOrder, MissingMeetOrJoin or
    NotDistributive with the first offending elements (element order)
    as witnesses.
    """
    elements = list(elements)
    if not elements:
        raise LatticeError("empty carrier")
    seen = set()
    for e in elements:
        if e in seen:
            raise LatticeError("duplicate element", (e,))
        seen.add(e)
    n = len(elements)
    m = _as_matrix(elements, leq)

    for i in range(n):
        if not m[i][i]:
            raise NotAPartialOrder("leq is not reflexive", (elements[i],))
    for i in range(n):
        for j in range(n):
            if i != j and m[i][j] and m[j][i]:
                raise NotAPartialOrder(
                    "leq is not antisymmetric", (elements[i], elements[j]))
    for i in range(n):
        for j in range(n):
            if not m[i][j]:
                continue
            for k in range(n):
                if m[j][k] and not m[i][k]:
                    raise NotAPartialOrder(
                        "leq is not transitive",
                        (elements[i], elements[j], elements[k]))

    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            lower = [k for k in range(n) if m[k][i] and m[k][j]]
            greatest = [g for g in lower if all(m[k][g] for k in lower)]
            if len(greatest) != 1:
                raise MissingMeetOrJoin(
                    "no meet", (elements[i], elements[j]))
            meet[i][j] = greatest[0]
            upper = [k for k in range(n) if m[i][k] and m[j][k]]
            least = [l for l in upper if all(m[l][k] for k in upper)]
            if len(least) != 1:
                raise MissingMeetOrJoin(
                    "no join", (elements[i], elements[j]))
            join[i][j] = least[0]

    bottom = 0
    top = 0
    for i in range(n):
        bottom = meet[bottom][i]
        top = join[top][i]

    for i in range(n):
        for j in range(n):
            for k in range(n):
                if meet[i][join[j][k]] != join[meet[i][j]][meet[i][k]]:
                    raise NotDistributive(
                        "distributivity fails",
                        (elements[i], elements[j], elements[k]))

    return FiniteDistributiveLattice(elements, m, meet, join, bottom, top)


def lattice_from_leq_pairs(elements, pairs):
    """Lattice from generating order pairs (x below y).

    Takes the reflexive-transitive closure of the pairs, then validates
    lattice laws on the result.
    """
    elements = list(elements)
    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    m = [[i == j for j in range(n)] for i in range(n)]
    for x, y in pairs:
        if x not in index:
            raise LatticeError("unknown element in order pair: %r" % (x,), (x,))
        if y not in index:
            raise LatticeError("unknown element in order pair: %r" % (y,), (y,))
        m[index[x]][index[y]] = True
    for k in range(n):
        for i in range(n):
            if m[i][k]:
                row_k = m[k]
                row_i = m[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    return validate_lattice(elements, m)


def find_isomorphism(first, second):
    """Order isomorphism between two finite lattices, or None.

    Backtracking with a (strictly-below count, strictly-above count)
    signature filter; returns a dict element-of-first -> element-of-second.
    """
    if len(first) != len(second):
        return None

    def signature(lat, x):
        down = sum(1 for y in lat.elements if lat.leq(y, x))
        up = sum(1 for y in lat.elements if lat.leq(x, y))
        return down, up

    sig1 = {x: signature(first, x) for x in first.elements}
    sig2 = {y: signature(second, y) for y in second.elements}
    order = sorted(first.elements, key=lambda x: (sig1[x], str(x)))
    mapping = {}
    used = set()

    def consistent(x, y):
        for a, b in mapping.items():
            if first.leq(a, x) != second.leq(b, y):
                return False
            if first.leq(x, a) != second.leq(y, b):
                return False
        return True

    def place(i):
        if i == len(order):
            return True
        x = order[i]
        for y in second.elements:
            if y in used or sig2[y] != sig1[x]:
                continue
            if not consistent(x, y):
                continue
            mapping[x] = y
            used.add(y)
            if place(i + 1):
                return True
            del mapping[x]
            used.discard(y)
        return False

    if place(0):
        return dict(mapping)
    return None


@dataclass(frozen=True)
class SigmaFrameHom:
    source: FiniteDistributiveLattice
    target: FiniteDistributiveLattice
    mapping: Dict[object, object]

    def __call__(self, x):
        return self.mapping[x]


def check_sigma_hom(hom):
    """Does the mapping preserve top, bottom, meets and joins?

    On finite lattices countable joins reduce to binary ones, so this
    is the whole sigma-frame homomorphism condition.  Returns a
    CheckReport whose witnesses name the first failure in element
    order.
    """
    from .reports import failed, passed

    src, tgt, f = hom.source, hom.target, hom.mapping
    for x in src.elements:
        if x not in f:
            return failed("unmapped element", (x,))
        if f[x] not in tgt._index:
            return failed("image outside target", (x, f[x]))
    if f[src.top] != tgt.top:
        return failed("top not preserved", (src.top, f[src.top]))
    if f[src.bottom] != tgt.bottom:
        return failed("bottom not preserved", (src.bottom, f[src.bottom]))
    for x in src.elements:
        for y in src.elements:
            if f[src.meet(x, y)] != tgt.meet(f[x], f[y]):
                return failed("meet not preserved", (x, y))
    for x in src.elements:
        for y in src.elements:
            if f[src.join(x, y)] != tgt.join(f[x], f[y]):
                return failed("join not preserved", (x, y))
    return passed("sigma-frame homomorphism")


class _TopGenerator:
    __slots__ = ()

    def __repr__(self):
        return "TOP"


TOP_GENERATOR = _TopGenerator()


def free_generator(a):
    """The free element carrying the single generator a."""
    return Enumeration.from_iterable((a,))


def free_element(values):
    return Enumeration.from_iterable(values)


def free_top():
    return free_generator(TOP_GENERATOR)


def free_bottom():
    return Enumeration.empty()


def extend_equality_to_free(eq):
    """Lift generator equality to the carrier with TOP_GENERATOR added."""

    def psi(x, y):
        x_top = x is TOP_GENERATOR
        y_top = y is TOP_GENERATOR
        if x_top or y_top:
            return from_boolean(x_top and y_top)
        return eq.psi(x, y)

    return SemiDecidableEquality(psi, max_confirm_budget=eq.max_confirm_budget)


def free_join(family):
    """Countable join of free elements: the union of their generators."""
    return union_countable(family, lambda e: e)


def free_meet(e1, e2, eq):
    """Binary meet of free elements by dovetailing.

    Index k decodes to (n, (m, b)).  TOP_GENERATOR is neutral: against
    it the other side's generator goes straight through; otherwise a
    generator survives only when it eq-confirms across both sides
    within budget b.  Distinct generators meet to bottom, which is what
    makes the realization free only over disjointness-respecting
    assignments.
    """

    def alpha(k):
        from .enumeration import BLANK

        n, rest = pair_decode(k)
        m, b = pair_decode(rest)
        x = e1.alpha(n)
        y = e2.alpha(m)
        if x is BLANK or y is BLANK:
            return BLANK
        if x is TOP_GENERATOR:
            return y
        if y is TOP_GENERATOR:
            return x
        return x if eq.psi(x, y).confirmed(b) else BLANK

    bound = None
    if (
        e1.bound is not None
        and e2.bound is not None
        and eq.max_confirm_budget is not None
    ):
        from .pairing import pair_encode

        bound = pair_encode(e1.bound, pair_encode(e2.bound, eq.max_confirm_budget))
    return Enumeration(alpha, bound=bound)


def free_class_of(e):
    """The finite equivalence class of a bounded free element.

    Any set containing TOP_GENERATOR denotes the top, so those all
    collapse onto the one-element class {TOP_GENERATOR}.
    """
    values = e.elements()
    if any(v is TOP_GENERATOR for v in values):
        return frozenset({TOP_GENERATOR})
    return frozenset(values)


def free_ext_equal(e1, e2):
    """Extensional equality of free elements, top classes glued."""
    top1 = any(v is TOP_GENERATOR for v in e1.elements())
    top2 = any(v is TOP_GENERATOR for v in e2.elements())
    if top1 or top2:
        return top1 and top2
    return ext_equal_finite(e1, e2)


def free_lattice(generators):
    """The finite realization of the free sigma-frame on few generators.

    Elements are the subsets of the generator set plus the glued top
    class.  Validated on construction.
    """
    generators = list(generators)
    subsets = []
    for mask in range(1 << len(generators)):
        subsets.append(frozenset(
            g for i, g in enumerate(generators) if mask >> i & 1))
    subsets.sort(key=lambda s: (len(s), sorted(str(g) for g in s)))
    top_class = frozenset({TOP_GENERATOR})
    elements = subsets + [top_class]

    def leq(a, b):
        if TOP_GENERATOR in b:
            return True
        if TOP_GENERATOR in a:
            return False
        return a <= b

    return validate_lattice(elements, leq)


def respects_disjointness(lattice, assignment):
    """Do distinct generators land on disjoint lattice elements?"""
    values = list(assignment.items())
    for i, (a, x) in enumerate(values):
        for b, y in values[i + 1:]:
            if a != b and lattice.meet(x, y) != lattice.bottom:
                return False
    return True


def extend_to_free(generators, lattice, assignment):
    """The canonical extension of a generator assignment.

    Returns the map h sending a bounded free element to the join, in
    the lattice, of the assignment's images of its generators; the top
    generator goes to the lattice top.  h agrees with the assignment
    on generator singletons by construction.
    """
    assignment = dict(assignment)
    for a in generators:
        if a not in assignment:
            raise LatticeError("assignment misses generator %r" % (a,), (a,))

    def h(e):
        cls = free_class_of(e)
        if TOP_GENERATOR in cls:
            return lattice.top
        return lattice.join_all(assignment[a] for a in sorted(cls, key=str))

    return h


def extend_to_free_table(generators, lattice, assignment):
    """extend_to_free tabulated on the finite realization.

    Returns the SigmaFrameHom from free_lattice(generators) into the
    lattice; it is an actual homomorphism exactly when the assignment
    respects disjointness.
    """
    source = free_lattice(generators)
    h = extend_to_free(generators, lattice, assignment)
    mapping = {}
    for cls in source.elements:
        mapping[cls] = h(free_element(sorted(cls, key=str)))
    return SigmaFrameHom(source, lattice, mapping)
