"""Overtness, positivity, congruences, and the Booleanization quotient.

Everything here runs on validated finite lattices (or finite cover
bases), where all three overt laws, the overlap laws, and congruence
compatibility are decidable by exhaustive sweep.  The Booleanization
congruence relates x and y when no test element z tells them apart
through positivity of the meet; its quotient is the smallest strongly
dense quotient, and smallest_strongly_dense_oracle re-derives that
minimum by brute force over all congruences so the two can be compared
on every instance.
"""

from dataclasses import dataclass
from typing import Tuple

from .formal_cover import CoverError, saturate
from .reports import failed, passed
from .sigma_frame import SigmaFrameHom, validate_lattice


class RepresentativeDependentPos(Exception):
    """Inherited positivity disagrees inside a congruence class."""


class NoMaximumFound(Exception):
    """The strongly dense congruences have no coarsest member.

    Raising this is a falsification signal: on every valid overt
    instance the Booleanization congruence is that maximum.
    """


class SizeCapExceeded(Exception):
    pass


@dataclass(frozen=True)
class Positivity:
    """Decidable positivity predicate, given by its member set."""

    members: frozenset

    def holds(self, x):
        return x in self.members

    @staticmethod
    def of(values):
        return Positivity(frozenset(values))

    @staticmethod
    def nonzero(lattice):
        return Positivity(frozenset(
            x for x in lattice.elements if x != lattice.bottom))


def check_overt(lattice, pos):
    """The overt sigma-locale laws, checked exhaustively.

    In order: the bottom is not positive; positivity is upward closed;
    a positive join splits (some joinand is positive; all subsets, so
    countable joins at finite scale); the positivity axiom (every
    nonzero element is positive).  First failure wins, with witnesses.
    """
    elements = lattice.elements
    if pos.holds(lattice.bottom):
        return failed("bottom is positive", (lattice.bottom,))
    for a in elements:
        for b in elements:
            if lattice.leq(a, b) and pos.holds(a) and not pos.holds(b):
                return failed("upward closure fails", (a, b))
    n = len(elements)
    for mask in range(1 << n):
        subset = [elements[i] for i in range(n) if mask >> i & 1]
        if pos.holds(lattice.join_all(subset)):
            if not any(pos.holds(w) for w in subset):
                return failed("join-splitting fails", (tuple(subset),))
    for a in elements:
        if a != lattice.bottom and not pos.holds(a):
            return failed("positivity axiom fails", (a,))
    return passed("overt laws hold")


def check_overt_cover(p, pos, subsets=None):
    """Overt laws for a finite cover presentation.

    Splitting: a derivably covered, positive element has a positive
    cover member.  Positivity axiom: a non-positive element is covered
    by the empty set.  subsets defaults to every subset of the base.
    """
    if p.kind != "finite":
        raise CoverError("check_overt_cover needs a finite base")
    base = p.base
    if subsets is None:
        n = len(base)
        subsets = [tuple(base[i] for i in range(n) if mask >> i & 1)
                   for mask in range(1 << n)]
    for subset in subsets:
        covered = saturate(p, subset)
        if any(pos.holds(u) for u in subset):
            continue
        for a in covered:
            if pos.holds(a):
                return failed("cover splitting fails", (a, tuple(subset)))
    empty_covered = saturate(p, ())
    for a in base:
        if not pos.holds(a) and a not in empty_covered:
            return failed("positivity axiom fails", (a,))
    return passed("overt cover laws hold")


@dataclass(frozen=True)
class Congruence:
    """A partition of a lattice's elements, as normalized class ids.

    class_of[i] is the class of elements[i]; ids are normalized to
    first-appearance order (a restricted growth string), so equal
    partitions compare equal.
    """

    elements: Tuple
    class_of: Tuple[int, ...]

    @staticmethod
    def from_class_ids(elements, ids):
        elements = tuple(elements)
        ids = list(ids)
        if len(ids) != len(elements):
            raise ValueError("one class id per element required")
        remap = {}
        normal = []
        for i in ids:
            if i not in remap:
                remap[i] = len(remap)
            normal.append(remap[i])
        return Congruence(elements, tuple(normal))

    @staticmethod
    def identity(lattice):
        return Congruence(tuple(lattice.elements),
                          tuple(range(len(lattice.elements))))

    def class_count(self):
        return max(self.class_of) + 1 if self.class_of else 0

    def classes(self):
        """Classes as tuples, each in element order, ordered by class id."""
        out = [[] for _ in range(self.class_count())]
        for x, i in zip(self.elements, self.class_of):
            out[i].append(x)
        return tuple(tuple(c) for c in out)

    def class_id(self, x):
        return self.class_of[self.elements.index(x)]

    def relates(self, x, y):
        return self.class_id(x) == self.class_id(y)


def is_congruence(lattice, c):
    """Compatibility of a partition with meet and join."""
    elements = lattice.elements
    if tuple(c.elements) != tuple(elements):
        return failed("partition is over different elements", ())
    cid = {x: i for x, i in zip(c.elements, c.class_of)}
    n = len(elements)
    for i in range(n):
        for j in range(i + 1, n):
            x, y = elements[i], elements[j]
            if cid[x] != cid[y]:
                continue
            for z in elements:
                if cid[lattice.meet(x, z)] != cid[lattice.meet(y, z)]:
                    return failed("meet compatibility fails", (x, y, z))
                if cid[lattice.join(x, z)] != cid[lattice.join(y, z)]:
                    return failed("join compatibility fails", (x, y, z))
    return passed("congruence laws hold")


def congruence_leq(c1, c2):
    """True iff every c1 class is contained in a c2 class."""
    seen = {}
    for i, j in zip(c1.class_of, c2.class_of):
        if i in seen and seen[i] != j:
            return False
        seen[i] = j
    return True


def _signature(lattice, pos, x):
    return frozenset(z for z in lattice.elements
                     if pos.holds(lattice.meet(x, z)))


def bool_congruence(lattice, pos):
    """The congruence relating elements no positivity test separates.

    x ~ y iff positivity of x meet z and of y meet z agree for every z.
    Requires the overt laws to hold.
    """
    report = check_overt(lattice, pos)
    if not report:
        raise ValueError("positivity is not overt: %s" % (report.detail,))
    signatures = {}
    ids = []
    for x in lattice.elements:
        sig = _signature(lattice, pos, x)
        if sig not in signatures:
            signatures[sig] = len(signatures)
        ids.append(signatures[sig])
    return Congruence.from_class_ids(lattice.elements, ids)


def quotient(lattice, c, pos=None):
    """Quotient lattice, projection hom, and (optional) inherited pos.

    Class labels are frozensets of member labels; the order descends
    from representatives (well defined for valid congruences, which is
    checked).  Inherited positivity must agree across each class,
    otherwise RepresentativeDependentPos is raised rather than guessing
    a canonical representative.
    """
    report = is_congruence(lattice, c)
    if not report:
        raise ValueError("not a congruence: %s" % (report.detail,))
    groups = c.classes()
    labels = [frozenset(g) for g in groups]
    reps = [g[0] for g in groups]

    def leq(g1, g2):
        i, j = labels.index(g1), labels.index(g2)
        x, y = reps[i], reps[j]
        return c.relates(lattice.meet(x, y), x)

    quotient_lattice = validate_lattice(labels, leq)
    mapping = {x: labels[i] for x, i in zip(c.elements, c.class_of)}
    projection = SigmaFrameHom(lattice, quotient_lattice, mapping)

    inherited = None
    if pos is not None:
        positive = []
        for label, group in zip(labels, groups):
            values = {pos.holds(m) for m in group}
            if len(values) > 1:
                raise RepresentativeDependentPos(
                    "positivity disagrees inside class %r" % (sorted(
                        group, key=str),))
            if values.pop():
                positive.append(label)
        inherited = Positivity.of(positive)
    return quotient_lattice, projection, inherited


def is_sigma_overlap_algebra(lattice, pos):
    """Does Pos-overlap with every test element determine the order?

    Returns (True, None) or (False, (x, y)) for the first pair, in
    element order, where x overlaps no more than y yet x is not below
    y.  Requires the overt laws.
    """
    report = check_overt(lattice, pos)
    if not report:
        raise ValueError("positivity is not overt: %s" % (report.detail,))
    sigs = {x: _signature(lattice, pos, x) for x in lattice.elements}
    for x in lattice.elements:
        for y in lattice.elements:
            if sigs[x] <= sigs[y] and not lattice.leq(x, y):
                return False, (x, y)
    return True, None


def is_overlap_cover(p, pos, subsets=None):
    """The overlap law for a finite cover presentation.

    For every element a and every subset U: if each positive meet of a
    is matched by some cover member's positive meet, then a must be
    derivably covered by U.  Returns (True, None) or (False, (a, U)).
    The overt cover laws are a precondition; their failure raises
    CoverError.
    """
    report = check_overt_cover(p, pos, subsets)
    if not report:
        raise CoverError("positivity is not overt on the base: %s"
                         % (report.detail,))
    base = p.base
    if subsets is None:
        n = len(base)
        subsets = [tuple(base[i] for i in range(n) if mask >> i & 1)
                   for mask in range(1 << n)]
    for subset in subsets:
        covered = saturate(p, subset)
        for a in base:
            if a in covered:
                continue
            if all(
                any(pos.holds(p.meet(u, b)) for u in subset)
                for b in base
                if pos.holds(p.meet(a, b))
            ):
                return False, (a, tuple(subset))
    return True, None


def is_dense(lattice, c):
    """Only the bottom is congruent to the bottom."""
    for x in lattice.elements:
        if c.relates(x, lattice.bottom) and x != lattice.bottom:
            return False
    return True


def is_strongly_dense(lattice, c, pos):
    """Positivity is constant on every congruence class."""
    for x in lattice.elements:
        for y in lattice.elements:
            if c.relates(x, y) and pos.holds(x) and not pos.holds(y):
                return False
    return True


def enumerate_congruences(lattice):
    """All congruences, by filtering every partition of the carrier.

    Partitions are generated as restricted growth strings in
    lexicographic order, which fixes the output order.  Capped at 10
    elements (Bell-number growth).
    """
    n = len(lattice.elements)
    if n > 10:
        raise SizeCapExceeded("congruence enumeration capped at 10 elements")
    out = []

    def grow(prefix, used):
        if len(prefix) == n:
            c = Congruence.from_class_ids(lattice.elements, prefix)
            if is_congruence(lattice, c):
                out.append(c)
            return
        for i in range(used + 1):
            grow(prefix + [i], max(used, i + 1))

    if n:
        grow([0], 1)
    else:
        out.append(Congruence((), ()))
    return out


def smallest_strongly_dense_oracle(lattice, pos):
    """Brute-force the coarsest strongly dense congruence.

    Enumerates all congruences, keeps the strongly dense ones, and
    returns the one containing every other.  NoMaximumFound means the
    family has no maximum, which would falsify the minimality statement
    at this instance; it must never happen on valid overt inputs.
    """
    report = check_overt(lattice, pos)
    if not report:
        raise ValueError("positivity is not overt: %s" % (report.detail,))
    dense_family = [c for c in enumerate_congruences(lattice)
                    if is_strongly_dense(lattice, c, pos)]
    for candidate in dense_family:
        if all(congruence_leq(other, candidate) for other in dense_family):
            return candidate
    raise NoMaximumFound(
        "strongly dense congruences have no coarsest member")
