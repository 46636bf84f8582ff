"""End-to-end acceptance suite.

Ten checks, each with an explicit wall-clock bound, exercising the
whole stack against independent oracles: set-theoretic oracles for the
countable-set operations, exhaustive searches for freeness and
congruence minimality, saturation as the ground truth for the
derivation engine, and byte-frozen golden files for the CLI.
"""

import itertools
import json
import os
import random
import subprocess
import sys
import time

from sigmaloc import (
    Confirmed,
    CoverPresentation,
    Enumeration,
    SemiDecidableEquality,
    UNKNOWN,
    bool_congruence,
    boolean_lattice,
    cantor_cover,
    chain_lattice,
    check_compactness,
    check_formal_cover_axioms,
    check_sigma_hom,
    congruence_leq,
    derive,
    discrete_cover,
    enumerate_congruences,
    envelope_cover,
    ext_equal_finite,
    extend_to_free_table,
    find_isomorphism,
    frame_of_presentation,
    free_lattice,
    from_detachable,
    intersect_binary,
    is_congruence,
    is_overlap_cover,
    is_sigma_overlap_algebra,
    is_strongly_dense,
    quotient,
    respects_disjointness,
    run,
    saturate,
    smallest_strongly_dense_oracle,
    to_detachable,
    union_countable,
    with_nonzero_pos,
)
from sigmaloc.sigma_frame import SigmaFrameHom

from corpus import corpus

EXAMPLES = os.path.join(os.path.dirname(__file__), os.pardir, "docs",
                        "examples")
GOLDEN = os.path.join(os.path.dirname(__file__), "golden")


def test_c01_union_and_intersection_match_the_set_oracle():
    # bounded enumerations over carriers of at most 5 values; both
    # operations must agree with plain set union/intersection up to
    # extensional equality
    t0 = time.monotonic()
    rng = random.Random(101)
    eq = SemiDecidableEquality.from_decidable()
    cases = 0
    while cases < 100:
        carrier = "abcde"[:rng.randrange(1, 6)]

        def short_enum():
            vals = [rng.choice(carrier)
                    for _ in range(rng.randrange(0, 5))]
            return Enumeration.from_iterable(vals), set(vals)

        k = rng.randrange(1, 4)
        members, expected = {}, set()
        for i in range(k):
            e, s = short_enum()
            members[i] = e
            expected |= s
        union = union_countable(Enumeration.from_iterable(range(k)), members)
        assert ext_equal_finite(
            union, Enumeration.from_iterable(sorted(expected)))

        e1, s1 = short_enum()
        e2, s2 = short_enum()
        inter = intersect_binary(e1, e2, eq)
        assert ext_equal_finite(
            inter, Enumeration.from_iterable(sorted(s1 & s2)))
        cases += 1
    elapsed = time.monotonic() - t0
    assert elapsed < 10.0
    print("c01: %d cases in %.2fs" % (cases, elapsed))


def test_c02_detachable_round_trip_is_the_identity():
    t0 = time.monotonic()
    rng = random.Random(102)
    for _ in range(100):
        vals = [rng.choice("abcde") for _ in range(rng.randrange(0, 7))]
        e = Enumeration.from_iterable(vals)
        d, g = to_detachable(e)
        back = from_detachable(d, g, bound=e.bound)
        assert ext_equal_finite(back, e)
    elapsed = time.monotonic() - t0
    assert elapsed < 1.0
    print("c02: 100 round trips in %.2fs" % elapsed)


def _homs_extending(generators, lattice, assignment):
    """All lattice images of the free realization that extend the
    assignment on generators and pass the full homomorphism check.

    Backtracking over free elements in their fixed order; bottom, top,
    and generator singletons are pinned first (any solution must agree
    there), and partial maps are pruned on meet/join/order consistency
    with everything already placed.
    """
    free = free_lattice(generators)
    order = list(free.elements)
    pinned = {free.bottom: lattice.bottom, free.top: lattice.top}
    for g in generators:
        pinned[frozenset([g])] = assignment[g]
    mapping = {}
    found = []

    def consistent(x, y):
        for a, b in mapping.items():
            if a is x:
                continue
            m = free.meet(x, a)
            if m in mapping and mapping[m] != lattice.meet(y, b):
                return False
            j = free.join(x, a)
            if j in mapping and mapping[j] != lattice.join(y, b):
                return False
            if free.leq(x, a) and not lattice.leq(y, b):
                return False
            if free.leq(a, x) and not lattice.leq(b, y):
                return False
        return True

    def place(i):
        if i == len(order):
            hom = SigmaFrameHom(free, lattice, dict(mapping))
            if check_sigma_hom(hom):
                found.append(dict(mapping))
            return
        x = order[i]
        candidates = [pinned[x]] if x in pinned else list(lattice.elements)
        for y in candidates:
            mapping[x] = y
            if consistent(x, y):
                place(i + 1)
            del mapping[x]

    place(0)
    return found


def test_c03_free_extension_is_the_unique_hom_when_one_exists():
    # for every generator set of size <= 3 and every assignment into
    # each target, the tabulated extension is a homomorphism agreeing
    # with the assignment exactly when the assignment sends distinct
    # generators to disjoint elements, and then it is the only such
    # hom; otherwise no hom extends the assignment at all
    t0 = time.monotonic()
    targets = [chain_lattice(1), chain_lattice(2), chain_lattice(3),
               boolean_lattice(2), boolean_lattice(3)]
    checked = homs_found = 0
    for size in (1, 2, 3):
        generators = ["g%d" % i for i in range(size)]
        for lattice in targets:
            for images in itertools.product(lattice.elements, repeat=size):
                assignment = dict(zip(generators, images))
                table = extend_to_free_table(generators, lattice, assignment)
                agrees = all(
                    table.mapping[frozenset([g])] == assignment[g]
                    for g in generators)
                assert agrees
                solutions = _homs_extending(generators, lattice, assignment)
                if respects_disjointness(lattice, assignment):
                    assert bool(check_sigma_hom(table))
                    assert solutions == [table.mapping]
                    homs_found += 1
                else:
                    assert not check_sigma_hom(table)
                    assert solutions == []
                checked += 1
    elapsed = time.monotonic() - t0
    assert elapsed < 60.0
    print("c03: %d assignments, %d with a hom, in %.2fs"
          % (checked, homs_found, elapsed))


def test_c04_envelope_frames_reconstruct_every_corpus_lattice():
    t0 = time.monotonic()
    entries = corpus()
    assert len(entries) >= 30
    for name, lattice in entries:
        assert len(lattice) <= 8, name
        p, embedding = envelope_cover(lattice)
        assert check_formal_cover_axioms(p), name
        frame = frame_of_presentation(p)
        iso = find_isomorphism(frame, lattice)
        assert iso is not None, name
        for a in lattice.elements:
            assert embedding[a] in frame._index, name
    elapsed = time.monotonic() - t0
    assert elapsed < 120.0
    print("c04: %d lattices reconstructed in %.2fs" % (len(entries), elapsed))


def test_c05_every_covering_subset_admits_a_finite_subcover():
    t0 = time.monotonic()
    covered = 0
    for name, lattice in corpus():
        p, _ = envelope_cover(lattice)
        base = p.base
        n = len(base)
        for mask in range(1 << n):
            u = tuple(base[i] for i in range(n) if mask >> i & 1)
            if lattice.top not in saturate(p, u):
                continue
            sub = check_compactness(p, u)
            assert sub is not None, (name, u)
            assert set(sub) <= set(u)
            assert lattice.top in saturate(p, sub)
            covered += 1
    elapsed = time.monotonic() - t0
    assert elapsed < 60.0
    print("c05: %d covering subsets reduced in %.2fs" % (covered, elapsed))


def test_c06_booleanization_suite_on_the_corpus():
    t0 = time.monotonic()
    for name, lattice in corpus():
        lattice, pos = with_nonzero_pos(lattice)
        c = bool_congruence(lattice, pos)
        assert is_congruence(lattice, c), name
        assert is_strongly_dense(lattice, c, pos), name
        oracle = smallest_strongly_dense_oracle(lattice, pos)
        assert oracle == c, name
        for other in enumerate_congruences(lattice):
            if is_strongly_dense(lattice, other, pos):
                assert congruence_leq(other, c), name
        q, projection, qpos = quotient(lattice, c, pos)
        assert check_sigma_hom(projection), name
        ok, witness = is_sigma_overlap_algebra(q, qpos)
        assert ok, (name, witness)
        c2 = bool_congruence(q, qpos)
        assert c2.class_count() == len(q), name
        q2, _, _ = quotient(q, c2, qpos)
        assert find_isomorphism(q2, q) is not None, name
        for x in q.elements:
            assert any(
                q.meet(x, y) == q.bottom and q.join(x, y) == q.top
                for y in q.elements), (name, x)
    elapsed = time.monotonic() - t0
    assert elapsed < 120.0
    print("c06: suite over %d lattices in %.2fs" % (len(corpus()), elapsed))


def test_c07_overlap_cover_examples():
    t0 = time.monotonic()
    for size in range(4):
        p, pos = discrete_cover(["s%d" % i for i in range(size)])
        assert is_overlap_cover(p, pos) == (True, None), size
    chain, _ = envelope_cover(chain_lattice(2))
    from sigmaloc import Positivity
    ok, witness = is_overlap_cover(chain, Positivity.of(["a", "1"]))
    assert not ok
    assert witness == ("1", ("a",))
    elapsed = time.monotonic() - t0
    assert elapsed < 30.0
    print("c07: discrete sizes 0..3 pass, chain witness %r, in %.2fs"
          % (witness, elapsed))


def _random_presentation(rng):
    cube = boolean_lattice(3)
    while True:
        members = {cube.top} | {x for x in cube.elements
                                if rng.random() < 0.4}
        changed = True
        while changed:
            changed = False
            for x in list(members):
                for y in list(members):
                    m = cube.meet(x, y)
                    if m not in members:
                        members.add(m)
                        changed = True
        if len(members) <= 6:
            break
    base = [x for x in cube.elements if x in members]
    axioms = []
    for _ in range(rng.randrange(0, 9)):
        head = rng.choice(base)
        cover = tuple(rng.choice(base)
                      for _ in range(rng.randrange(0, 4)))
        axioms.append((head, cover))
    return CoverPresentation.finite(base=base, meet=cube.meet,
                                    top=cube.top, axioms=axioms)


def test_c08_derivation_search_agrees_with_saturation():
    # 200 random presentations (base <= 6, at most 8 axioms): budgeted
    # search confirms exactly the saturation members
    t0 = time.monotonic()
    rng = random.Random(2024)
    checks = 0
    for _ in range(200):
        p = _random_presentation(rng)
        for _ in range(4):
            a = rng.choice(p.base)
            u = tuple(x for x in p.base if rng.random() < 0.4)
            expected = a in saturate(p, u)
            got = isinstance(run(derive(p, a, u), 10 ** 4), Confirmed)
            assert got == expected, (p.base, p.axioms, a, u)
            checks += 1
    elapsed = time.monotonic() - t0
    assert elapsed < 60.0
    print("c08: %d derive/saturate agreements in %.2fs" % (checks, elapsed))


def test_c09_binary_tree_derivations():
    t0 = time.monotonic()
    p = cantor_cover()
    for n in (1, 2, 3, 4):
        u = [format(i, "0%db" % n) for i in range(1 << n)]
        res = run(derive(p, "", u), 100)
        assert isinstance(res, Confirmed), n
    assert run(derive(p, "0", ["00"]), 10 ** 5) is UNKNOWN
    elapsed = time.monotonic() - t0
    assert elapsed < 30.0
    print("c09: slices to depth 4 confirmed, proper subcover unknown, "
          "in %.2fs" % elapsed)


def test_c10_cli_reports_match_the_golden_bytes():
    t0 = time.monotonic()
    for name, expected_code in (("chain", 1), ("diamond", 0),
                                ("cantor", 0)):
        path = os.path.join(EXAMPLES, name + ".cov")
        for fmt, ext in (("text", "txt"), ("records", "jsonl")):
            got = subprocess.run(
                [sys.executable, "-m", "sigmaloc.cli",
                 "--input", path, "--format", fmt],
                capture_output=True, timeout=30)
            assert got.returncode == expected_code, (name, fmt)
            with open(os.path.join(GOLDEN, "%s.%s" % (name, ext)),
                      "rb") as handle:
                assert got.stdout == handle.read(), (name, fmt)
            if fmt == "records":
                for line in got.stdout.decode().splitlines():
                    json.loads(line)
    elapsed = time.monotonic() - t0
    assert elapsed < 5.0
    print("c10: six golden runs byte-identical in %.2fs" % elapsed)
