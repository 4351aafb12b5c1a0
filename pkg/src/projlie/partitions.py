"""Set partitions, collision structures and their category operations.

Partitions of {0..n-1} are stored as restricted-growth strings (the block
label of each element, labels first-use-increasing).  A collision structure
is an upward-closed set of partitions, stored by its antichain of minimal
generators; membership is a refinement scan against the generators.  Ground
sets are always {0..n-1}.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import permutations

from projlie.errors import CapExceeded, ValidationError

ENUM_CAP = int(os.environ.get("PROJLIE_ENUM_CAP", "10"))


@dataclass(frozen=True, order=True)
class Partition:
    blocks: tuple[int, ...]

    def __post_init__(self):
        seen = 0
        for label in self.blocks:
            if label > seen or label < 0:
                raise ValidationError(
                    f"not a restricted-growth string: {self.blocks}")
            if label == seen:
                seen += 1

    @property
    def ground_size(self):
        return len(self.blocks)

    @property
    def n_blocks(self):
        return max(self.blocks) + 1 if self.blocks else 0

    def blocks_as_sets(self):
        out = [[] for _ in range(self.n_blocks)]
        for i, label in enumerate(self.blocks):
            out[label].append(i)
        return [frozenset(b) for b in out]

    def is_discrete(self):
        return self.blocks == tuple(range(len(self.blocks)))


def partition_from_blocks(n, block_sets):
    """Partition of {0..n-1} from an iterable of disjoint covering blocks."""
    label_of = {}
    for b in block_sets:
        for i in b:
            if i in label_of or not 0 <= i < n:
                raise ValidationError("blocks must partition the ground set")
            label_of[i] = b
    if len(label_of) != n:
        raise ValidationError("blocks must partition the ground set")
    rgs = []
    named = {}
    for i in range(n):
        key = id(label_of[i]) if not isinstance(label_of[i], frozenset) \
            else label_of[i]
        if key not in named:
            named[key] = len(named)
        rgs.append(named[key])
    return Partition(tuple(rgs))


def discrete_partition(n):
    return Partition(tuple(range(n)))


def indiscrete_partition(n):
    return Partition((0,) * n) if n else Partition(())


def enumerate_partitions(n, cap=None):
    """All partitions of {0..n-1} in lexicographic restricted-growth order."""
    cap = ENUM_CAP if cap is None else cap
    if n > cap:
        raise CapExceeded(f"partition enumeration cap {cap} exceeded by n={n}")
    if n == 0:
        return [Partition(())]
    out = []

    def grow(prefix, mx):
        if len(prefix) == n:
            out.append(Partition(tuple(prefix)))
            return
        for label in range(mx + 2):
            prefix.append(label)
            grow(prefix, max(mx, label))
            prefix.pop()

    grow([0], 0)
    return out


def refines(p: Partition, q: Partition) -> bool:
    """True iff p <= q (every block of q is a union of blocks of p)."""
    if p.ground_size != q.ground_size:
        raise ValueError("refines needs equal ground sizes")
    image = {}
    for a, b in zip(p.blocks, q.blocks):
        if image.setdefault(a, b) != b:
            return False
    return True


def join_partitions(p: Partition, q: Partition) -> Partition:
    """Least upper bound in the refinement order (union of relations)."""
    n = p.ground_size
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for blocks in (p.blocks_as_sets(), q.blocks_as_sets()):
        for b in blocks:
            it = iter(sorted(b))
            first = next(it)
            for other in it:
                ra, rb = find(first), find(other)
                if ra != rb:
                    parent[rb] = ra
    named = {}
    rgs = []
    for i in range(n):
        r = find(i)
        if r not in named:
            named[r] = len(named)
        rgs.append(named[r])
    return Partition(tuple(rgs))


@dataclass(frozen=True, order=True)
class CollisionStructure:
    n: int
    generators: tuple[Partition, ...]

    def __post_init__(self):
        for g in self.generators:
            if g.ground_size != self.n:
                raise ValidationError("generator on wrong ground set")
        for i, g in enumerate(self.generators):
            for j, h in enumerate(self.generators):
                if i != j and refines(g, h):
                    raise ValidationError(
                        "generators must be a <=-incomparable antichain")
        if tuple(sorted(self.generators)) != self.generators:
            raise ValidationError("generators must be sorted")


def collision_structure(n, parts):
    """Collision structure generated by *parts*, stored by minimal generators."""
    parts = list(parts)
    for p in parts:
        if p.ground_size != n:
            raise ValueError("generating partition on wrong ground set")
    minimal = []
    for p in parts:
        if any(q != p and refines(q, p) for q in parts):
            continue
        if p not in minimal:
            minimal.append(p)
    return CollisionStructure(n, tuple(sorted(minimal)))


def trivial(n):
    return CollisionStructure(n, ())


def full_structure(n):
    return collision_structure(n, [discrete_partition(n)])


def cs_contains(s: CollisionStructure, p: Partition) -> bool:
    if s.n != p.ground_size:
        raise ValueError("ground size mismatch")
    return any(refines(g, p) for g in s.generators)


def cs_subset(s: CollisionStructure, t: CollisionStructure) -> bool:
    """Upward-closure containment S <= T, tested on generators."""
    if s.n != t.n:
        raise ValueError("ground size mismatch")
    return all(cs_contains(t, g) for g in s.generators)


@dataclass(frozen=True, order=True)
class InjMap:
    src_size: int
    dst_size: int
    images: tuple[int, ...]

    def __post_init__(self):
        if len(self.images) != self.src_size:
            raise ValidationError("one image per source element required")
        if len(set(self.images)) != self.src_size:
            raise ValidationError("images must be pairwise distinct")
        if any(not 0 <= i < self.dst_size for i in self.images):
            raise ValidationError("image outside destination")


def identity_inj(n):
    return InjMap(n, n, tuple(range(n)))


def compose_inj(g: InjMap, f: InjMap) -> InjMap:
    """g o f."""
    if f.dst_size != g.src_size:
        raise ValueError("injections not composable")
    return InjMap(f.src_size, g.dst_size,
                  tuple(g.images[i] for i in f.images))


def subset_inclusion(subset, n):
    """Inclusion of a subset of {0..n-1}, listed in increasing order."""
    return InjMap(len(subset), n, tuple(sorted(subset)))


def all_injections(m, n):
    return [InjMap(m, n, p) for p in permutations(range(n), m)]


def pushforward_partition(f: InjMap, p: Partition) -> Partition:
    """Images of the blocks of p plus singletons off the image of f."""
    if p.ground_size != f.src_size:
        raise ValueError("ground size mismatch")
    blocks = [set() for _ in range(p.n_blocks)]
    for i, label in enumerate(p.blocks):
        blocks[label].add(f.images[i])
    hit = set(f.images)
    singles = [frozenset([j]) for j in range(f.dst_size) if j not in hit]
    return partition_from_blocks(
        f.dst_size, [frozenset(b) for b in blocks] + singles)


def pushforward(f: InjMap, s: CollisionStructure) -> CollisionStructure:
    if s.n != f.src_size:
        raise ValueError("ground size mismatch")
    return collision_structure(
        f.dst_size, [pushforward_partition(f, g) for g in s.generators])


def pullback(f: InjMap, s: CollisionStructure, cap=None) -> CollisionStructure:
    """{P : f_*P in S}, by full enumeration of the source partition poset."""
    if s.n != f.dst_size:
        raise ValueError("ground size mismatch")
    hits = [p for p in enumerate_partitions(f.src_size, cap)
            if cs_contains(s, pushforward_partition(f, p))]
    return collision_structure(f.src_size, hits)


def restrict(s: CollisionStructure, subset, cap=None) -> CollisionStructure:
    """Pullback along the inclusion of a subset (S restricted to subset)."""
    return pullback(subset_inclusion(subset, s.n), s, cap)


def disjoint_union(s: CollisionStructure,
                   t: CollisionStructure) -> CollisionStructure:
    n = s.n + t.n
    left = InjMap(s.n, n, tuple(range(s.n)))
    right = InjMap(t.n, n, tuple(range(s.n, n)))
    gens = [pushforward_partition(left, g) for g in s.generators]
    gens += [pushforward_partition(right, g) for g in t.generators]
    return collision_structure(n, gens)


def is_cs_map(f: InjMap, s: CollisionStructure, t: CollisionStructure) -> bool:
    """True iff f_*S is contained in T."""
    if s.n != f.src_size or t.n != f.dst_size:
        raise ValueError("ground size mismatch")
    return all(cs_contains(t, pushforward_partition(f, g))
               for g in s.generators)


def cs_from_graph(n, edges) -> CollisionStructure:
    gens = []
    for e in edges:
        a, b = sorted(e)
        if not (0 <= a < b < n):
            raise ValueError(f"bad edge {e!r}")
        gens.append(partition_from_blocks(
            n, [frozenset([a, b])] +
            [frozenset([i]) for i in range(n) if i not in (a, b)]))
    return collision_structure(n, gens)


def cs_from_complex(n, faces) -> CollisionStructure:
    """Collision structure of a simplicial complex given by its face list."""
    face_set = {frozenset(f) for f in faces}
    for f in face_set:
        if any(not 0 <= v < n for v in f):
            raise ValueError(f"face {set(f)} outside ground set")
        for v in f:
            if f - {v} not in face_set and len(f) > 1:
                raise ValueError("face set is not closed under subsets")
    # minimal non-faces: non-faces all of whose proper subsets are faces
    gens = []
    from itertools import combinations
    for size in range(1, n + 1):
        for m in combinations(range(n), size):
            ms = frozenset(m)
            if ms in face_set:
                continue
            if all(ms - {v} in face_set or len(ms) == 1 for v in ms):
                gens.append(partition_from_blocks(
                    n, [ms] + [frozenset([i]) for i in range(n)
                               if i not in ms]))
    return collision_structure(n, gens)


def all_collision_structures(n, cap=4):
    """Every collision structure on {0..n-1} (all antichains in the poset)."""
    if n > cap:
        raise CapExceeded(f"collision-structure enumeration capped at {cap}")
    parts = enumerate_partitions(n)
    out = []

    def grow(idx, chosen):
        out.append(CollisionStructure(n, tuple(sorted(chosen))))
        for i in range(idx, len(parts)):
            p = parts[i]
            if all(not refines(p, q) and not refines(q, p) for q in chosen):
                grow(i + 1, chosen + [p])

    grow(0, [])
    # dedupe (different antichain orders collapse under sorting)
    return sorted(set(out))


def surjections(n, r, cap=None):
    """All surjections {0..n-1} -> {1..r}, as tuples of values."""
    cap = ENUM_CAP if cap is None else cap
    if n > cap or r > cap:
        raise CapExceeded(f"surjection enumeration cap {cap} exceeded")
    if r == 0:
        return [()] if n == 0 else []
    out = []
    for fn in _functions(n, r):
        if len(set(fn)) == r:
            out.append(fn)
    return out


def _functions(n, r):
    if n == 0:
        yield ()
        return
    for rest in _functions(n - 1, r):
        for v in range(1, r + 1):
            yield rest + (v,)


def finality_check(s: CollisionStructure, r, cap=3) -> bool:
    """Certify the unique-factorization property of decompositions of S.

    Enumerates every bijective collision map from an r-fold disjoint union
    onto S and checks that it factors through the canonical decomposition
    object of exactly one function p: I -> {1..r}; when every tensor factor
    is nonempty, that function is additionally checked to be the surjection
    read off from the map itself.
    """
    n = s.n
    if n > cap or r > cap + 1:
        raise CapExceeded(f"finality check capped at ground size {cap}")
    structures = {k: all_collision_structures(k) for k in range(n + 1)}
    functions = [tuple(fn) for fn in _functions(n, r)]
    canonical = {}
    for p in functions:
        fibers = [tuple(i for i in range(n) if p[i] == j)
                  for j in range(1, r + 1)]
        canonical[p] = fibers

    for profile in _compositions(n, r):
        offsets = [sum(profile[:j]) for j in range(r)]
        for tup in _product_structures(structures, profile):
            for perm in permutations(range(n)):
                # perm maps concatenated source blocks onto {0..n-1}
                blocks = [perm[offsets[j]:offsets[j] + profile[j]]
                          for j in range(r)]
                fs = [InjMap(profile[j], n, tuple(blocks[j]))
                      for j in range(r)]
                if not all(is_cs_map(fs[j], tup[j], s) for j in range(r)):
                    continue
                good = []
                for p in functions:
                    fibers = canonical[p]
                    # the j-th factor must map bijectively onto the j-th fiber
                    if any(tuple(sorted(blocks[j])) != fibers[j]
                           for j in range(r)):
                        continue
                    ok = True
                    for j in range(r):
                        fib = fibers[j]
                        comp = InjMap(
                            profile[j], len(fib),
                            tuple(fib.index(x) for x in blocks[j]))
                        target = restrict(s, fib)
                        if not is_cs_map(comp, tup[j], target):
                            ok = False
                            break
                    if ok:
                        good.append(p)
                if len(good) != 1:
                    return False
                if all(profile):
                    p_f = tuple(next(j + 1 for j in range(r)
                                     if i in blocks[j]) for i in range(n))
                    if good[0] != p_f or len(set(p_f)) != r:
                        return False
    return True


def _compositions(n, r):
    if r == 0:
        if n == 0:
            yield ()
        return
    for head in range(n + 1):
        for rest in _compositions(n - head, r - 1):
            yield (head,) + rest


def _product_structures(structures, profile):
    if not profile:
        yield ()
        return
    for first in structures[profile[0]]:
        for rest in _product_structures(structures, profile[1:]):
            yield (first,) + rest
