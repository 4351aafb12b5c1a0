"""Projection categories.

Three engines compute hom-sets of equivalence classes of complementary
morphisms (an object D plus an arrow c1 (x) D -> c2, closed under mediating
arrows g: D -> D', which need not be invertible):

* a generic engine for finite strict symmetric monoidal categories given by
  explicit tables,
* a dedicated engine for finite sets and bijections, where the complement
  cardinality is forced by weight additivity,
* a dedicated engine for collision structures and bijections, optionally
  restricted to the graph or simplicial-complex subcategories.

The module also houses the finite-presheaf <-> oplax-structure translation
over the category of finite sets and injections.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product

from projlie.errors import CapExceeded, UnsupportedCategory, ValidationError
from projlie.partitions import (CollisionStructure, InjMap,
                                all_collision_structures, all_injections,
                                compose_inj, disjoint_union, is_cs_map,
                                trivial)

FB_CAP = 6
CS_CAP = 4


# ---------------------------------------------------------------------------
# finite strict symmetric monoidal categories
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FiniteSMC:
    """Finite strict SMC given by explicit tables.

    arrows: name -> (src, dst); compose: (g, f) -> name for g o f;
    tensor_obj / tensor_arr / symmetry as tables; identities per object.
    """
    objects: tuple
    unit: object
    arrows: dict
    compose: dict
    identity: dict
    tensor_obj: dict
    tensor_arr: dict
    symmetry: dict

    def hom(self, a, b):
        return tuple(n for n, (s, t) in self.arrows.items()
                     if s == a and t == b)

    def tensor(self, a, b):
        try:
            return self.tensor_obj[(a, b)]
        except KeyError:
            raise UnsupportedCategory(
                f"category is not tensor-closed: {a} (x) {b} undefined")

    def comp(self, g, f):
        return self.compose[(g, f)]

    def validate(self):
        """Raise ValidationError naming the first failing axiom."""
        arr = self.arrows
        for (g, f), h in self.compose.items():
            if arr[f][1] != arr[g][0]:
                raise ValidationError(f"compose defined on non-composable {g}o{f}")
            if arr[h] != (arr[f][0], arr[g][1]):
                raise ValidationError(f"composite {g}o{f} has wrong type")
        for f, (a, b) in arr.items():
            for g, (c, d) in arr.items():
                if b == c and (g, f) not in self.compose:
                    raise ValidationError(f"missing composite {g}o{f}")
        for f, (a, b) in arr.items():
            if self.comp(f, self.identity[a]) != f or \
                    self.comp(self.identity[b], f) != f:
                raise ValidationError(f"identity law fails at {f}")
        for f, (a, b) in arr.items():
            for g, (c, d) in arr.items():
                if d != a:
                    continue
                for h, (e, c2) in arr.items():
                    if c2 != c:
                        continue
                    if self.comp(self.comp(f, g), h) != \
                            self.comp(f, self.comp(g, h)):
                        raise ValidationError("composition not associative")
        for a in self.objects:
            for b in self.objects:
                if (a, b) not in self.tensor_obj:
                    continue
                for c in self.objects:
                    if (b, c) in self.tensor_obj:
                        if self.tensor((self.tensor(a, b)), c) != \
                                self.tensor(a, self.tensor(b, c)):
                            raise ValidationError("tensor not associative")
            if self.tensor(a, self.unit) != a or self.tensor(self.unit, a) != a:
                raise ValidationError("unit not strict")
        for (f, g), h in self.tensor_arr.items():
            (a, b), (c, d) = arr[f], arr[g]
            if arr[h] != (self.tensor(a, c), self.tensor(b, d)):
                raise ValidationError(f"tensor arrow {f}(x){g} has wrong type")
        for a in self.objects:
            for b in self.objects:
                if self.tensor_arr[(self.identity[a], self.identity[b])] != \
                        self.identity[self.tensor(a, b)]:
                    raise ValidationError("tensor does not preserve identities")
        for f in arr:
            for g in arr:
                for f2 in arr:
                    if arr[f2][0] != arr[f][1]:
                        continue
                    for g2 in arr:
                        if arr[g2][0] != arr[g][1]:
                            continue
                        lhs = self.tensor_arr[(self.comp(f2, f),
                                               self.comp(g2, g))]
                        rhs = self.comp(self.tensor_arr[(f2, g2)],
                                        self.tensor_arr[(f, g)])
                        if lhs != rhs:
                            raise ValidationError("tensor not functorial")
        for (a, b), s in self.symmetry.items():
            if self.arrows[s] != (self.tensor(a, b), self.tensor(b, a)):
                raise ValidationError(f"symmetry {a},{b} has wrong type")
            back = self.symmetry[(b, a)]
            if self.comp(back, s) != self.identity[self.tensor(a, b)]:
                raise ValidationError(f"symmetry {a},{b} not involutive")
        for (a, b), s in self.symmetry.items():
            for f in arr:
                for g in arr:
                    if arr[f][0] != a or arr[g][0] != b:
                        continue
                    a2, b2 = arr[f][1], arr[g][1]
                    lhs = self.comp(self.symmetry[(a2, b2)],
                                    self.tensor_arr[(f, g)])
                    rhs = self.comp(self.tensor_arr[(g, f)], s)
                    if lhs != rhs:
                        raise ValidationError("symmetry not natural")
        for a in self.objects:
            for b in self.objects:
                for c in self.objects:
                    lhs = self.symmetry[(self.tensor(a, b), c)]
                    rhs = self.comp(
                        self.tensor_arr[(self.symmetry[(a, c)],
                                         self.identity[b])],
                        self.tensor_arr[(self.identity[a],
                                         self.symmetry[(b, c)])])
                    if lhs != rhs:
                        raise ValidationError("hexagon fails")
        return True

    def is_groupoid(self):
        for f, (a, b) in self.arrows.items():
            if not any(self.arrows[g] == (b, a)
                       and self.comp(g, f) == self.identity[a]
                       and self.comp(f, g) == self.identity[b]
                       for g in self.arrows):
                return False
        return True

    def is_skeletal_groupoid(self):
        if not self.is_groupoid():
            return False
        return all(a == b for _, (a, b) in self.arrows.items())


def walking_arrow_category():
    """The walking arrow 0 -> 1 with multiplication as tensor product."""
    arrows = {"id0": (0, 0), "id1": (1, 1), "e": (0, 1)}
    compose = {
        ("id0", "id0"): "id0", ("id1", "id1"): "id1",
        ("e", "id0"): "e", ("id1", "e"): "e",
    }
    tobj = {(0, 0): 0, (0, 1): 0, (1, 0): 0, (1, 1): 1}

    def mul(f, g):
        (a, b), (c, d) = arrows[f], arrows[g]
        s, t = tobj[(a, c)], tobj[(b, d)]
        return "e" if (s, t) == (0, 1) else f"id{s}"

    tarr = {(f, g): mul(f, g) for f in arrows for g in arrows}
    sym = {(a, b): f"id{tobj[(a, b)]}" for a in (0, 1) for b in (0, 1)}
    return FiniteSMC((0, 1), 1, arrows, compose,
                     {0: "id0", 1: "id1"}, tobj, tarr, sym)


def one_object_trivial_category():
    arrows = {"id": ("*", "*")}
    return FiniteSMC(("*",), "*", arrows, {("id", "id"): "id"},
                     {"*": "id"}, {("*", "*"): "*"},
                     {("id", "id"): "id"}, {("*", "*"): "id"})


def parity_groupoid():
    """Skeletal symmetric monoidal groupoid: objects Z/2 under addition,
    Aut(0) trivial, Aut(1) = Z/2. Used to cross-check the orbit-count formula."""
    arrows = {"id0": (0, 0), "id1": (1, 1), "s": (1, 1)}
    compose = {("id0", "id0"): "id0", ("id1", "id1"): "id1",
               ("id1", "s"): "s", ("s", "id1"): "s", ("s", "s"): "id1"}
    tobj = {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 0}

    def mul(f, g):
        (a, _), (c, _) = arrows[f], arrows[g]
        t = tobj[(a, c)]
        if t == 0:
            return "id0"
        flips = (f == "s") + (g == "s")
        return "s" if flips % 2 else "id1"

    tarr = {(f, g): mul(f, g) for f in arrows for g in arrows}
    sym = {(a, b): ("id0" if tobj[(a, b)] == 0 else "id1")
           for a in (0, 1) for b in (0, 1)}
    return FiniteSMC((0, 1), 0, arrows, compose, {0: "id0", 1: "id1"},
                     tobj, tarr, sym)


# ---------------------------------------------------------------------------
# generic projection hom-sets
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class PrHom:
    """Equivalence class of complementary morphisms, by canonical member."""
    source: object = field(compare=False)
    target: object = field(compare=False)
    representative: object
    class_members: tuple = field(compare=False)


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def classes(self):
        by_root = {}
        for x in self.parent:
            by_root.setdefault(self.find(x), []).append(x)
        return [tuple(sorted(v)) for v in by_root.values()]


def pr_hom_generic(cat: FiniteSMC, c1, c2):
    """All classes of complementary morphisms c1 -> c2 in Pr(cat)."""
    objs = sorted(cat.objects, key=repr)
    universe = []
    for d in objs:
        src = cat.tensor(c1, d)
        for f in cat.hom(src, c2):
            universe.append((repr(d), d, f))
    uf = _UnionFind([u[:1] + u[2:] for u in universe])
    keyed = {(rd, f): d for rd, d, f in universe}
    for (rd, d, f) in universe:
        for d2 in objs:
            for g in cat.hom(d, d2):
                lifted = cat.tensor_arr[(cat.identity[c1], g)]
                for f2 in cat.hom(cat.tensor(c1, d2), c2):
                    if cat.comp(f2, lifted) == f:
                        uf.union((rd, f), (repr(d2), f2))
    out = []
    for cls in uf.classes():
        members = tuple((keyed[k], k[1]) for k in cls)
        out.append(PrHom(c1, c2, min(cls), members))
    return sorted(out)


def pr_compose_generic(cat: FiniteSMC, first: PrHom, second: PrHom) -> PrHom:
    """Composite class second o first (first: c1->c2, second: c2->c3)."""
    d1, f1 = first.class_members[0]
    d2, f2 = second.class_members[0]
    d = cat.tensor(d1, d2)
    f = cat.comp(f2, cat.tensor_arr[(f1, cat.identity[d2])])
    for h in pr_hom_generic(cat, first.source, second.target):
        if any(m == (d, f) for m in h.class_members):
            return h
    raise ValidationError("composite escaped the enumerated hom-set")


def groupoid_hom_count(cat: FiniteSMC, c1, c2) -> int:
    """Hom count in Pr(cat) by the orbit formula over complements: the
    disjoint union over c2 = c1 (x) D of the orbit sets Aut(c2)/Aut(D)."""
    if not cat.is_skeletal_groupoid():
        raise ValueError("orbit formula needs a skeletal groupoid")
    total = 0
    for d in cat.objects:
        if cat.tensor(c1, d) == c2:
            auts = list(cat.hom(c2, c2))
            uf = _UnionFind(auts)
            for g in cat.hom(d, d):
                lifted = cat.tensor_arr[(cat.identity[c1], g)]
                for phi in auts:
                    uf.union(phi, cat.comp(phi, lifted))
            total += len(uf.classes())
    return total


def fb_groupoid_hom_count(m, n) -> int:
    """Orbit formula for bijections of finite sets: n!/(n-m)!."""
    if m > n:
        return 0
    from math import factorial
    return factorial(n) // factorial(n - m)


# ---------------------------------------------------------------------------
# dedicated engine: finite sets and bijections
# ---------------------------------------------------------------------------

def pr_fb_hom(m, n, cap=FB_CAP):
    """Classes of complementary morphisms m -> n over finite-set bijections.

    A representative is a permutation f of {0..n-1}; the first m entries are
    the images of the source, the rest the complement block.
    """
    if m > cap or n > cap:
        raise CapExceeded(f"pr_fb_hom capped at {cap}")
    if m > n:
        return []
    by_injection = {}
    for f in permutations(range(n)):
        by_injection.setdefault(f[:m], []).append(f)
    out = []
    for inj, members in sorted(by_injection.items()):
        members = tuple(sorted(members))
        rep = inj + tuple(sorted(set(range(n)) - set(inj)))
        out.append(PrHom(m, n, rep, members))
    return sorted(out)


def fi_hom(m, n, cap=FB_CAP):
    if m > cap or n > cap:
        raise CapExceeded(f"fi_hom capped at {cap}")
    return all_injections(m, n)


def fb_compose(first: PrHom, second: PrHom) -> PrHom:
    """Composite of complementary-morphism classes over finite sets."""
    m, n, p = first.source, first.target, second.target
    f1, f2 = first.representative, second.representative
    g = tuple(f2[f1[t]] for t in range(n)) + tuple(f2[t] for t in range(n, p))
    for h in pr_fb_hom(m, p):
        if g in h.class_members:
            return h
    raise ValidationError("composite escaped the enumerated hom-set")


def fb_correspondence(m, n, cap=FB_CAP):
    """Mutually inverse maps between Pr classes and injections.

    Returns (to_injection, from_injection) as dicts keyed by representative
    and by injection image tuple respectively.
    """
    classes = pr_fb_hom(m, n, cap)
    to_inj = {h.representative: InjMap(m, n, h.representative[:m])
              for h in classes}
    from_inj = {}
    for i in fi_hom(m, n, cap):
        rep = i.images + tuple(sorted(set(range(n)) - set(i.images)))
        matches = [h for h in classes if rep in h.class_members]
        assert len(matches) == 1
        from_inj[i.images] = matches[0]
    return to_inj, from_inj


# ---------------------------------------------------------------------------
# dedicated engine: collision structures and bijections
# ---------------------------------------------------------------------------

def _graph_structure(d: CollisionStructure) -> bool:
    return all(sorted(len(b) for b in g.blocks_as_sets())[-1:] == [2]
               and sum(len(b) > 1 for b in g.blocks_as_sets()) == 1
               for g in d.generators)


def _complex_structure(d: CollisionStructure) -> bool:
    return all(sum(len(b) > 1 for b in g.blocks_as_sets()) <= 1
               for g in d.generators)


_UNIVERSES = {
    "all": lambda d: True,
    "graphs": _graph_structure,
    "complexes": _complex_structure,
}


def pr_cs_hom(s: CollisionStructure, t: CollisionStructure,
              universe="all", cap=CS_CAP):
    """Classes of complementary morphisms S -> T over collision bijections.

    A complementary morphism is (D, f) with D a collision structure on the
    complement cardinality and f a bijective collision map S u D -> T.
    With universe="graphs"/"complexes" both D and the mediating arrows are
    restricted to the corresponding full subcategory.
    """
    m, n = s.n, t.n
    if n > cap:
        raise CapExceeded(f"pr_cs_hom capped at ground size {cap}")
    if m > n:
        return []
    keep = _UNIVERSES[universe]
    d_size = n - m
    ds = [d for d in all_collision_structures(d_size) if keep(d)]
    universe_members = []
    member_set = set()
    for d in ds:
        sd = disjoint_union(s, d)
        for f in permutations(range(n)):
            if is_cs_map(InjMap(n, n, f), sd, t):
                universe_members.append((d, f))
                member_set.add((d, f))
    uf = _UnionFind(universe_members)
    for (d, f) in universe_members:
        for d2 in ds:
            for gperm in permutations(range(d_size)):
                g = InjMap(d_size, d_size, gperm)
                if not is_cs_map(g, d, d2):
                    continue
                inv = [0] * d_size
                for i, j in enumerate(gperm):
                    inv[j] = i
                f2 = f[:m] + tuple(f[m + inv[j]] for j in range(d_size))
                if (d2, f2) in member_set:
                    uf.union((d, f), (d2, f2))
    out = []
    for cls in uf.classes():
        out.append(PrHom(s, t, cls[0], cls))
    return sorted(out)


def csi_hom(s: CollisionStructure, t: CollisionStructure, cap=CS_CAP):
    if t.n > cap:
        raise CapExceeded(f"csi_hom capped at ground size {cap}")
    return [f for f in all_injections(s.n, t.n) if is_cs_map(f, s, t)]


def cs_compose(first: PrHom, second: PrHom, universe="all") -> PrHom:
    s, t, u = first.source, first.target, second.target
    d1, f1 = first.representative
    d2, f2 = second.representative
    n, p = t.n, u.n
    d = disjoint_union(d1, d2)
    g = tuple(f2[f1[x]] for x in range(n)) + tuple(f2[x] for x in range(n, p))
    for h in pr_cs_hom(s, u, universe):
        if (d, g) in h.class_members:
            return h
    raise ValidationError("composite escaped the enumerated hom-set")


def cs_correspondence(s: CollisionStructure, t: CollisionStructure,
                      universe="all", cap=CS_CAP):
    """Mutually inverse maps: Pr classes <-> injective collision maps."""
    classes = pr_cs_hom(s, t, universe, cap)
    to_inj = {}
    for h in classes:
        _, f = h.representative
        to_inj[h.representative] = InjMap(s.n, t.n, f[:s.n])
    from_inj = {}
    for i in csi_hom(s, t, cap):
        f = i.images + tuple(sorted(set(range(t.n)) - set(i.images)))
        member = (trivial(t.n - s.n), f)
        matches = [h for h in classes if member in h.class_members]
        assert len(matches) == 1, "lift of an injection must be unique"
        from_inj[i.images] = matches[0]
    return to_inj, from_inj


def forget_to_fb(h: PrHom) -> tuple:
    """Underlying finite-set class of a collision Pr class (its injection)."""
    _, f = h.representative
    return f[:h.source.n]


# ---------------------------------------------------------------------------
# finite presheaves on injections and the oplax translation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FIPresheaf:
    """Contravariant set-valued functor on injections, truncated at W.

    maps[(m, k, images)] sends an index in X_k to an index in X_m for the
    injection with the given image tuple.
    """
    W: int
    sizes: tuple
    maps: dict

    def structure_map(self, f: InjMap):
        return self.maps[(f.src_size, f.dst_size, f.images)]

    def validate(self):
        for k in range(self.W + 1):
            ident = self.structure_map(InjMap(k, k, tuple(range(k))))
            if list(ident) != list(range(self.sizes[k])):
                raise ValidationError(f"identity violated at weight {k}")
        for m in range(self.W + 1):
            for k in range(m, self.W + 1):
                for f in all_injections(m, k):
                    for p in range(k, self.W + 1):
                        for g in all_injections(k, p):
                            lhs = self.structure_map(compose_inj(g, f))
                            via = self.structure_map(f)
                            outer = self.structure_map(g)
                            rhs = [via[outer[x]]
                                   for x in range(self.sizes[p])]
                            if list(lhs) != rhs:
                                raise ValidationError(
                                    f"functoriality fails at {f} then {g}")
        return True


def fi_presheaf(W, sizes, on_injection):
    """Build (and validate) a presheaf from a map InjMap -> index tuple."""
    maps = {}
    for m in range(W + 1):
        for k in range(m, W + 1):
            for f in all_injections(m, k):
                maps[(m, k, f.images)] = tuple(on_injection(f))
    x = FIPresheaf(W, tuple(sizes), maps)
    x.validate()
    return x


def product_presheaf(x_size, W):
    """I -> X^I for a discrete x_size-point space X."""
    elements = {k: sorted(product(range(x_size), repeat=k))
                for k in range(W + 1)}
    index = {k: {e: i for i, e in enumerate(elements[k])}
             for k in range(W + 1)}

    def on_inj(f):
        out = []
        for e in elements[f.dst_size]:
            out.append(index[f.src_size][tuple(e[j] for j in f.images)])
        return out

    return fi_presheaf(W, [len(elements[k]) for k in range(W + 1)], on_inj)


def inj_presheaf(x_size, W):
    """I -> Inj(I, X): the discrete configuration presheaf."""
    elements = {k: sorted(permutations(range(x_size), k))
                for k in range(W + 1)}
    index = {k: {e: i for i, e in enumerate(elements[k])}
             for k in range(W + 1)}

    def on_inj(f):
        out = []
        for e in elements[f.dst_size]:
            out.append(index[f.src_size][tuple(e[j] for j in f.images)])
        return out

    return fi_presheaf(W, [len(elements[k]) for k in range(W + 1)], on_inj)


def constant_singleton_presheaf(W):
    return fi_presheaf(W, [1] * (W + 1), lambda f: [0])


@dataclass(frozen=True)
class OplaxFB:
    """Oplax structure data on a finite symmetric-sequence-of-sets.

    act[(k, sigma)]: X_k -> X_k for each permutation sigma of {0..k-1};
    mu[(i, j)]: X_{i+j} -> X_i x X_j as a tuple of index pairs.
    """
    W: int
    sizes: tuple
    act: dict
    mu: dict

    def validate(self):
        for k in range(self.W + 1):
            ident = self.act[(k, tuple(range(k)))]
            if list(ident) != list(range(self.sizes[k])):
                raise ValidationError(f"identity action violated at {k}")
            for s1 in permutations(range(k)):
                for s2 in permutations(range(k)):
                    comp = tuple(s1[s2[t]] for t in range(k))
                    lhs = self.act[(k, comp)]
                    rhs = [self.act[(k, s2)][self.act[(k, s1)][x]]
                           for x in range(self.sizes[k])]
                    if list(lhs) != rhs:
                        raise ValidationError(f"action not functorial at {k}")
        for i in range(self.W + 1):
            for j in range(self.W + 1 - i):
                for k in range(self.W + 1 - i - j):
                    self._check_associativity(i, j, k)
        for i in range(self.W + 1):
            mu = self.mu[(i, 0)]
            if any(mu[x][0] != x for x in range(self.sizes[i])):
                raise ValidationError(f"unitality fails at ({i},0)")
            mu = self.mu[(0, i)]
            if any(mu[x][1] != x for x in range(self.sizes[i])):
                raise ValidationError(f"unitality fails at (0,{i})")
        for i in range(self.W + 1):
            for j in range(self.W + 1 - i):
                self._check_symmetry(i, j)
        return True

    def _check_associativity(self, i, j, k):
        for x in range(self.sizes[i + j + k]):
            y, z = self.mu[(i + j, k)][x]
            u, v = self.mu[(i, j)][y]
            x2, w = self.mu[(i, j + k)][x]
            v2, z2 = self.mu[(j, k)][w]
            if (u, v, z) != (x2, v2, z2):
                raise ValidationError(
                    f"associativity square ({i},{j},{k}) fails at element {x}")

    def _check_symmetry(self, i, j):
        # the block transposition (first i) <-> (last j) as an image tuple
        swap = tuple(range(i, i + j)) + tuple(range(i))
        for x in range(self.sizes[i + j]):
            u, v = self.mu[(i, j)][x]
            v2, u2 = self.mu[(j, i)][self.act[(i + j, swap)][x]]
            if (u, v) != (u2, v2):
                raise ValidationError(
                    f"symmetry square ({i},{j}) fails at element {x}")


def projection_to_oplax(x: FIPresheaf) -> OplaxFB:
    """Oplax structure maps X(I u J) -> X(I) x X(J) from the identity and
    symmetry complementary morphisms; validates the symmetric oplax axioms."""
    act = {}
    for k in range(x.W + 1):
        for sigma in permutations(range(k)):
            act[(k, sigma)] = x.structure_map(InjMap(k, k, sigma))
    mu = {}
    for i in range(x.W + 1):
        for j in range(x.W + 1 - i):
            first = x.structure_map(InjMap(i, i + j, tuple(range(i))))
            second = x.structure_map(InjMap(j, i + j, tuple(range(i, i + j))))
            mu[(i, j)] = tuple((first[e], second[e])
                               for e in range(x.sizes[i + j]))
    ox = OplaxFB(x.W, x.sizes, act, mu)
    ox.validate()
    return ox


def oplax_to_projection(ox: OplaxFB) -> FIPresheaf:
    """Reconstruct the presheaf on injections from an oplax structure."""
    ox.validate()

    def on_inj(f: InjMap):
        m, k = f.src_size, f.dst_size
        rest = sorted(set(range(k)) - set(f.images))
        sigma = f.images + tuple(rest)
        acted = ox.act[(k, sigma)]
        mu = ox.mu[(m, k - m)]
        return [mu[acted[e]][0] for e in range(ox.sizes[k])]

    return fi_presheaf(ox.W, ox.sizes, on_inj)
