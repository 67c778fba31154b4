"""Finite groups as complete multiplication tables.

Elements are integers 0..order-1 with the identity at 0.  Ingestion paths:
presentations (coset enumeration), permutation generators, or a raw Cayley
table.  Element numbering is always breadth-first over generator words with
generators in input order, so every downstream computation is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import BoundExceededError, ValidationError

DEFAULT_ENUMERATION_BOUND = 10000
DEFAULT_LATTICE_BOUND = 2000

_GEN_NAMES = ("x", "y", "z", "w", "v", "u")


def generator_name(i: int) -> str:
    return _GEN_NAMES[i] if i < len(_GEN_NAMES) else f"g{i}"


@dataclass(frozen=True)
class ConjugacyClass:
    representative: int
    members: tuple[int, ...]


@dataclass(frozen=True)
class Subgroup:
    members: tuple[int, ...]
    canonical: bool = False

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, g: int) -> bool:
        return g in self.members


class FiniteGroup:
    """Immutable finite group with full multiplication table."""

    def __init__(self, mul_table, labels=None, generators=None, validate="light"):
        n = len(mul_table)
        if n == 0 or any(len(row) != n for row in mul_table):
            raise ValidationError("not a group table: table is not square")
        self.order = n
        self._mul = tuple(tuple(int(x) for x in row) for row in mul_table)
        for row in self._mul:
            for x in row:
                if not 0 <= x < n:
                    raise ValidationError(f"not a group table: entry {x} out of range")

        if any(self._mul[0][j] != j for j in range(n)) or any(
            self._mul[i][0] != i for i in range(n)
        ):
            raise ValidationError("not a group table: index 0 is not a two-sided identity")

        inv = [None] * n
        for a in range(n):
            for b in range(n):
                if self._mul[a][b] == 0:
                    if self._mul[b][a] != 0:
                        raise ValidationError(
                            f"not a group table: {b} is a right but not left inverse of {a}"
                        )
                    inv[a] = b
                    break
            if inv[a] is None:
                raise ValidationError(f"not a group table: element {a} has no inverse")
        self._inv = tuple(inv)

        if generators is None:
            generators = self._greedy_generators()
        self.generators = tuple(generators)

        if validate == "full":
            self._check_associativity_full()
        elif validate == "light":
            self._check_associativity_light()

        orders = []
        for a in range(n):
            k, cur = 1, a
            while cur != 0:
                cur = self._mul[cur][a]
                k += 1
            orders.append(k)
        self.elem_orders = tuple(orders)
        exponent = 1
        for o in orders:
            exponent = exponent * o // gcd(exponent, o)
        self.exponent = exponent

        self.labels = tuple(tuple(w) for w in labels) if labels is not None else None
        self._classes = None
        self._class_of = None
        self._subgroup_classes = None
        self._fusion = None

    # -- construction helpers ------------------------------------------------

    def _greedy_generators(self):
        gens = []
        reached = {0}
        for e in range(1, self.order):
            if e in reached:
                continue
            gens.append(e)
            reached = set(self._closure_of(gens))
            if len(reached) == self.order:
                break
        return gens

    def _check_associativity_light(self):
        # Light's test: associativity on a generating set implies it everywhere
        for g in self.generators:
            row_g = self._mul[g]
            for a in range(self.order):
                row_a = self._mul[a]
                row_ag = self._mul[row_a[g]]
                for b in range(self.order):
                    if row_ag[b] != row_a[row_g[b]]:
                        raise ValidationError(
                            f"not a group table: associativity fails at ({a},{g},{b})"
                        )

    def _check_associativity_full(self):
        mul = self._mul
        for a in range(self.order):
            ra = mul[a]
            for b in range(self.order):
                rab = mul[ra[b]]
                rb = mul[b]
                for c in range(self.order):
                    if rab[c] != ra[rb[c]]:
                        raise ValidationError(
                            f"not a group table: associativity fails at ({a},{b},{c})"
                        )

    # -- basic operations ------------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self._inv[a], -k)
        result = 0
        base = a
        while k:
            if k & 1:
                result = self._mul[result][base]
            base = self._mul[base][base]
            k >>= 1
        return result

    def conjugate(self, g: int, by: int) -> int:
        """by * g * by^-1."""
        return self._mul[self._mul[by][g]][self._inv[by]]

    def elements(self):
        return range(self.order)

    # -- words and labels ------------------------------------------------------

    def evaluate_word(self, word) -> int:
        """Word = iterable of signed 1-based generator letters (-2 = y^-1)."""
        g = 0
        for letter in word:
            if letter == 0:
                raise ValidationError("word letters are signed 1-based indices")
            idx = abs(letter) - 1
            if idx >= len(self.generators):
                raise ValidationError(f"word uses generator {idx} but group has {len(self.generators)}")
            h = self.generators[idx]
            if letter < 0:
                h = self._inv[h]
            g = self._mul[g][h]
        return g

    def label_of(self, g: int) -> str:
        if g == 0:
            return "1"
        if self.labels is None:
            return f"e{g}"
        word = self.labels[g]
        parts = []
        i = 0
        while i < len(word):
            j = i
            while j < len(word) and word[j] == word[i]:
                j += 1
            name = generator_name(word[i])
            parts.append(name if j - i == 1 else f"{name}^{j - i}")
            i = j
        return "*".join(parts)

    # -- conjugacy structure -----------------------------------------------------

    def conjugacy_classes(self):
        if self._classes is None:
            n = self.order
            class_of = [-1] * n
            raw = []
            for g in range(n):
                if class_of[g] >= 0:
                    continue
                orbit = set()
                for a in range(n):
                    orbit.add(self.conjugate(g, a))
                members = tuple(sorted(orbit))
                idx = len(raw)
                raw.append(members)
                for m in members:
                    class_of[m] = idx
            order_key = sorted(
                range(len(raw)), key=lambda i: (self.elem_orders[raw[i][0]], raw[i][0])
            )
            classes = []
            remap = [0] * len(raw)
            for new_idx, old_idx in enumerate(order_key):
                members = raw[old_idx]
                classes.append(ConjugacyClass(members[0], members))
                remap[old_idx] = new_idx
            self._classes = tuple(classes)
            self._class_of = tuple(remap[class_of[g]] for g in range(n))
        return self._classes

    def class_index(self, g: int) -> int:
        self.conjugacy_classes()
        return self._class_of[g]

    # -- subgroups ---------------------------------------------------------------

    def _closure_of(self, gens):
        seen = {0}
        out = [0]
        queue = [0]
        gens = [g for g in gens]
        while queue:
            a = queue.pop()
            for g in gens:
                b = self._mul[a][g]
                if b not in seen:
                    seen.add(b)
                    out.append(b)
                    queue.append(b)
        return sorted(seen)

    def subgroup_generated(self, elems) -> Subgroup:
        members = tuple(self._closure_of(list(elems)))
        return Subgroup(members, canonical=members == self.canonical_form(members))

    def join(self, a: Subgroup, b: Subgroup) -> Subgroup:
        return self.subgroup_generated(tuple(a.members) + tuple(b.members))

    def conjugate_subgroup(self, members, by: int):
        return tuple(sorted(self.conjugate(m, by) for m in members))

    def canonical_form(self, members) -> tuple[int, ...]:
        """Lexicographically least sorted member tuple among all conjugates."""
        members = tuple(sorted(members))
        best = members
        for a in range(1, self.order):
            cand = self.conjugate_subgroup(members, a)
            if cand < best:
                best = cand
        return best

    def subgroup_classes(self, bound: int = DEFAULT_LATTICE_BOUND):
        """One canonical representative per conjugacy class of subgroups."""
        if self._subgroup_classes is not None:
            return self._subgroup_classes
        if self.order > bound:
            raise BoundExceededError(
                f"subgroup lattice bound exceeded: |G| = {self.order} > {bound}"
            )
        trivial = (0,)
        seen = {frozenset(trivial)}
        classes = [trivial]
        queue = [trivial]
        while queue:
            base = queue.pop(0)
            base_set = set(base)
            for g in range(1, self.order):
                if g in base_set:
                    continue
                closure = tuple(self._closure_of(list(base) + [g]))
                if frozenset(closure) in seen:
                    continue
                conjugates = {closure}
                for a in range(1, self.order):
                    conjugates.add(self.conjugate_subgroup(closure, a))
                canonical = min(conjugates)
                for c in conjugates:
                    seen.add(frozenset(c))
                classes.append(canonical)
                queue.append(canonical)
        classes.sort(key=lambda m: (len(m), m))
        self._subgroup_classes = tuple(Subgroup(m, canonical=True) for m in classes)
        return self._subgroup_classes

    def find_class_of_subgroup(self, members) -> int:
        """Index of the subgroup class containing the given subgroup."""
        canon = self.canonical_form(members)
        for i, s in enumerate(self.subgroup_classes()):
            if s.members == canon:
                return i
        raise ValidationError("subgroup not found in lattice (is it really a subgroup?)")

    def conjugator_into(self, inner, outer) -> int | None:
        """Element a with a * inner * a^-1 contained in outer, or None."""
        outer_set = set(outer)
        for a in range(self.order):
            if all(self.conjugate(m, a) in outer_set for m in inner):
                return a
        return None

    # -- rational fusion ------------------------------------------------------------

    def rational_fusion_classes(self):
        """Partition coarsening conjugacy: g fused with g^k for gcd(k, ord g) = 1."""
        if self._fusion is not None:
            return self._fusion
        classes = self.conjugacy_classes()
        parent = list(range(len(classes)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for idx, cls in enumerate(classes):
            g = cls.representative
            o = self.elem_orders[g]
            for k in range(1, o + 1):
                if gcd(k, o) == 1:
                    j = self.class_index(self.power(g, k))
                    ri, rj = find(idx), find(j)
                    if ri != rj:
                        parent[max(ri, rj)] = min(ri, rj)

        buckets = {}
        for idx in range(len(classes)):
            buckets.setdefault(find(idx), []).append(idx)
        fused = []
        for root in sorted(buckets):
            members = []
            for idx in buckets[root]:
                members.extend(classes[idx].members)
            fused.append(tuple(sorted(members)))
        fused.sort(key=lambda m: m[0])
        self._fusion = tuple(fused)
        return self._fusion

    # -- export ---------------------------------------------------------------------

    def export(self) -> dict:
        return {
            "order": self.order,
            "cayley": [list(row) for row in self._mul],
            "labels": [self.label_of(g) for g in range(self.order)],
        }

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"


# ---------------------------------------------------------------------------
# ingestion: presentations (Todd-Coxeter coset enumeration, HLT strategy)
# ---------------------------------------------------------------------------


def _word_to_cols(word):
    cols = []
    for letter in word:
        if letter == 0:
            raise ValidationError("relator letters are signed 1-based generator indices")
        idx = abs(letter) - 1
        cols.append(2 * idx if letter > 0 else 2 * idx + 1)
    return cols


def _coset_enumeration(ngens, relators, ceiling):
    """Coset table of the trivial subgroup; returns generator permutations."""
    ncols = 2 * ngens
    table = [[None] * ncols]
    parent = [0]
    dead_queue = []

    def rep(k):
        r = k
        while parent[r] != r:
            r = parent[r]
        while parent[k] != r:
            parent[k], k = r, parent[k]
        return r

    def merge(a, b):
        a, b = rep(a), rep(b)
        if a != b:
            lo, hi = min(a, b), max(a, b)
            parent[hi] = lo
            dead_queue.append(hi)

    def coincidence(a, b):
        merge(a, b)
        while dead_queue:
            gamma = dead_queue.pop(0)
            for x in range(ncols):
                delta = table[gamma][x]
                if delta is None:
                    continue
                table[delta][x ^ 1] = None
                mu, nu = rep(gamma), rep(delta)
                if table[mu][x] is not None:
                    merge(nu, table[mu][x])
                elif table[nu][x ^ 1] is not None:
                    merge(mu, table[nu][x ^ 1])
                else:
                    table[mu][x] = nu
                    table[nu][x ^ 1] = mu

    def define(alpha, col):
        if len(table) >= ceiling:
            raise BoundExceededError("group too large or infinite")
        table.append([None] * ncols)
        parent.append(len(table) - 1)
        beta = len(table) - 1
        table[alpha][col] = beta
        table[beta][col ^ 1] = alpha
        return beta

    def scan_and_fill(alpha, cols):
        f, i = alpha, 0
        b, j = alpha, len(cols) - 1
        while True:
            while i <= j and table[f][cols[i]] is not None:
                f = table[f][cols[i]]
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and table[b][cols[j] ^ 1] is not None:
                b = table[b][cols[j] ^ 1]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if j == i:
                table[f][cols[i]] = b
                table[b][cols[i] ^ 1] = f
                return
            f = define(f, cols[i])
            i += 1

    rel_cols = [_word_to_cols(w) for w in relators]
    alpha = 0
    while alpha < len(table):
        if rep(alpha) != alpha:
            alpha += 1
            continue
        for cols in rel_cols:
            if not cols:
                continue
            scan_and_fill(alpha, cols)
            if rep(alpha) != alpha:
                break
        if rep(alpha) == alpha:
            for col in range(ncols):
                if table[alpha][col] is None:
                    define(alpha, col)
        alpha += 1

    live = [k for k in range(len(table)) if rep(k) == k]
    renumber = {k: i for i, k in enumerate(live)}
    perms = []
    for g in range(ngens):
        perm = [renumber[rep(table[k][2 * g])] for k in live]
        perms.append(perm)
    return perms


def _group_from_generator_perms(perms, gen_names_count=None):
    """Build the multiplication table from permutations acting as right
    multiplication by the generators, numbering elements by BFS words."""
    if not perms:
        return FiniteGroup([[0]], labels=[()], generators=())
    n = len(perms[0])
    order = [0]
    pos = {0: 0}
    words = [()]
    bfs_parent = [(-1, -1)]
    head = 0
    while head < len(order):
        cur = order[head]
        for gi, perm in enumerate(perms):
            nxt = perm[cur]
            if nxt not in pos:
                pos[nxt] = len(order)
                order.append(nxt)
                words.append(words[head] + (gi,))
                bfs_parent.append((head, gi))
        head += 1
    if len(order) != n:
        raise ValidationError("generator permutations do not act transitively")

    # columns of the multiplication table, built incrementally along BFS words:
    # the column of w*g is perm_g applied after the column of w.
    cols = [list(range(n))] + [None] * (n - 1)
    for idx in range(1, n):
        prev_idx, gi = bfs_parent[idx]
        prev_col = cols[prev_idx]
        perm = perms[gi]
        cols[idx] = [pos[perm[order[prev_col[a]]]] for a in range(n)]

    mul = [[cols[b][a] for b in range(n)] for a in range(n)]
    generators = [pos[perm[0]] for perm in perms]
    return FiniteGroup(mul, labels=words, generators=generators)


def from_presentation(ngens, relators, bound=DEFAULT_ENUMERATION_BOUND):
    """Group defined by generators and relators (signed 1-based letters)."""
    if ngens < 0:
        raise ValidationError("generator count must be non-negative")
    if ngens == 0:
        return FiniteGroup([[0]], labels=[()], generators=())
    relators = [list(w) for w in relators]
    if not any(w for w in relators):
        raise BoundExceededError("group too large or infinite")
    perms = _coset_enumeration(ngens, relators, ceiling=10 * bound)
    if len(perms[0]) > bound:
        raise BoundExceededError("group too large or infinite")
    return _group_from_generator_perms(perms)


def from_permutations(perms, bound=DEFAULT_ENUMERATION_BOUND):
    """Group generated by permutations on 0..n-1 (right-to-left words)."""
    perms = [list(p) for p in perms]
    if not perms:
        return FiniteGroup([[0]], labels=[()], generators=())
    npts = len(perms[0])
    for p in perms:
        if sorted(p) != list(range(npts)):
            raise ValidationError("input is not a bijection on {0..n-1}")

    def compose(p, q):  # word pq acts as "p then q"
        return tuple(q[p[i]] for i in range(npts))

    identity = tuple(range(npts))
    gens = [tuple(p) for p in perms]
    order = [identity]
    index = {identity: 0}
    words = {identity: ()}
    head = 0
    while head < len(order):
        cur = order[head]
        head += 1
        for gi, g in enumerate(gens):
            nxt = compose(cur, g)
            if nxt not in index:
                if len(order) >= bound:
                    raise BoundExceededError("group too large or infinite")
                index[nxt] = len(order)
                order.append(nxt)
                words[nxt] = words[cur] + (gi,)

    n = len(order)
    mul = [[index[compose(a, b)] for b in order] for a in order]
    labels = [words[p] for p in order]
    generators = [index[g] for g in gens]
    return FiniteGroup(mul, labels=labels, generators=generators)


def from_cayley_table(table):
    """Validated group from a raw multiplication table (identity must be 0)."""
    return FiniteGroup(table, validate="full")
