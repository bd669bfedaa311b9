#!/usr/bin/env python3
"""Generate the shipped group catalogs.

Every group is built from a standard presentation (cyclic, metacyclic,
abelian-by-cyclic, semidirect or direct product, matrix or permutation
model), enumerated by closure and written as its right regular
permutation representation.

Usage: python3 gen_catalog.py [OUTPUT_DIR]
"""

import random
import sys
from collections import Counter
from pathlib import Path


class Group:
    """A finite group given by a multiplication function and generators."""

    def __init__(self, name, mul, identity, gens):
        self.name = name
        elems = [identity]
        index = {identity: 0}
        i = 0
        while i < len(elems):
            x = elems[i]
            for g in gens:
                y = mul(x, g)
                if y not in index:
                    index[y] = len(elems)
                    elems.append(y)
            i += 1
        self.elems = elems
        self.index = index
        self.n = len(elems)
        self.table = [[index[mul(a, b)] for b in elems] for a in elems]
        self.gens = [index[g] for g in gens]

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self.table[a].index(0)

    def check_associative(self, trials=4000, seed=1):
        rng = random.Random(seed)
        m = self.mul
        for _ in range(trials):
            a, b, c = (rng.randrange(self.n) for _ in range(3))
            assert m(m(a, b), c) == m(a, m(b, c)), f"{self.name}: not associative"

    def order_of(self, a):
        k, x = 1, a
        while x != 0:
            x = self.mul(x, a)
            k += 1
        return k

    def signature(self):
        """Isomorphism invariants used to tell same-order groups apart."""
        n, m = self.n, self.mul
        inv = [self.inv(a) for a in range(n)]
        seen = [False] * n
        class_sizes = []
        for a in range(n):
            if seen[a]:
                continue
            cls = {m(m(inv[g], a), g) for g in range(n)}
            for c in cls:
                seen[c] = True
            class_sizes.append((self.order_of(a), len(cls)))
        centre = sum(1 for a in range(n) if all(m(a, g) == m(g, a) for g in range(n)))
        derived = {0}
        frontier = [m(m(inv[a], inv[b]), m(a, b)) for a in range(n) for b in range(n)]
        derived.update(frontier)
        grew = True
        while grew:
            grew = False
            for x in list(derived):
                for y in list(derived):
                    z = m(x, y)
                    if z not in derived:
                        derived.add(z)
                        grew = True
        squares = Counter(m(a, a) for a in range(n))
        return (
            len(class_sizes),
            tuple(sorted(class_sizes)),
            centre,
            len(derived),
            tuple(sorted(squares.values())),
        )

    def cycle_strings(self):
        out = []
        for g in self.gens:
            img = [self.mul(x, g) for x in range(self.n)]
            done = [False] * self.n
            cycles = []
            for s in range(self.n):
                if done[s] or img[s] == s:
                    continue
                cyc = []
                x = s
                while not done[x]:
                    done[x] = True
                    cyc.append(x + 1)
                    x = img[x]
                cycles.append("(" + ",".join(map(str, cyc)) + ")")
            if cycles:
                out.append("".join(cycles))
        return out


def abelian_by_cyclic(name, ns, mat, m, w):
    """A = Z/n_1 x ... x Z/n_k extended by <c> of order m (mod A):
    c v c^-1 = M v and c^m = w, with M^m = 1 and M w = w."""
    k = len(ns)

    def act(v, j):
        for _ in range(j):
            v = tuple(sum(mat[i][t] * v[t] for t in range(k)) % ns[i] for i in range(k))
        return v

    def mul(x, y):
        (v, j), (u, l) = x, y
        s = tuple((a + b) % n for a, b, n in zip(v, act(u, j), ns))
        if j + l >= m:
            s = tuple((a + b) % n for a, b, n in zip(s, w, ns))
        return (s, (j + l) % m)

    zero = tuple(0 for _ in ns)
    gens = [(tuple(1 % ns[t] if t == i else 0 for t in range(k)), 0) for i in range(k)]
    gens.append((zero, 1 % m))
    return Group(name, mul, (zero, 0), gens)


def metacyclic(name, n, m, r, t=0):
    """<a, b | a^n, b^m = a^t, b a b^-1 = a^r>."""
    return abelian_by_cyclic(name, [n], [[r % n]], m, [t % n])


def cyclic(n):
    return metacyclic(f"C{n}", n, 1, 1)


def dicyclic(k, name=None):
    return metacyclic(name or f"Dic{k}", 2 * k, 2, -1, k)


def dihedral(order):
    return metacyclic(f"D{order}", order // 2, 2, -1)


def abelian(ns, name=None):
    k = len(ns)
    ident = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    return abelian_by_cyclic(name or " x ".join(f"C{n}" for n in ns), ns, ident, 1, [0] * k)


def direct(name, *factors):
    def mul(x, y):
        return tuple(f.mul(a, b) for f, a, b in zip(factors, x, y))

    gens = []
    for i, f in enumerate(factors):
        for g in f.gens:
            gens.append(tuple(g if j == i else 0 for j in range(len(factors))))
    return Group(name, mul, tuple(0 for _ in factors), gens)


def semidirect(name, h, images, m):
    """H x| <c>, c of order m acting by the automorphism sending the i-th
    generator of H to images[i] (elements of H)."""
    # extend the generator images to all of H by the closure order
    phi = {0: 0}
    for x in range(h.n):
        for gi, g in enumerate(h.gens):
            y = h.mul(x, g)
            if y not in phi:
                phi[y] = h.mul(phi[x], images[gi])
    for a in range(h.n):
        for b in range(h.n):
            assert phi[h.mul(a, b)] == h.mul(phi[a], phi[b]), f"{name}: not a homomorphism"

    def act(x, j):
        for _ in range(j):
            x = phi[x]
        return x

    def mul(x, y):
        (a, j), (b, l) = x, y
        return (h.mul(a, act(b, j)), (j + l) % m)

    gens = [(g, 0) for g in h.gens] + [(0, 1)]
    return Group(name, mul, (0, 0), gens)


def matrix_group(name, p, mats):
    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % p, (a * f + b * h) % p, (c * e + d * g) % p, (c * f + d * h) % p)

    return Group(name, mul, (1, 0, 0, 1), [tuple(x % p for x in mm) for mm in mats])


def perm_group(name, degree, gens):
    def mul(x, y):
        return tuple(y[x[i]] for i in range(degree))

    return Group(name, mul, tuple(range(degree)), gens)


def from_cycles(degree, cycles):
    img = list(range(degree))
    for cyc in cycles:
        for i, a in enumerate(cyc):
            img[a - 1] = cyc[(i + 1) % len(cyc)] - 1
    return tuple(img)


def elem(g, word):
    """Evaluate a word in the generators of g (list of generator indices)."""
    x = 0
    for i in word:
        x = g.mul(x, g.gens[i])
    return x


def a4():
    return perm_group("A4", 4, [from_cycles(4, [[1, 2, 3]]), from_cycles(4, [[1, 2, 4]])])


def s3():
    return dihedral(6)


def sl23():
    return matrix_group("SL(2,3)", 3, [(0, -1, 1, 0), (1, 1, 0, 1)])


def bin_o():
    return matrix_group("BinO", 7, [(0, 1, 6, 3), (1, 1, 4, 5)])


def q16():
    return dicyclic(4, "Q16")


def c8_c2_2():
    # Q16 = <a, c> with b: a -> a^3, c -> c; the unique non-split C8.C2^2
    q = q16()
    a, c = q.gens
    return semidirect("C8.C2^2", q, [elem(q, [0, 0, 0]), c], 2)


def leq28():
    """(order, index, group) for every group of order at most 28."""
    out = []

    def add(order, index, g, name=None):
        if name:
            g.name = name
        out.append((order, index, g))

    add(1, 1, cyclic(1), "1")
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23):
        add(p, 1, cyclic(p))
    add(4, 1, cyclic(4))
    add(4, 2, abelian([2, 2], "C2 x C2"))
    add(6, 1, s3(), "S3")
    add(6, 2, cyclic(6))
    add(8, 1, cyclic(8))
    add(8, 2, abelian([4, 2]))
    add(8, 3, dihedral(8))
    add(8, 4, dicyclic(2, "Q8"))
    add(8, 5, abelian([2, 2, 2], "C2 x C2 x C2"))
    add(9, 1, cyclic(9))
    add(9, 2, abelian([3, 3]))
    add(10, 1, dihedral(10))
    add(10, 2, cyclic(10))
    add(12, 1, dicyclic(3, "Dic3"))
    add(12, 2, cyclic(12))
    add(12, 3, a4())
    add(12, 4, dihedral(12))
    add(12, 5, abelian([6, 2]))
    add(14, 1, dihedral(14))
    add(14, 2, cyclic(14))
    add(15, 1, cyclic(15))
    add(16, 1, cyclic(16))
    add(16, 2, abelian([4, 4]))
    add(16, 3, abelian_by_cyclic("(C4 x C2) : C2", [4, 2], [[1, 0], [1, 1]], 2, [0, 0]))
    add(16, 4, metacyclic("C4 : C4", 4, 4, 3))
    add(16, 5, abelian([8, 2]))
    add(16, 6, metacyclic("M16", 8, 2, 5))
    add(16, 7, dihedral(16))
    add(16, 8, metacyclic("QD16", 8, 2, 3))
    add(16, 9, q16())
    add(16, 10, abelian([4, 2, 2], "C4 x C2 x C2"))
    add(16, 11, direct("C2 x D8", cyclic(2), dihedral(8)))
    add(16, 12, direct("C2 x Q8", cyclic(2), dicyclic(2)))
    add(16, 13, abelian_by_cyclic("(C4 x C2) : C2", [4, 2], [[1, 2], [0, 1]], 2, [0, 0]))
    add(16, 14, abelian([2, 2, 2, 2], "C2 x C2 x C2 x C2"))
    add(18, 1, dihedral(18))
    add(18, 2, cyclic(18))
    add(18, 3, direct("C3 x S3", cyclic(3), s3()))
    add(18, 4, abelian_by_cyclic("(C3 x C3) : C2", [3, 3], [[-1, 0], [0, -1]], 2, [0, 0]))
    add(18, 5, abelian([6, 3]))
    add(20, 1, dicyclic(5, "Dic5"))
    add(20, 2, cyclic(20))
    add(20, 3, metacyclic("F5", 5, 4, 2))
    add(20, 4, dihedral(20))
    add(20, 5, abelian([10, 2]))
    add(21, 1, metacyclic("C7 : C3", 7, 3, 2))
    add(21, 2, cyclic(21))
    add(22, 1, dihedral(22))
    add(22, 2, cyclic(22))
    add(24, 1, metacyclic("C3 : C8", 3, 8, 2))
    add(24, 2, cyclic(24))
    add(24, 3, sl23())
    add(24, 4, dicyclic(6, "Dic6"))
    add(24, 5, direct("C4 x S3", cyclic(4), s3()))
    add(24, 6, dihedral(24))
    add(24, 7, direct("C2 x Dic3", cyclic(2), dicyclic(3)))
    add(24, 8, abelian_by_cyclic("(C6 x C2) : C2", [3, 2, 2], [[-1, 0, 0], [0, 1, 1], [0, 0, 1]], 2, [0, 1, 0]))
    add(24, 9, abelian([12, 2]))
    add(24, 10, direct("C3 x D8", cyclic(3), dihedral(8)))
    add(24, 11, direct("C3 x Q8", cyclic(3), dicyclic(2)))
    add(24, 12, perm_group("S4", 4, [from_cycles(4, [[1, 2]]), from_cycles(4, [[1, 2, 3, 4]])]))
    add(24, 13, direct("C2 x A4", cyclic(2), a4()))
    add(24, 14, direct("C2 x C2 x S3", abelian([2, 2]), s3()))
    add(24, 15, abelian([6, 2, 2], "C6 x C2 x C2"))
    add(25, 1, cyclic(25))
    add(25, 2, abelian([5, 5]))
    add(26, 1, dihedral(26))
    add(26, 2, cyclic(26))
    add(27, 1, cyclic(27))
    add(27, 2, abelian([9, 3]))
    add(27, 3, abelian_by_cyclic("Heisenberg(3)", [3, 3], [[1, 1], [0, 1]], 3, [0, 0]))
    add(27, 4, metacyclic("C9 : C3", 9, 3, 4))
    add(27, 5, abelian([3, 3, 3], "C3 x C3 x C3"))
    add(28, 1, dicyclic(7, "Dic7"))
    add(28, 2, cyclic(28))
    add(28, 3, dihedral(28))
    add(28, 4, abelian([14, 2]))
    return out


def s_positive():
    """Named groups of order 32 to 100, mostly with s > 0."""
    c = cyclic
    return [
        (32, 20, dicyclic(8, "Q32")),
        (32, 41, direct("C2 x Q16", c(2), q16())),
        (32, 44, c8_c2_2()),
        (40, 1, metacyclic("C5 : C8", 5, 8, -1)),
        (40, 4, dicyclic(10, "Dic10")),
        (40, 7, direct("C2 x Dic5", c(2), dicyclic(5))),
        (48, 8, dicyclic(12, "Dic12")),
        (48, 27, direct("C3 x Q16", c(3), q16())),
        (48, 28, bin_o()),
        (48, 34, direct("C2 x Dic6", c(2), dicyclic(6))),
        (52, 1, dicyclic(13, "Dic13")),
        (56, 3, dicyclic(14, "Dic14")),
        (60, 2, direct("C3 x Dic5", c(3), dicyclic(5))),
        (60, 3, dicyclic(15, "Dic15")),
        (64, 54, dicyclic(16, "Q64")),
        (64, 120, direct("C4 x Q16", c(4), q16())),
        (64, 188, direct("C2 x Q32", c(2), dicyclic(8))),
        (64, 252, direct("C2 x C2 x Q16", abelian([2, 2]), q16())),
        (68, 1, dicyclic(17, "Dic17")),
        (72, 4, dicyclic(18, "Dic18")),
        (72, 26, direct("C3 x Dic6", c(3), dicyclic(6))),
        (80, 1, metacyclic("C5 : C16", 5, 16, -1)),
        (80, 8, dicyclic(20, "Dic20")),
        (80, 11, direct("C4 x Dic5", c(4), dicyclic(5))),
        (80, 27, direct("C5 x Q16", c(5), q16())),
        (80, 35, direct("C2 x Dic10", c(2), dicyclic(10))),
        (80, 43, direct("C2 x C2 x Dic5", abelian([2, 2]), dicyclic(5))),
        (84, 5, dicyclic(21, "Dic21")),
        (88, 3, dicyclic(22, "Dic22")),
        (96, 8, dicyclic(24, "Dic24")),
        (96, 63, direct("C3 x Q32", c(3), dicyclic(8))),
        (96, 75, direct("C4 x Dic6", c(4), dicyclic(6))),
        (96, 112, direct("C2 x Dic12", c(2), dicyclic(12))),
        (96, 124, direct("Q16 x S3", q16(), s3())),
        (96, 181, direct("C6 x Q16", c(6), q16())),
        (96, 188, direct("C2 x BinO", c(2), bin_o())),
        (96, 205, direct("C2 x C2 x Dic6", abelian([2, 2]), dicyclic(6))),
        (100, 1, dicyclic(25, "Dic25")),
        (100, 6, direct("C5 x Dic5", c(5), dicyclic(5))),
    ]


# number of groups of each order up to 28
GROUP_COUNTS = {
    1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2, 11: 1, 12: 5, 13: 1, 14: 2,
    15: 1, 16: 14, 17: 1, 18: 5, 19: 1, 20: 5, 21: 2, 22: 2, 23: 1, 24: 15, 25: 2, 26: 2,
    27: 5, 28: 4,
}


def check(entries, complete):
    by_order = {}
    for order, index, g in entries:
        assert g.n == order, f"{g.name}: order {g.n}, expected {order}"
        g.check_associative()
        by_order.setdefault(order, []).append((index, g))
    for order, gs in by_order.items():
        if complete:
            assert len(gs) == GROUP_COUNTS[order], f"order {order}: {len(gs)} groups"
        sigs = {}
        for index, g in gs:
            s = g.signature()
            assert s not in sigs, f"({order},{index}) {g.name} looks like ({order},{sigs[s]})"
            sigs[s] = index


HEADER = """\
# {title}
#
# Generated by tools/gen_catalog.py; do not edit by hand.
#
# Each group is built from a standard presentation and written as its
# right regular permutation representation on points 1..|G|.
# The (order, index) keys are the SmallGroups library labels; names are
# the usual structure descriptions.
#
# Provenance of the presentations:
#   Cn              <a | a^n>
#   D2n             <a, b | a^n, b^2, b a b^-1 = a^-1>
#   Dic_k, Q_2^n    <a, b | a^2k, b^2 = a^k, b a b^-1 = a^-1>
#   metacyclic      <a, b | a^n, b^m = a^t, b a b^-1 = a^r>
#   A : C           abelian A extended by a cyclic group acting by a matrix
#   H x K           direct product
#   C8.C2^2         Q16 = <a, c> extended by an involution a -> a^3, c -> c
#   SL(2,3)         [[0,-1],[1,0]], [[1,1],[0,1]] over F_3
#   BinO            [[0,1],[6,3]], [[1,1],[4,5]] in SL(2,7)
#   A4, S4          (1,2,3), (1,2,4) and (1,2), (1,2,3,4)
# Same-order entries have pairwise distinct invariants (class sizes with
# element orders, centre, derived subgroup, square map), and for orders
# up to 28 the entry count equals the number of groups of that order.
"""


def describe(order, index, g):
    lines = [f"group {order} {index} {g.name}"]
    lines += [f"gen {c}" for c in g.cycle_strings()]
    return "\n".join(lines)


def write(path, title, entries):
    body = "\n\n".join(describe(o, i, g) for o, i, g in sorted(entries, key=lambda e: e[:2]))
    path.write_text(HEADER.format(title=title) + "\n" + body + "\n")


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent
    small = leq28()
    check(small, complete=True)
    big = s_positive()
    check(big, complete=False)
    write(out / "leq28.cat", "Every group of order at most 28.", small)
    write(out / "s-positive-100.cat", "Named groups of order 32 to 100, mostly with s(G) > 0.", big)
    print(f"wrote {len(small)} + {len(big)} groups to {out}")


if __name__ == "__main__":
    main()
