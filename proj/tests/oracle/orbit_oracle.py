#!/usr/bin/env python3
# Brute-force orbit counts for both classifications. Groups are tuples,
# subgroups come from closed subsets, orbits from BFS over the whole of
# G x G (plus the flip), never from canonical forms.
import itertools
import json
from fractions import Fraction


def elements(factors):
    return list(itertools.product(*[range(n) for n in factors]))


def add(f, a, b):
    return tuple((x + y) % n for x, y, n in zip(a, b, f))


def subgroups(f):
    G = elements(f)
    zero = tuple(0 for _ in f)
    found = set()
    rest = [g for g in G if g != zero]
    for r in range(len(rest) + 1):
        for c in itertools.combinations(rest, r):
            S = frozenset(c) | {zero}
            if all(add(f, a, b) in S for a in S for b in S):
                found.add(S)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def perp(f, M, K):
    G = elements(f)

    def pair(a, b):
        return sum(Fraction(a[i] * b[j]) * M[i][j] for i in range(len(f)) for j in range(len(f))) % 1

    return frozenset(g for g in G if all(pair(k, g) == 0 for k in K))


def cosets(f, K):
    out = set()
    for g in elements(f):
        out.add(frozenset(add(f, g, k) for k in K))
    return sorted(out, key=lambda c: min(c))


def orbits(states, moves):
    seen, count, sizes = set(), 0, []
    for s in states:
        if s in seen:
            continue
        count += 1
        stack, orb = [s], {s}
        while stack:
            t = stack.pop()
            for m in moves:
                u = m(t)
                if u not in orb:
                    orb.add(u)
                    stack.append(u)
        seen |= orb
        sizes.append(orb)
    return count, sizes


def shift_set(f, g, Z):
    return frozenset(frozenset(add(f, g, x) for x in c) for c in Z)


def classify(f, M, max_mults):
    G = elements(f)
    out = []
    for K in subgroups(f):
        Kp = perp(f, M, K)
        C0, C1 = cosets(f, K), cosets(f, Kp)
        self_dual = K == Kp
        moves = [lambda s, g=g: (shift_set(f, g, s[0]), s[1]) for g in G]
        moves += [lambda s, g=g: (s[0], shift_set(f, g, s[1])) for g in G]
        if self_dual:
            moves.append(lambda s: (s[1], s[0]))
        sub0 = [frozenset(c) for r in range(len(C0) + 1) for c in itertools.combinations(C0, r)]
        sub1 = [frozenset(c) for r in range(len(C1) + 1) for c in itertools.combinations(C1, r)]
        states = [(a, b) for a in sub0 for b in sub1 if (a or b) and min(len(a), len(b)) <= 1]
        weak, orbs = orbits(states, moves)
        all0, all1 = frozenset(C0), frozenset(C1)
        listed = set()
        for c in C0:
            listed |= {(frozenset([c]), frozenset()), (frozenset([c]), all1)}
        for c in C1:
            listed |= {(frozenset(), frozenset([c])), (all0, frozenset([c]))}
        coid = sum(1 for o in orbs if o & listed)

        def mult_states(cs, mm):
            return [dict(zip(cs, v)) for v in itertools.product(range(mm + 1), repeat=len(cs))]

        def mshift(g, m):
            return frozenset((frozenset(add(f, g, x) for x in c), v) for c, v in m)

        gD, gI = {}, {}
        for mm in max_mults:
            st = []
            for a in mult_states(C0, mm):
                for b in mult_states(C1, mm):
                    if any(a.values()) or any(b.values()):
                        st.append((frozenset(a.items()), frozenset(b.items())))
            mv = [lambda s, g=g: (mshift(g, s[0]), s[1]) for g in G]
            mv += [lambda s, g=g: (s[0], mshift(g, s[1])) for g in G]
            if self_dual:
                mv.append(lambda s: (s[1], s[0]))
            gD[mm] = orbits(st, mv)[0]
            if self_dual:
                st1 = [frozenset(a.items()) for a in mult_states(C0, mm) if any(a.values())]
                gI[mm] = orbits(st1, [lambda s, g=g: mshift(g, s) for g in G])[0]
        index = {g: i for i, g in enumerate(G)}
        out.append({
            "K": sorted(index[k] for k in K), "K_perp": sorted(index[k] for k in Kp),
            "weak": weak, "coideal": coid,
            "g_type_d": {str(k): v for k, v in gD.items()},
            "g_type_i": {str(k): v for k, v in gI.items()},
        })
    return out


def diag(f):
    return [[Fraction(1, f[i]) if i == j else Fraction(0) for j in range(len(f))] for i in range(len(f))]


cases = {
    "1": ([1], diag([1])),
    "2": ([2], diag([2])),
    "3": ([3], diag([3])),
    "4": ([4], diag([4])),
    "5": ([5], diag([5])),
    "6": ([6], diag([6])),
    "8": ([8], diag([8])),
    "9": ([9], diag([9])),
    "2,2": ([2, 2], diag([2, 2])),
    "2,2/hyperbolic": ([2, 2], [[Fraction(0), Fraction(1, 2)], [Fraction(1, 2), Fraction(0)]]),
    "2,4": ([2, 4], diag([2, 4])),
}
res = {}
for name, (f, M) in cases.items():
    res[name] = {"factors": f, "matrix": [[str(x) for x in r] for r in M], "per_k": classify(f, M, [1, 2])}
json.dump(res, open(__import__("sys").argv[1], "w"), indent=1)
