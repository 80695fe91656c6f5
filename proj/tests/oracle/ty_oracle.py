#!/usr/bin/env python3
# Independent numpy model of the TY algebra for cyclic G = Z_n with the
# standard bicharacter. Writes structure constants, the star and antipode
# tables, the Haar functional and counital dimensions as JSON.
import json
import sys

import numpy as np
import scipy.linalg as sl

n = int(sys.argv[1])
tsign = int(sys.argv[2])
tau = tsign / np.sqrt(n)
M = n


def chi(g, h):
    return np.exp(2j * np.pi * g * h / n)


dH = [n + 1] * n + [2 * n]
off = [0]
for d in dH:
    off.append(off[-1] + d * d)
D = off[-1]


def U(x, a, b):
    return off[x] + a * dH[x] + b


units = [(x, a, b) for x in range(n + 1) for a in range(dH[x]) for b in range(dH[x])]


def circ(x, a, y, b):
    r = {}
    if x < n and y < n:
        g, h = x, y
        if a < n and b < n:
            if b == (h + a) % n:
                r[((g + h) % n, b)] = 1
        elif a == n and b == n:
            r[((g + h) % n, n)] = 1
    elif x == M and y < n:
        g = y
        if a < n:
            if b == n:
                r[(M, a)] = chi(g, a)
        else:
            k = a - n
            if b < n and b == (g + k) % n:
                r[(M, n + (g + k) % n)] = 1
    elif x < n and y == M:
        g = x
        if b >= n:
            if a == n:
                r[(M, b)] = chi(g, b - n)
        else:
            if a == b:
                r[(M, (b - g) % n)] = 1
    else:
        if a < n and b >= n:
            h, k = a, b - n
            r[((k - h) % n, k)] = 1
        elif a >= n and b < n and a - n == b:
            for g in range(n):
                r[(g, n)] = tau * np.conj(chi(g, b))
    return r


T = np.zeros((D, D, D), complex)
for i, (x, a, b) in enumerate(units):
    for j, (y, c, d) in enumerate(units):
        p = circ(x, a, y, c)
        q = circ(x, b, y, d)
        for (z, s), pc in p.items():
            for (z2, t), qc in q.items():
                if z == z2:
                    T[i, j, U(z, s, t)] += pc * np.conj(qc)

one = np.zeros(D, complex)
for a in range(n + 1):
    for b in range(n + 1):
        one[U(0, a, b)] = 1
Del = np.zeros((D, D, D), complex)
for i, (x, a, b) in enumerate(units):
    for c in range(dH[x]):
        Del[i, U(x, a, c), U(x, c, b)] = 1
eps = np.array([1.0 if a == b else 0 for (x, a, b) in units], complex)

# star(v) = St @ conj(v), S(v) = Sm @ v, read off the explicit formulas
Sm = np.zeros((D, D), complex)
St = np.zeros((D, D), complex)
for i, (x, a, b) in enumerate(units):
    if x < n:
        g = x
        ng = (-g) % n

        def f(h):
            return n if h == n else (h - g) % n

        Sm[U(ng, f(b), f(a)), i] = 1
        St[U(ng, f(a), f(b)), i] = 1
    else:
        ga, gb = a < n, b < n
        A = a if ga else a - n
        Bv = b if gb else b - n
        if ga and gb:
            Sm[U(M, n + Bv, n + A), i] = 1
            St[U(M, n + A, n + Bv), i] = 1
        if ga and not gb:
            Sm[U(M, Bv, n + A), i] = 1 / tau
            St[U(M, n + A, Bv), i] = tau
        if not ga and gb:
            Sm[U(M, n + Bv, A), i] = tau
            St[U(M, A, n + Bv), i] = 1 / tau
        if not ga and not gb:
            Sm[U(M, Bv, A), i] = 1
            St[U(M, A, Bv), i] = 1

D1 = np.einsum('k,kpq->pq', one, Del)
E = np.eye(D)


def eps_t(b):
    X = np.einsum('ac,ajk,j->kc', D1, T, b)
    return np.einsum('kc,k->c', X, eps)


def eps_s(b):
    Y = np.einsum('ac,jck,j->ak', D1, T, b)
    return np.einsum('ak,k->a', Y, eps)


Et = np.array([eps_t(E[i]) for i in range(D)])
rows, rhs = [], []
for i, (x, a, b) in enumerate(units):
    Mi = np.zeros((D, D), complex)
    for c in range(dH[x]):
        Mi[:, U(x, c, b)] += E[U(x, a, c)] - Et[U(x, a, c)]
    rows.append(Mi)
    rhs.append(np.zeros(D))
rows.append((Sm - np.eye(D)).T)
rhs.append(np.zeros(D))
rows.append(Et)
rhs.append(eps)
rows.append(D1.copy())
rhs.append(one)
A = np.vstack(rows)
r = np.concatenate(rhs)
h = np.linalg.lstsq(A, r, rcond=None)[0]
nullity = sl.null_space(A).shape[1]

Bt = np.array([eps_t(E[i]) for i in range(D)]).T
Bs = np.array([eps_s(E[i]) for i in range(D)]).T
rt = np.linalg.matrix_rank(Bt, 1e-8)
rs = np.linalg.matrix_rank(Bs, 1e-8)
cap = rt + rs - np.linalg.matrix_rank(np.hstack([Bt, Bs]), 1e-8)
C = np.concatenate([(T[:, j, :] - T[j, :, :]).T for j in range(D)], axis=0)
zdim = D - np.linalg.matrix_rank(C, 1e-8)


def sparse3(X):
    idx = np.argwhere(np.abs(X) > 1e-12)
    return [[int(i), int(j), int(k), float(X[i, j, k].real), float(X[i, j, k].imag)] for i, j, k in idx]


def sparse_cols(X):
    out = []
    for i in range(D):
        for k in np.nonzero(np.abs(X[:, i]) > 1e-12)[0]:
            out.append([int(i), int(k), float(X[k, i].real), float(X[k, i].imag)])
    return out


json.dump({
    "n": n, "tau_sign": tsign, "dim": D,
    "product": sparse3(T),
    "star": sparse_cols(St),
    "antipode": sparse_cols(Sm),
    "haar": [[float(v.real), float(v.imag)] for v in h],
    "haar_residual": float(np.abs(A @ h - r).max()),
    "haar_nullity": int(nullity),
    "dim_bt": int(rt), "dim_bs": int(rs), "dim_cap": int(cap), "dim_center": int(zdim),
}, sys.stdout)
