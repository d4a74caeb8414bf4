# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting kernel; same algorithm as ``_pykernel.py``."""

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy

cdef enum:
    ATOM = 0
    NOT = 1
    AND = 2
    OR = 3
    FORALL = 4
    EXISTS = 5


cdef struct Machine:
    const int* op
    const int* na
    const int* nb
    const int* wstart
    const int* lslot
    const int* lpow
    const int* mult
    const int* powtab
    int* env
    int N
    int identity


cdef bint ev(Machine* M, int k) noexcept nogil:
    cdef int code = M.op[k]
    cdef int w, l, acc, g, slot
    cdef bint want
    if code == ATOM:
        w = M.na[k]
        acc = M.identity
        for l in range(M.wstart[w], M.wstart[w + 1]):
            acc = M.mult[acc * M.N + M.powtab[M.lpow[l] * M.N + M.env[M.lslot[l]]]]
        return acc == M.identity
    if code == NOT:
        return not ev(M, M.na[k])
    if code == AND:
        return ev(M, M.na[k]) and ev(M, M.nb[k])
    if code == OR:
        return ev(M, M.na[k]) or ev(M, M.nb[k])
    slot = M.nb[k]
    want = code == EXISTS
    for g in range(M.N):
        M.env[slot] = g
        if ev(M, M.na[k]) == want:
            return want
    return not want


def count_range(
    const int[::1] op,
    const int[::1] na,
    const int[::1] nb,
    const int[::1] wstart,
    const int[::1] lslot,
    const int[::1] lpow,
    const int[::1] mult,
    const int[::1] powtab,
    const int[::1] env0,
    int N,
    int identity,
    int m,
    int base,
    int root,
    long long lo,
    long long hi,
):
    cdef Machine M
    cdef long long idx, t, count = 0
    cdef int i
    cdef int size = env0.shape[0]
    cdef int* env = <int*> malloc(max(size, 1) * sizeof(int))
    if env == NULL:
        raise MemoryError()
    if size:
        memcpy(env, &env0[0], size * sizeof(int))
    # empty memoryviews have no first element to point at
    cdef int dummy = 0
    M.op = &op[0]
    M.na = &na[0]
    M.nb = &nb[0]
    M.wstart = &wstart[0]
    M.lslot = &lslot[0] if lslot.shape[0] else &dummy
    M.lpow = &lpow[0] if lpow.shape[0] else &dummy
    M.mult = &mult[0]
    M.powtab = &powtab[0] if powtab.shape[0] else &dummy
    M.env = env
    M.N = N
    M.identity = identity
    try:
        with nogil:
            for idx in range(lo, hi):
                t = idx
                for i in range(m - 1, -1, -1):
                    env[base + i] = <int>(t % N)
                    t = t // N
                if ev(&M, root):
                    count += 1
    finally:
        free(env)
    return count
