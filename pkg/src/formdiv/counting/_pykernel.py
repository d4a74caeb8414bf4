"""Pure-Python counting kernel; mirrors ``_kernel.pyx`` line for line."""

from __future__ import annotations

from ._program import AND, ATOM, EXISTS, FORALL, NOT, BoundProgram


def count_range(bp: BoundProgram, lo: int, hi: int) -> int:
    p = bp.program
    op, na, nb = p.op, p.a, p.b
    wstart, lslot, lpow = p.wstart, p.lslot, p.lpow
    N, e = bp.order, bp.identity
    mult = list(bp.mult)
    powtab = list(bp.powtab)
    env = list(bp.env0)
    m, base = p.m, p.free_base

    def ev(k: int) -> bool:
        code = op[k]
        if code == ATOM:
            w = na[k]
            acc = e
            for l in range(wstart[w], wstart[w + 1]):
                acc = mult[acc * N + powtab[lpow[l] * N + env[lslot[l]]]]
            return acc == e
        if code == NOT:
            return not ev(na[k])
        if code == AND:
            return ev(na[k]) and ev(nb[k])
        if code == FORALL or code == EXISTS:
            slot, want = nb[k], code == EXISTS
            for g in range(N):
                env[slot] = g
                if ev(na[k]) == want:
                    return want
            return not want
        return ev(na[k]) or ev(nb[k])

    count = 0
    for idx in range(lo, hi):
        t = idx
        for i in range(m - 1, -1, -1):
            env[base + i] = t % N
            t //= N
        if ev(p.root):
            count += 1
    return count
