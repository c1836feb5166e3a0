"""Buchberger engine on packed-monomial polynomials.

Normal-strategy pair selection (minimal lcm in the ring order, a heap pop on
packed keys), the Gebauer-Moeller pair criteria, full normal forms via a
lazy max-heap over the working tail, and a final interreduction to the
unique reduced Groebner basis.
"""

from __future__ import annotations

import heapq
from fractions import Fraction

from .errors import DomainError
from .poly import Polynomial, Ring


def _nf_dict(fdict, reducers, ring, skip=None):
    """Full normal form of {key: coeff} against monic reducers.

    reducers: list of (lm_key, lm_exp_part, lm_tag, tail_items) with each
    reducer monic and tail_items its non-lead (key, coeff) pairs.
    """
    codec = ring.codec
    p = ring.field.p
    one = codec.one
    expmask = codec.expmask
    guard = codec.guard
    elim = codec.nelim
    tagshift = codec.tagshift

    work = dict(fdict)
    heap = [-k for k in work]
    heapq.heapify(heap)
    rem = {}
    while heap:
        k = -heapq.heappop(heap)
        c = work.pop(k, None)
        if c is None:
            continue
        ke = k & expmask
        ktag = k >> tagshift if elim else 0
        hit = None
        for idx, red in enumerate(reducers):
            if skip is not None and skip[idx]:
                continue
            # red[1] is (lm & expmask) | guard; test lm | k slotwise
            if ((red[1] - ke) & guard) == guard and (not elim or red[2] <= ktag):
                hit = red
                break
        if hit is None:
            rem[k] = c
            continue
        shift = k - hit[0]  # equals (quotient key) - ONE, the term-shift offset
        if p:
            for kk, cc in hit[3]:
                nk = kk + shift
                v = work.get(nk)
                if v is None:
                    v = -c * cc % p
                    if v:
                        work[nk] = v
                        heapq.heappush(heap, -nk)
                else:
                    v = (v - c * cc) % p
                    if v:
                        work[nk] = v
                    else:
                        del work[nk]
        else:
            for kk, cc in hit[3]:
                nk = kk + shift
                v = work.get(nk)
                if v is None:
                    v = -c * cc
                    if v:
                        work[nk] = v
                        heapq.heappush(heap, -nk)
                else:
                    v = v - c * cc
                    if v:
                        work[nk] = v
                    else:
                        del work[nk]
    return rem


def _make_reducer(g: Polynomial):
    codec = g.ring.codec
    lm = g.lm()
    tail = [(k, c) for k, c in g._t.items() if k != lm]
    return (lm, (lm & codec.expmask) | codec.guard, codec.tag(lm), tail)


def normal_form(f: Polynomial, basis) -> Polynomial:
    """Remainder of f under full reduction by the (nonzero) basis polynomials."""
    basis = [g for g in basis if g]
    if not basis or not f:
        return f
    ring = f.ring
    reducers = [_make_reducer(g.monic()) for g in basis]
    return Polynomial(ring, _nf_dict(f._t, reducers, ring))


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """S-polynomial of two nonzero polynomials."""
    ring = f.ring
    codec = ring.codec
    lf, lg = f.lm(), g.lm()
    tau = codec.lcm(lf, lg)
    mf = codec.quo(tau, lf)
    mg = codec.quo(tau, lg)
    fm = f.monic()
    gm = g.monic()
    one = codec.one
    p = ring.field.p
    out = {}
    for k, c in fm._t.items():
        out[k + mf - one] = c
    for k, c in gm._t.items():
        nk = k + mg - one
        v = out.get(nk)
        if v is None:
            out[nk] = -c % p if p else -c
        else:
            v = (v - c) % p if p else v - c
            if v:
                out[nk] = v
            else:
                del out[nk]
    return Polynomial(ring, out)


def buchberger(polys) -> list:
    """Reduced Groebner basis of the ideal generated by `polys`.

    Normal selection strategy with the Gebauer-Moeller criteria; returns the
    unique reduced basis, sorted by increasing lead monomial.
    """
    polys = [f for f in polys if f]
    if not polys:
        return []
    ring = polys[0].ring
    codec = ring.codec
    lcm = codec.lcm
    one = codec.one

    basis = []      # Polynomial, append-only
    red = []        # parallel reducer tuples
    dead = []       # parallel flags; dead entries make no pairs / reduce nothing
    lms = []        # parallel packed lead monomials
    pairheap = []   # (lcm_key, i, j) with i < j
    lcms = {}       # (i, j) -> lcm key; pairs absent here are cancelled

    def update(h: Polynomial):
        """Gebauer-Moeller incorporation of a new basis element."""
        t = len(basis)
        lmh = h.lm()
        cand = sorted((lcm(lms[i], lmh), i) for i in range(t) if not dead[i])
        kept = []
        for pos, (tau, i) in enumerate(cand):
            coprime = tau == lms[i] + lmh - one
            if not coprime:
                rest = cand[pos + 1:]
                if any(codec.divides(t2, tau) for t2, _ in rest) or any(
                    codec.divides(t2, tau) for t2, _ in kept
                ):
                    continue
            kept.append((tau, i))
        # prune old pairs by the chain criterion
        for (i, j), tau in list(lcms.items()):
            if (
                codec.divides(lmh, tau)
                and lcm(lms[i], lmh) != tau
                and lcm(lms[j], lmh) != tau
            ):
                del lcms[(i, j)]
        # register surviving non-coprime new pairs
        for tau, i in kept:
            if tau != lms[i] + lmh - one:
                lcms[(i, t)] = tau
                heapq.heappush(pairheap, (tau, i, t))
        # retire basis elements whose lead monomial the new one divides
        for i in range(t):
            if not dead[i] and codec.divides(lmh, lms[i]):
                dead[i] = True
        basis.append(h)
        red.append(_make_reducer(h))
        dead.append(False)
        lms.append(lmh)

    for f in sorted(polys, key=lambda g: g.lm()):
        r = Polynomial(ring, _nf_dict(f._t, red, ring, skip=dead)) if basis else f
        if r:
            update(r.monic())

    while pairheap:
        tau, i, j = heapq.heappop(pairheap)
        if lcms.pop((i, j), None) is None:
            continue
        s = s_polynomial(basis[i], basis[j])
        if not s:
            continue
        r = Polynomial(ring, _nf_dict(s._t, red, ring, skip=dead))
        if r:
            update(r.monic())

    return interreduce([g for g, d in zip(basis, dead) if not d])


def interreduce(polys) -> list:
    """Turn a Groebner generating set into the reduced Groebner basis."""
    polys = [f.monic() for f in polys if f]
    # minimalize: drop elements whose lead monomial another one divides
    polys.sort(key=lambda g: g.lm())
    minimal = []
    for g in polys:
        lm = g.lm()
        if not any(g2.ring.codec.divides(g2.lm(), lm) for g2 in minimal):
            minimal.append(g)
    if not minimal:
        return []
    ring = minimal[0].ring
    out = []
    for idx, g in enumerate(minimal):
        others = [_make_reducer(h) for k, h in enumerate(minimal) if k != idx]
        r = Polynomial(ring, _nf_dict(g._t, others, ring))
        out.append(r.monic())
    out.sort(key=lambda g: g.lm())
    return out


def is_groebner_basis(polys) -> bool:
    """Buchberger criterion: every S-polynomial reduces to zero."""
    polys = [f for f in polys if f]
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if normal_form(s_polynomial(polys[i], polys[j]), polys):
                return False
    return True


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient f / g when g divides f exactly; DomainError otherwise."""
    if not g:
        raise DomainError("division by the zero polynomial")
    ring = f.ring
    if ring != g.ring:
        raise DomainError("ring mismatch in division")
    codec = ring.codec
    p = ring.field.p
    gm = g.monic()
    glm = gm.lm()
    gitems = list(gm._t.items())
    scale = ring.field.inv(g.lc())
    work = dict(f._t)
    one = codec.one
    quot = {}
    while work:
        k = max(work)
        c = work[k]
        if not codec.divides(glm, k):
            raise DomainError("polynomial division is not exact")
        qk = k - glm + one
        quot[qk] = c
        shift = qk - one
        if p:
            for kk, cc in gitems:
                nk = kk + shift
                v = work.get(nk)
                v = (0 if v is None else v) - c * cc
                v %= p
                if v:
                    work[nk] = v
                elif nk in work:
                    del work[nk]
        else:
            for kk, cc in gitems:
                nk = kk + shift
                v = work.get(nk, 0) - c * cc
                if v:
                    work[nk] = v
                elif nk in work:
                    del work[nk]
    if p:
        quot = {k: c * scale % p for k, c in quot.items()}
    else:
        quot = {k: c * scale for k, c in quot.items()}
    return Polynomial(ring, quot)


def divides_poly(g: Polynomial, f: Polynomial) -> bool:
    """True when g divides f exactly."""
    try:
        exact_divide(f, g)
        return True
    except DomainError:
        return False
