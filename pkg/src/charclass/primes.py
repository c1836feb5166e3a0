"""Primality testing and random prime sampling for coefficient fields."""

# Deterministic Miller-Rabin witness set, valid for all n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n == q:
            return True
        if n % q == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def random_prime(rng, lo: int = 1 << 29, hi: int = 1 << 31) -> int:
    """A uniform-ish random prime in (lo, hi), sampled by rejection."""
    while True:
        c = rng.randrange(lo + 1, hi) | 1
        if is_prime(c):
            return c
