"""
Sparse arithmetic in towers of real quadratic extensions of Q.

A tower is a tuple of radicands (r0, r1, ...). Generator i denotes the
positive square root of r_i, and r_i is an element of the field generated
by generators 0..i-1 that is not a square there. An element is a sparse
map from a bitmask (a product of distinct generators) to a rational
coefficient; with irreducible radicands this representation is unique,
so an element is zero iff it has no terms.

Terms are stored as tuples of (mask, Fraction) sorted by mask so towers
and elements are hashable; arithmetic works on dicts.
"""

from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Dict, Optional, Tuple

from utils.errors import FieldError

Terms = Tuple[Tuple[int, Fraction], ...]
Tower = Tuple[Terms, ...]
Sparse = Dict[int, Fraction]

ONE: Terms = ((0, Fraction(1)),)
EMPTY: Terms = ()


def freeze(x: Sparse) -> Terms:
    return tuple(sorted((m, c) for m, c in x.items() if c))


def thaw(terms: Terms) -> Sparse:
    return dict(terms)


def top_bit(x: Sparse) -> int:
    """Index of the highest generator used by x, or -1 for rationals."""
    highest = 0
    for m in x:
        highest |= m
    return highest.bit_length() - 1


def _accumulate(out: Sparse, mask: int, value: Fraction) -> None:
    total = out.get(mask, 0) + value
    if total:
        out[mask] = total
    else:
        out.pop(mask, None)


def add(x: Sparse, y: Sparse) -> Sparse:
    out = dict(x)
    for m, c in y.items():
        _accumulate(out, m, c)
    return out


def neg(x: Sparse) -> Sparse:
    return {m: -c for m, c in x.items()}


def sub(x: Sparse, y: Sparse) -> Sparse:
    return add(x, neg(y))


def scale(x: Sparse, k: Fraction) -> Sparse:
    if not k:
        return {}
    return {m: c * k for m, c in x.items()}


@lru_cache(maxsize=65536)
def mono_mul(tower: Tower, m1: int, m2: int) -> Terms:
    """Product of two generator monomials, reduced in the tower."""
    common = m1 & m2
    if not common:
        return ((m1 | m2, Fraction(1)),)
    i = common.bit_length() - 1
    bit = 1 << i
    inner = mono_mul(tower, m1 & ~bit, m2 & ~bit)
    return freeze(mul(tower, thaw(tower[i]), thaw(inner)))


def mul(tower: Tower, x: Sparse, y: Sparse) -> Sparse:
    out: Sparse = {}
    if not x or not y:
        return out
    for m1, c1 in x.items():
        for m2, c2 in y.items():
            c = c1 * c2
            if not (m1 & m2):
                _accumulate(out, m1 | m2, c)
                continue
            for m, k in mono_mul(tower, m1, m2):
                _accumulate(out, m, c * k)
    return out


def split(x: Sparse, i: int) -> Tuple[Sparse, Sparse]:
    """Write x = a + b*g_i where a and b do not use generator i."""
    bit = 1 << i
    a: Sparse = {}
    b: Sparse = {}
    for m, c in x.items():
        if m & bit:
            b[m & ~bit] = c
        else:
            a[m] = c
    return a, b


def join(a: Sparse, b: Sparse, i: int) -> Sparse:
    """Inverse of split: a + b*g_i."""
    out = dict(a)
    bit = 1 << i
    for m, c in b.items():
        _accumulate(out, m | bit, c)
    return out


def inverse(tower: Tower, x: Sparse) -> Sparse:
    if not x:
        raise FieldError("division by zero")
    i = top_bit(x)
    if i < 0:
        return {0: 1 / x[0]}
    a, b = split(x, i)
    r = thaw(tower[i])
    norm = sub(mul(tower, a, a), mul(tower, mul(tower, b, b), r))
    norm_inv = inverse(tower, norm)
    return join(mul(tower, a, norm_inv), neg(mul(tower, b, norm_inv)), i)


def _rational_sqrt(q: Fraction) -> Optional[Fraction]:
    if q < 0:
        return None
    num = isqrt(q.numerator)
    den = isqrt(q.denominator)
    if num * num == q.numerator and den * den == q.denominator:
        return Fraction(num, den)
    return None


def sqrt_in(tower: Tower, x: Sparse, level: int) -> Optional[Sparse]:
    """
    A square root of x inside the field of generators 0..level-1, or None.

    x must only use those generators. The returned root may be negative;
    callers fix the sign.
    """
    if not x:
        return {}
    if level == 0:
        root = _rational_sqrt(x.get(0, Fraction(0)))
        return None if root is None else {0: root}
    i = level - 1
    a, b = split(x, i)
    r = thaw(tower[i])
    if not b:
        root = sqrt_in(tower, a, i)
        if root is not None:
            return root
        # sqrt(a) = c * g_i  iff  a / r_i = c^2
        c = sqrt_in(tower, mul(tower, a, inverse(tower, r)), i)
        if c is None:
            return None
        return join({}, c, i)
    # (u + v g)^2 = a + b g  =>  u^2 = (a +- sqrt(a^2 - b^2 r)) / 2, v = b / 2u
    disc = sub(mul(tower, a, a), mul(tower, mul(tower, b, b), r))
    s = sqrt_in(tower, disc, i)
    if s is None:
        return None
    for root_disc in (s, neg(s)):
        w = scale(add(a, root_disc), Fraction(1, 2))
        u = sqrt_in(tower, w, i)
        if u:
            v = mul(tower, b, inverse(tower, scale(u, Fraction(2))))
            return join(u, v, i)
    return None


def generator(i: int) -> Sparse:
    return {1 << i: Fraction(1)}


def embed(x: Sparse, images: Tuple[Terms, ...], target: Tower) -> Sparse:
    """Rewrite x (over a source tower) into the target tower via generator images."""
    out: Sparse = {}
    for m, c in x.items():
        term: Sparse = {0: c}
        i = 0
        while m:
            if m & 1:
                term = mul(target, term, thaw(images[i]))
            m >>= 1
            i += 1
        out = add(out, term)
    return out


def is_identity(images: Tuple[Terms, ...]) -> bool:
    return all(img == ((1 << i, Fraction(1)),) for i, img in enumerate(images))


def trim(tower: Tower, x: Sparse) -> Tower:
    """Drop trailing generators that x does not use."""
    return tower[: top_bit(x) + 1] if len(tower) > top_bit(x) + 1 else tower


def _square_part(n: int) -> Tuple[int, int]:
    """Split n > 0 as k^2 * m, removing small square factors."""
    k = 1
    root = isqrt(n)
    if root * root == n:
        return root, 1
    p = 2
    while p * p <= n and p < 1000:
        while n % (p * p) == 0:
            n //= p * p
            k *= p
        p += 1 if p == 2 else 2
    return k, n


def normalize_radicand(x: Sparse) -> Tuple[Fraction, Sparse]:
    """
    Write a positive x as c^2 * y with rational c > 0 and y primitive.

    Returns (c, y); sqrt(x) = c * sqrt(y).
    """
    from math import gcd

    num_gcd = 0
    den_lcm = 1
    for c in x.values():
        num_gcd = gcd(num_gcd, c.numerator)
        den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
    content = Fraction(num_gcd, den_lcm)
    primitive = scale(x, 1 / content)
    # content = p/q = (p*q)/q^2 = k^2 * m / q^2
    k, m = _square_part(content.numerator * content.denominator)
    return Fraction(k, content.denominator), scale(primitive, Fraction(m))


def _prefix(short: Tower, long: Tower) -> bool:
    return len(short) <= len(long) and long[: len(short)] == short


def _identity_images(tower: Tower) -> Tuple[Terms, ...]:
    return tuple(freeze(generator(i)) for i in range(len(tower)))


@lru_cache(maxsize=4096)
def merge(t1: Tower, t2: Tower) -> Tuple[Tower, Tuple[Terms, ...], Tuple[Terms, ...]]:
    """
    Smallest common tower built by adjoining t2's radicands to t1 in order.

    Returns (tower, images of t1 generators, images of t2 generators).
    Radicands of t2 that are already squares in the growing tower are
    discarded and their generator maps to the existing positive root.
    """
    if _prefix(t2, t1):
        return t1, _identity_images(t1), _identity_images(t2)
    if _prefix(t1, t2):
        return t2, _identity_images(t1), _identity_images(t2)

    # Imported here: sign decisions need interval evaluation.
    from field.interval import sign_of

    target = list(t1)
    images = []
    for r in t2:
        current = tuple(target)
        radicand = embed(thaw(r), tuple(images), current)
        root = sqrt_in(current, radicand, len(current))
        if root is not None:
            if sign_of(current, freeze(root)) < 0:
                root = neg(root)
            images.append(freeze(root))
        else:
            target.append(freeze(radicand))
            images.append(freeze(generator(len(target) - 1)))
    tower = tuple(target)
    return tower, _identity_images(t1), tuple(images)
