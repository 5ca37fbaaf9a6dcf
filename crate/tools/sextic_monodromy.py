"""Braid monodromy of the six-cuspidal sextic f2^3 + f3^2 = 0.

Critical values of the projection (x, y) -> x come from the exact
discriminant; the six y-roots are tracked numerically around each one and
the motion is read off as braid words (strands ordered by real part).
The product of the factors must be the full twist: the Rust side re-checks
this exactly with the Artin action before using the factorization.

Usage: python3 tools/sextic_monodromy.py OUT.json
"""

import json
import sys

import numpy as np
import sympy as sp

x, y = sp.symbols("x y")

D = 6
MONOMIALS2 = [x**i * y**j for i in range(3) for j in range(3 - i)]
MONOMIALS3 = [x**i * y**j for i in range(4) for j in range(4 - i)]


def candidate(seed):
    """A conic and a cubic with small integer coefficients drawn from `seed`."""
    rng = np.random.default_rng(seed)
    f2 = sum(int(c) * m for c, m in zip(rng.integers(-3, 4, len(MONOMIALS2)), MONOMIALS2))
    f3 = sum(int(c) * m for c, m in zip(rng.integers(-3, 4, len(MONOMIALS3)), MONOMIALS3))
    return sp.expand(f2**3 + f3**2)


def critical_values(f):
    """Roots of the discriminant with multiplicities, or None if the projection is not generic."""
    poly = sp.Poly(f, y)
    if poly.degree() != D or not poly.LC().is_number:
        return None
    disc = sp.Poly(sp.discriminant(f, y), x)
    if disc.degree() != D * (D - 1):
        return None
    shape = sorted((sp.degree(g, x), m) for g, m in sp.factor_list(disc.as_expr())[1])
    # Six cusps (multiplicity 3) and twelve simple tangencies, nothing else.
    if shape != [(6, 3), (12, 1)]:
        return None
    points = []
    for factor, mult in sp.factor_list(disc.as_expr())[1]:
        for r in sp.Poly(factor, x).nroots(n=30):
            points.append((complex(r), mult))
    return points


def separation(points):
    xs = [p for p, _ in points]
    return min(abs(a - b) for i, a in enumerate(xs) for b in xs[i + 1 :])


def choose_curve():
    for seed in range(200):
        f = candidate(seed)
        pts = critical_values(f)
        if pts is not None and separation(pts) > 0.1 and max(abs(p) for p, _ in pts) < 20:
            return seed, f, pts
    raise SystemExit("no generic candidate found")


SEED, F, POINTS = choose_curve()
COEFFS = [sp.lambdify(x, c, "numpy") for c in sp.Poly(F, y).all_coeffs()]


def roots_at(z):
    return np.roots([complex(c(z)) for c in COEFFS])


def track(path, start):
    """Follows the roots along a callable path on [0, 1]; returns the sequence of root tuples."""
    cur = np.array(start)
    out = [cur]
    s, h = 0.0, 1e-3
    while s < 1.0:
        h = min(h, 1.0 - s)
        new = roots_at(path(s + h))
        sep = min(abs(a - b) for i, a in enumerate(cur) for b in cur[i + 1 :])
        # Match each old root to its nearest new root; accept only unambiguous small steps.
        order = [int(np.argmin(abs(new - c))) for c in cur]
        moved = max(abs(new[o] - c) for o, c in zip(order, cur))
        if len(set(order)) == D and moved < sep / 4:
            cur = new[order]
            out.append(cur)
            s += h
            h *= 1.5
        else:
            h /= 2
            assert h > 1e-14, "root tracking stalled"
    return out


def braid_word(states):
    """Crossings of the real-part order; a left-to-right pass below the other point is positive."""
    word = []
    for a, b in zip(states, states[1:]):
        pa = list(np.argsort(a.real, kind="stable"))
        pb = list(np.argsort(b.real, kind="stable"))
        # Sort by bubble swaps from pa to pb, interpolating imaginary parts at the swap.
        cur = pa[:]
        changed = True
        while changed:
            changed = False
            for i in range(D - 1):
                if pb.index(cur[i]) > pb.index(cur[i + 1]):
                    u, v = cur[i], cur[i + 1]
                    # u passes from left of v to right of v.
                    word.append(-(i + 1) if (a[u].imag + b[u].imag) > (a[v].imag + b[v].imag) else (i + 1))
                    cur[i], cur[i + 1] = v, u
                    changed = True
    return word


def inverse(w):
    return [-l for l in reversed(w)]


def free_reduce(w):
    out = []
    for l in w:
        if out and out[-1] == -l:
            out.pop()
        else:
            out.append(l)
    return out


def monodromy(pts, base, radius):
    start = roots_at(base)
    factors = []
    order = sorted(pts, key=lambda p: np.angle(p[0] - base))
    for p, mult in order:
        direction = (p - base) / abs(p - base)
        near = p - radius * direction
        seg = track(lambda s: base + s * (near - base), start)
        circle = track(lambda s: p - radius * direction * np.exp(2j * np.pi * s), seg[-1])
        # Back along the segment: the root labels at the end of the circle are permuted.
        a = braid_word(seg)
        c = braid_word(circle)
        word = free_reduce(a + c + inverse(a))
        # A cusp is a conjugate of s^3, a simple tangency a conjugate of s.
        assert sum(1 if l > 0 else -1 for l in word) == mult, (p, word)
        factors.append({"word": word, "multiplicity": mult})
    return order, factors


def main():
    xs = np.array([p for p, _ in POINTS])
    base = complex(xs.real.mean() + 0.1234, xs.imag.min() - 3.0)
    radius = separation(POINTS) / 10
    _, factors = monodromy(POINTS, base, radius)
    out = {"strands": D, "factors": [f["word"] for f in factors], "projective": False}
    with open(sys.argv[1], "w") as fh:
        json.dump(out, fh, indent=2)
        fh.write("\n")
    print(f"seed {SEED}: f = {F}", file=sys.stderr)
    print(f"{len(factors)} factors, lengths {[len(f['word']) for f in factors]}", file=sys.stderr)
    print(f"multiplicities {[f['multiplicity'] for f in factors]}", file=sys.stderr)


if __name__ == "__main__":
    main()
