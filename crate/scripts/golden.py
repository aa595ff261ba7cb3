#!/usr/bin/env python3
"""Regenerates crates/core/golden/*.txt from the closed-form identities.

Independent of the Rust code: polynomials in the e basis are dicts from
partition tuples to ints, multiplied by concatenating partitions.
"""
from collections import Counter, defaultdict
from fractions import Fraction
from math import factorial
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "crates" / "core" / "golden"


def partitions(n, cap=None):
    cap = n if cap is None else cap
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def order_key(p):
    # degree descending, then parts descending lexicographically
    return (-sum(p), tuple(-x for x in p))


def norm(p):
    return tuple(sorted(p, reverse=True))


def mul(f, g):
    out = defaultdict(int)
    for a, x in f.items():
        for b, y in g.items():
            out[norm(a + b)] += x * y
    return {k: v for k, v in out.items() if v}


def add(*fs):
    out = defaultdict(int)
    for sign, f in fs:
        for k, v in f.items():
            out[k] += sign * v
    return {k: v for k, v in out.items() if v}


def scale(c, f):
    return {k: c * v for k, v in f.items() if c * v}


def e(*parts, c=1):
    return {norm(parts): c}


def multinom(r):
    if any(x < 0 for x in r):
        return 0
    out = factorial(sum(r))
    for x in r:
        out //= factorial(x)
    return out


def wolfe(lam):
    n = max(lam) if lam else 0
    r = [0] + [lam.count(j) for j in range(1, n + 1)]

    def w(rr):
        prod = 1
        for j in range(1, len(rr)):
            prod *= (j - 1) ** rr[j]
        return prod

    total = multinom(r[1:]) * w(r)
    for i in range(1, len(r)):
        rr = list(r)
        rr[i] -= 1
        if rr[i] < 0:
            continue
        total += multinom(rr[1:]) * w(rr)
    return total


def P(n):
    if n == 0:
        return {(): 1}
    return {lam: wolfe(lam) for lam in partitions(n) if wolfe(lam)}


P3 = add((1, e(2, 1)), (1, e(3, c=3)))
P4 = add((1, e(2, 2, c=2)), (1, e(3, 1, c=2)), (1, e(4, c=4)))
C2 = e(2, c=2)
C3 = e(3, c=6)
C4 = add((1, e(2, 2, c=2)), (1, e(4, c=12)))
S = add((1, e(3, 2, c=4)), (1, e(4, 1, c=6)), (1, e(5, c=50)))
CYCLES = {2: C2, 3: C3, 4: C4}


def t_prime(b):
    return add(
        (1, scale(20, P(b + 5))),
        (1, mul(e(1, c=2), P(b + 4))),
        (-1, mul(e(2, c=16), P(b + 3))),
        (-1, mul(add((1, e(2, 1, c=2)), (1, e(3, c=42))), P(b + 2))),
        (-1, mul(add((1, e(4, c=56)), (1, e(2, 2, c=4)), (1, e(3, 1, c=4))), P(b + 1))),
        (-1, mul(add((1, e(4, 1, c=6)), (1, e(3, 2, c=4)), (1, e(5, c=50))), P(b))),
    )


def hb(b):
    k2 = add((1, scale(4, C3)), (1, mul(e(1), C2)), (-1, P3))
    k1 = add((1, scale(3, C4)), (1, mul(e(1), C3)), (-1, scale(2, P4)))
    return add(
        (1, scale(10, P(b + 5))),
        (1, mul(e(1), P(b + 4))),
        (-1, mul(scale(4, C2), P(b + 3))),
        (-1, mul(k2, P(b + 2))),
        (-1, mul(k1, P(b + 1))),
    )


def pmn(m, n):
    return add((1, P(m + 1)), (1, mul(e(1), P(m))), (-1, mul(P(n), P(m - n + 1))))


def text(f, basis):
    if not f:
        return "0\n"
    lines = []
    for k in sorted(f, key=order_key):
        v = f[k]
        if isinstance(v, Fraction):
            v = str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        lines.append(f"{v} {basis}[{','.join(map(str, k))}]")
    return "\n".join(lines) + "\n"


def write(name, header, records):
    body = [f"# {header}"]
    for key, content in records:
        body.append(f"[{key}]")
        body.append(content.rstrip("\n"))
    (OUT / f"{name}.txt").write_text("\n".join(body) + "\n")


def fork_parts(k):
    return [
        (3, 2) + (1,) * k,
        (3,) + (1,) * (k + 2),
        (2, 2, 2) + (1,) * (k - 1),
        (2, 2) + (1,) * (k + 1),
        (2,) + (1,) * (k + 3),
        (1,) * (k + 5),
    ]


def mult_fact(p):
    out = 1
    for v in Counter(p).values():
        out *= factorial(v)
    return out


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    write(
        "small-forms",
        "stated e-expansions of small paths, cycles and the cycle part S",
        [("P3", text(P3, "e")), ("P4", text(P4, "e")), ("C2", text(C2, "e")),
         ("C3", text(C3, "e")), ("C4", text(C4, "e")), ("S", text(S, "e"))],
    )
    write(
        "eq-t-prime",
        "twinned tadpole T<4,b> at v4, six-term path formula",
        [(f"b={b}", text(t_prime(b), "e")) for b in range(1, 7)],
    )
    write(
        "eq-xhb",
        "H_b, the twinned tadpole minus the edge from the twin to v5",
        [(f"b={b}", text(hb(b), "e")) for b in range(1, 5)],
    )
    write(
        "eq-pmn",
        "path P_m with a leaf at vertex n",
        [(f"m={m},n={n}", text(pmn(m, n), "e")) for m, n in [(2, 1), (4, 3), (4, 4), (5, 2), (6, 3), (7, 7)]],
    )

    def tab(a, b):
        f = scale(a - 1, P(a + b))
        for i in range(2, a):
            f = add((1, f), (-1, mul(CYCLES[i], P(a + b - i))))
        return f

    write(
        "eq-tab",
        "tadpoles T<a,b> with short cycles, closed form",
        [(f"a={a},b={b}", text(tab(a, b), "e")) for a in (3, 4, 5) for b in (1, 2, 3)],
    )
    write(
        "eq-xs",
        "the cycle part S",
        [("S", text(S, "e"))],
    )
    rows = []
    for k in range(3):
        rows.append((f"e[{','.join(['3'] * (k + 2))}]/b={3 * k + 1}", str(-3 * 2 ** (k + 1))))
        rows.append((f"e[{','.join(['3'] * (k + 2) + ['1'])}]/b={3 * k + 2}", str(-(2 ** (k + 2)))))
        rows.append((f"e[{','.join(['3'] * (k + 2) + ['2'])}]/b={3 * k + 3}", str(-(3 * k + 1) * 2 ** (k + 1))))
    write("counterexample-coefficients", "negative e-coefficients of the twinned tadpole", rows)
    write(
        "eq-xf1",
        "the fork u-v-w with leaves x, y on w",
        [("fork", text(add((1, e(5, c=5)), (1, e(4, 1, c=7)), (1, e(3, 2)), (1, e(3, 1, 1, c=2)), (1, e(2, 2, 1))), "e"))],
    )
    recs = []
    for k in (1, 2, 3):
        ps = fork_parts(k)
        coeffs = [k + 1, 2, 0, 3 * k + 5, k + 6, 1]
        recs.append((f"k={k}", text({p: c * mult_fact(p) for p, c in zip(ps, coeffs) if c}, "m")))
    write("eq-am", "fork clan, stable partition counts as a monomial expansion", recs)
    recs = []
    for k in range(1, 11):
        ps = fork_parts(k)
        f = factorial(k + 1)
        cs = [f, (k + 3) * f, -2 * f, 5 * (k + 1) * f, (k ** 3 + 5 * k ** 2 + 14 * k + 14) * f, 2 * (k + 2) ** 3 * f]
        recs.append((f"k={k}", text(dict(zip(ps, cs)), "s")))
    write("eq-xf", "fork clan, Schur expansion", recs)
    recs = []
    for k in range(1, 6):
        K = [
            [1, k + 1, 2, 2 * k + 2, (k + 3) * (k + 1), (k + 5) * (k + 3) * (k + 1) // 3],
            [0, 1, 0, 1, k + 3, (k + 4) * (k + 3) // 2],
            [0, 0, 1, k, (k + 3) * k // 2, (k + 5) * (k + 4) * k // 6],
            [0, 0, 0, 1, k + 2, (k + 5) * (k + 2) // 2],
            [0, 0, 0, 0, 1, k + 4],
            [0, 0, 0, 0, 0, 1],
        ]
        Kinv = [
            [1, -k - 1, -2, k - 1, 2 * k + 2, -(k + 2) * (k + 1)],
            [0, 1, 0, -1, -1, k + 3],
            [0, 0, 1, -k, (k + 1) * k // 2, -(k + 2) * (k + 1) * k // 6],
            [0, 0, 0, 1, -k - 2, (k + 3) * (k + 2) // 2],
            [0, 0, 0, 0, 1, -k - 4],
            [0, 0, 0, 0, 0, 1],
        ]
        recs.append((f"forward/k={k}", "\n".join(" ".join(map(str, r)) for r in K)))
        recs.append((f"inverse/k={k}", "\n".join(" ".join(map(str, r)) for r in Kinv)))
    write("kostka-matrix-fork", "Kostka numbers K[row][col] on the six fork clan partitions", recs)
    recs = []
    for k in range(1, 5):
        recs.append((f"k={k}", "count 2\nsign -1\nsign -1"))
    write("tabloid-count", "realizable special rim hook tabloids of shape (2^3,1^(k-1)) for the fork clan", recs)
    recs = [(f"k={k}", str(-2 * factorial(k + 1))) for k in range(1, 5)]
    write("tabloid-coefficient", "[s_(2^3,1^(k-1))] of the fork clan", recs)


if __name__ == "__main__":
    main()
