"""Brute-force high-precision oracle for the reciprocal-sum tests.

Independent of the C++ implementation: plain integer iteration for W_n and
mpmath summation of a long prefix (the omitted tail is far below the working
precision for every case used here). Run directly to print the values that
are frozen into the C++ test suites.
"""
import mpmath as mp

mp.mp.dps = 150
TERMS = 700


def w_seq(a, b, p, q, count):
    out = [a, b]
    while len(out) < count:
        out.append(p * out[-1] + q * out[-2])
    return out


def tail(a, b, p, q, m, s, l, n, alternating, terms=TERMS):
    w = w_seq(a, b, p, q, m * (n + terms) + max(l) + 2)
    total = mp.mpf(0)
    for k in range(n, n + terms):
        d = sum(si * w[m * k + li] for si, li in zip(s, l))
        sign = -1 if (alternating and k % 2) else 1
        total += mp.mpf(sign) / d
    return total


def est_general(a, b, p, q, m, s, l, n, alternating):
    w = w_seq(a, b, p, q, m * n + max(l) + 2)
    if alternating:
        return (-1) ** n * sum(si * (w[m * n + li] + w[m * (n - 1) + li]) for si, li in zip(s, l))
    return sum(si * (w[m * n + li] - w[m * (n - 1) + li]) for si, li in zip(s, l))


def est_block(a, b, p, q, m, t, n, alternating):
    w = w_seq(a, b, p, q, m * n + t + 3)
    alpha = (p + mp.sqrt(p * p + 4 * q)) / 2
    if alternating:
        v = w[m*n+t+1] - w[m*n] + w[m*(n-1)+t+1] - w[m*(n-1)]
        return (-1) ** n * v / (alpha - 1)
    v = w[m*n+t+1] - w[m*n] - w[m*(n-1)+t+1] + w[m*(n-1)]
    return v / (alpha - 1)


def errors(a, b, p, q, m, s, l, ns, alternating):
    return [1 / tail(a, b, p, q, m, s, l, n, alternating) - est_general(a, b, p, q, m, s, l, n, alternating) for n in ns]


def fit_ratio(ns, errs):
    xs = list(ns)
    ys = [mp.log(abs(e)) for e in errs]
    mx = sum(xs) / len(xs)
    my = sum(ys) / len(ys)
    slope = sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sum((x - mx) ** 2 for x in xs)
    return mp.e ** slope


def onset(a, b, p, q, m, s, l, n_max, alternating):
    n0 = None
    for n in range(n_max, 1, -1):
        inv = 1 / tail(a, b, p, q, m, s, l, n, alternating)
        if abs(inv - est_general(a, b, p, q, m, s, l, n, alternating)) < mp.mpf(1) / 2:
            n0 = n
        else:
            break
    return n0


if __name__ == "__main__":
    F = (0, 1, 1, 1)
    print("sum_{k>=10} 1/F_k =", mp.nstr(tail(*F, 1, [1], [0], 10, False), 40))
    print("sum_{k>=4} (-1)^k/F_k =", mp.nstr(tail(*F, 1, [1], [0], 4, True), 40))
    print("sum_{k>=10} (-1)^k/F_k =", mp.nstr(tail(*F, 1, [1], [0], 10, True), 40))
    print("inverse at n=10 =", mp.nstr(1 / tail(*F, 1, [1], [0], 10, False), 40))
    print("tail m=2 s=(1,1) l=(0,1) K=6:", mp.nstr(tail(*F, 2, [1, 1], [0, 1], 6, False), 40))
    for m in (1, 2, 3):
        e = errors(*F, m, [1], [0], range(6, 26), False)
        print("fib m=%d errors n=6..25:" % m, [mp.nstr(x, 6) for x in e[:3]], "...", mp.nstr(e[-1], 6))
        print("   ratio fit (n=10..25):", mp.nstr(fit_ratio(range(10, 26), errors(*F, m, [1], [0], range(10, 26), False)), 10))
    print("pell m=1 ratio:", mp.nstr(fit_ratio(range(10, 26), errors(0, 1, 2, 1, 1, [1], [0], range(10, 26), False)), 10))
    print("fib m=2 ratio n=6..16:", mp.nstr(fit_ratio(range(6, 17), errors(*F, 2, [1], [0], range(6, 17), False)), 10))
    ea = errors(*F, 1, [1], [0], range(6, 26), True)
    print("fib alt errors:", [mp.nstr(x, 6) for x in ea[:4]], mp.nstr(ea[-1], 6))
    print("fib alt ratio:", mp.nstr(fit_ratio(range(10, 26), errors(*F, 1, [1], [0], range(10, 26), True)), 10))
    for t in (1, 2):
        d = [abs(est_block(*F, 1, t, n, False) - est_general(*F, 1, [1] * (t + 1), list(range(t + 1)), n, False)) for n in range(6, 26)]
        print("block-general t=%d:" % t, mp.nstr(d[0], 6), mp.nstr(d[-1], 6),
              all(d[i] > d[i + 1] for i in range(len(d) - 1)))
    print("onset fib plain:", onset(*F, 1, [1], [0], 30, False))
    print("onset fib alt:", onset(*F, 1, [1], [0], 30, True))
    print("onset pell plain:", onset(0, 1, 2, 1, 1, [1], [0], 30, False))
