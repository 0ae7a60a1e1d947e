"""Independent reference computations used to freeze expected values.

Nothing here imports the package under test.
"""
import mpmath as mp

mp.mp.dps = 40


def ols_closed_form(xs, ys):
    """Slope, intercept, r² by the textbook normal equations in 40-digit arithmetic."""
    xs = [mp.mpf(x) for x in xs]
    ys = [mp.mpf(y) for y in ys]
    n = len(xs)
    sx, sy = mp.fsum(xs), mp.fsum(ys)
    sxx = mp.fsum(x * x for x in xs)
    sxy = mp.fsum(x * y for x, y in zip(xs, ys))
    slope = (n * sxy - sx * sy) / (n * sxx - sx * sx)
    intercept = (sy - slope * sx) / n
    my = sy / n
    ss_res = mp.fsum((y - intercept - slope * x) ** 2 for x, y in zip(xs, ys))
    ss_tot = mp.fsum((y - my) ** 2 for y in ys)
    return slope, intercept, 1 - ss_res / ss_tot


def power_law_oracle(values):
    """(a, k, r²) for y = a x^k on ranks 1..n, values given as exact strings or ints."""
    xs = [mp.log(i) for i in range(1, len(values) + 1)]
    ys = [mp.log(mp.mpf(str(v))) for v in values]
    k, ln_a, r2 = ols_closed_form(xs, ys)
    return float(mp.e ** ln_a), float(k), float(r2)


def all_pairs_mean_hops(n, edges):
    """Mean shortest path over unordered pairs by plain BFS from every node."""
    adj = {u: set() for u in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    total = 0
    for s in range(n):
        seen = {s: 0}
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for w in adj[u]:
                    if w not in seen:
                        seen[w] = seen[u] + 1
                        nxt.append(w)
            frontier = nxt
        assert len(seen) == n
        total += sum(seen.values())
    return total / (n * (n - 1))
