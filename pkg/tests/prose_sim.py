"""Straight-line reference simulator for the two-phase competitive diffusion.

Deliberately naive and independent of the package: the graph is a plain
edge dict, weight sums are recomputed by scanning all edges, and the
activation rules are transcribed directly from their prose statement.
Used as the ground-truth oracle for the diffusion engine. Written before
the engine; do not "optimize" it to look like the engine.

States: 0 = inactive neutral, 1 = inactive A-leaning, 2 = inactive
B-leaning, 1.5 = finally active for A, 2.5 = finally active for B.
"""


def simulate(n, edges, tendencies, theta1, theta2, seeds_a, seeds_b):
    """Run the diffusion; returns (state_dict, rounds).

    edges: dict (u, v) -> weight, meaning an arc u -> v.
    tendencies: dict u -> 0/1/2.
    """
    state = {}
    for u in range(n):
        state[u] = float(tendencies[u])
    for u in seeds_a:
        state[u] = 1.5
    for u in seeds_b:
        state[u] = 2.5

    rounds = 0
    while True:
        rounds += 1

        # Temporary activation: scan every vertex, recompute incoming
        # active weight by brute force over the whole edge dict.
        temp = []
        for u in range(n):
            if state[u] == 1.5 or state[u] == 2.5:
                continue
            ta = 0.0
            tb = 0.0
            for (x, y), w in edges.items():
                if y == u and state[x] == 1.5:
                    ta = ta + w
                if y == u and state[x] == 2.5:
                    tb = tb + w
            tc = ta + tb
            if state[u] == 1:
                if ta >= theta1 or tb >= theta1 + theta2:
                    temp.append(u)
            elif state[u] == 2:
                if tb >= theta1 or ta >= theta1 + theta2:
                    temp.append(u)
            else:
                if tc >= theta1:
                    temp.append(u)

        if len(temp) == 0:
            break

        # Final activation: every temporarily active vertex commits,
        # comparing sums taken against the state at the start of the round.
        old = dict(state)
        for u in temp:
            ta = 0.0
            tb = 0.0
            for (x, y), w in edges.items():
                if y == u and old[x] == 1.5:
                    ta = ta + w
                if y == u and old[x] == 2.5:
                    tb = tb + w
            if old[u] == 1:
                if tb >= max(ta, theta1 + theta2):
                    state[u] = 2.5
                else:
                    state[u] = 1.5
            elif old[u] == 2:
                if ta >= max(tb, theta1 + theta2):
                    state[u] = 1.5
                else:
                    state[u] = 2.5
            else:
                if tb > ta:
                    state[u] = 2.5
                else:
                    state[u] = 1.5

        if rounds >= n:
            break

    return state, rounds


def count_side(state, side):
    """Number of vertices finally active for 'A' (1.5) or 'B' (2.5)."""
    want = 1.5 if side == "A" else 2.5
    return sum(1 for s in state.values() if s == want)
