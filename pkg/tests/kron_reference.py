"""Staggered Hamiltonians assembled literally from their Kronecker-product formulas.

Independent of the matching construction in the package; used to check it.
"""

import numpy as np

SX = np.array([[0.0, 1.0], [1.0, 0.0]])


def pair_block(omega, kappa):
    return omega * np.eye(2) - kappa * SX


def h1d_1(d, omega, kappa):
    return np.kron(np.eye(d // 2), pair_block(omega, kappa))


def h1d_2(d, omega, kappa, periodic=True):
    H = np.zeros((d, d))
    H[0, 0] = H[-1, -1] = omega
    H[1:-1, 1:-1] = np.kron(np.eye((d - 2) // 2), pair_block(omega, kappa))
    if periodic:
        H[0, -1] = H[-1, 0] = -kappa
    return H


def proj10(d):
    return np.kron(np.eye(d // 2), np.diag([1.0, 0.0]))


def proj01(d):
    return np.kron(np.eye(d // 2), np.diag([0.0, 1.0]))


def anti_identity(d):
    return np.fliplr(np.eye(d))


def corner_flip(d):
    """sigma^+ + sigma^-: ones at the top-right and bottom-left corners."""
    S = np.zeros((d, d))
    S[0, -1] = S[-1, 0] = 1.0
    return S


def torus_axis(d, w, k):
    I = np.eye(d)
    return [np.kron(I, h1d_1(d, w, k)), np.kron(I, h1d_2(d, w, k)),
            np.kron(h1d_1(d, w, k), I), np.kron(h1d_2(d, w, k), I)]


def torus_interleaved(d, w, k):
    a, b = h1d_1(d, w, k), h1d_2(d, w, k)
    p, q = proj10(d), proj01(d)
    return [np.kron(p, a) + np.kron(q, b), np.kron(p, b) + np.kron(q, a),
            np.kron(a, p) + np.kron(b, q), np.kron(b, p) + np.kron(a, q)]


def sigma_hor(d):
    return np.kron(anti_identity(d), corner_flip(d))


def sigma_ver(d):
    return np.kron(corner_flip(d), anti_identity(d))


def klein(d, w, k):
    H = torus_axis(d, w, k)
    H[1] = np.kron(np.eye(d), h1d_2(d, w, k, periodic=False)) - k * sigma_hor(d)
    return H


def projective(d, w, k):
    H = klein(d, w, k)
    H[3] = np.kron(h1d_2(d, w, k, periodic=False), np.eye(d)) - k * sigma_ver(d)
    return H


def sphere(d, w, k):
    N = d * d
    H = torus_axis(d, w, k)
    e1 = np.zeros((1, d)); e1[0, 0] = 1.0
    ed = np.zeros((1, d)); ed[0, -1] = 1.0
    P = np.kron(np.hstack([np.zeros((d - 1, 1)), np.eye(d - 1)]).T, e1)
    Q = np.kron(np.hstack([np.zeros((d - 2, 1)), np.eye(d - 2), np.zeros((d - 2, 1))]).T, ed)
    P1, P2 = P[:, : N - 2 * d], P[:, N - 2 * d:]
    tilde = h1d_2(d, w, k, periodic=False)
    top, mid, bot = slice(0, d), slice(d, N - d), slice(N - d, N)
    H2 = np.zeros((N, N))
    H2[top, top] = w * np.eye(d)
    H2[top, mid] = -k * P1
    H2[top, bot] = -k * P2
    H2[mid, top] = -k * P1.T
    H2[mid, mid] = np.kron(np.eye(d - 2), tilde)
    H2[mid, bot] = -k * Q.T
    H2[bot, top] = -k * P2.T
    H2[bot, mid] = -k * Q
    H2[bot, bot] = w * np.eye(d)
    H4 = np.zeros((N, N))
    H4[top, top] = tilde
    H4[mid, mid] = np.kron(h1d_1(d - 2, w, k), np.eye(d))
    H4[bot, bot] = tilde
    H[1], H[3] = H2, H4
    return H


BUILDERS = {
    ("torus", "axis"): torus_axis,
    ("klein", "axis"): klein,
    ("rp2", "axis"): projective,
    ("torus", "interleaved"): torus_interleaved,
    ("sphere", "axis"): sphere,
}


def hamiltonians(topology, scheme, d, omega=0.0, kappa=1.0):
    return BUILDERS[(topology, scheme)](d, omega, kappa)


def edge_list(topology, scheme, d):
    """``"k: n m"`` lines read off the nonzero couplings of each Hamiltonian."""
    lines = []
    for k, H in enumerate(hamiltonians(topology, scheme, d), 1):
        rows, cols = np.nonzero(np.triu(H, 1))
        for a, b in sorted(zip(rows + 1, cols + 1)):
            lines.append(f"{k}: {a} {b}")
    return "\n".join(lines) + "\n"
