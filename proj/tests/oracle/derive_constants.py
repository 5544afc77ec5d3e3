# Copyright 2026 The lbisim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent numpy oracle for the regression constants frozen in tests/fixtures.hpp.

Run: python3 tests/oracle/derive_constants.py
"""

import itertools

import numpy as np


def ladder(n):
    return np.diag(np.sqrt(np.arange(1, n)), 1)


def hamiltonian(qubits, modes, g, j0):
    """qubits: [(w, delta, levels)], modes: [(w, photons)], g[i][l] MHz, j0 MHz. GHz units."""
    dims = [q[2] for q in qubits] + [m[1] for m in modes]
    eye = [np.eye(d) for d in dims]

    def op(k, local):
        mats = list(eye)
        mats[k] = local
        out = mats[0]
        for m in mats[1:]:
            out = np.kron(out, m)
        return out

    h = 0
    lowers = [op(k, ladder(d)) for k, d in enumerate(dims)]
    for i, (w, d, _) in enumerate(qubits):
        n = lowers[i].T @ lowers[i]
        h = h + w * n + 0.5 * d * n @ (n - np.eye(len(n)))
    for l, (w, _) in enumerate(modes):
        c = lowers[len(qubits) + l]
        h = h + w * c.T @ c
    for i in range(len(qubits)):
        for l in range(len(modes)):
            a, c = lowers[i], lowers[len(qubits) + l]
            h = h + 1e-3 * g[i][l] * (a @ c.T + a.T @ c)
    if j0:
        a, b = lowers[0], lowers[1]
        h = h + 1e-3 * j0 * (a @ b.T + a.T @ b)
    return h, dims


def labeled_energies(h, dims, states):
    e, v = np.linalg.eigh(h)
    out = {}
    for s in states:
        idx = 0
        for d, n in zip(dims, s):
            idx = idx * d + n
        k = int(np.argmax(np.abs(v[idx, :]) ** 2))
        assert abs(v[idx, k]) ** 2 > 0.5
        out[s] = e[k]
    return out


def exact_zz_khz(qubits, modes, g, j0):
    h, dims = hamiltonian(qubits, modes, g, j0)
    vac = (0,) * len(modes)
    st = [(a, b) + vac for a, b in itertools.product((0, 1), repeat=2)]
    e = labeled_energies(h, dims, st)
    return 1e6 * (e[st[3]] - e[st[2]] - e[st[1]] + e[st[0]])


def number_splitting_mhz(wq, d, wr, g):
    h, dims = hamiltonian([(wq, d, 4)], [(wr, 6)], [[g]], 0)
    e = labeled_energies(h, dims, [(0, 0), (0, 1), (1, 0), (1, 1)])
    return 1e3 * ((e[(1, 1)] - e[(1, 0)]) - (e[(0, 1)] - e[(0, 0)]))


def chi_formula(wq, d, wr, g, k):
    a = wq - wr
    return 1e3 * (g * 1e-3) ** 2 * (d - a) / ((a + k * d) * (a + (k - 1) * d))


def j_bus25(w):
    return 2.8 + 81 * -77 / (w * 1e3 - 6017) + 109 * 108 / (w * 1e3 - 6310)


def bisect(f, lo, hi):
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if np.sign(f(mid)) == np.sign(f(lo)):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def main():
    print("chi k=1 (4.9, -0.3, 5.942, 77):", repr(chi_formula(4.9, -0.3, 5.942, 77, 1)))
    print("chi k=0:", repr(chi_formula(4.9, -0.3, 5.942, 77, 0)))
    print("exact number splitting:", repr(number_splitting_mhz(4.9, -0.3, 5.942, 77)))
    print("bus 2_5 J_1 at 4.5:", repr(81 * -77 / (4500 - 6017)))
    print("bus 2_5 J at 4.5:", repr(j_bus25(4.5)))
    grid = np.linspace(4.0, 5.5, 1501)
    vals = [j_bus25(w) for w in grid]
    roots = [bisect(j_bus25, grid[i], grid[i + 1]) for i in range(len(grid) - 1) if np.sign(vals[i]) != np.sign(vals[i + 1])]
    print("bus 2_5 roots:", [repr(r) for r in roots])
    print("bus 2_5 min J in 4.0-5.5:", min(vals), grid[int(np.argmin(vals))])
    # 2 qubits / 2 modes reference system for the ZZ oracle
    q = [(4.50, -0.3, 4), (4.55, -0.3, 4)]
    m = [(6.0, 4), (6.3, 4)]
    g = [[60, 60], [-60, 60]]  # g[qubit][mode]
    print("exact zz reference:", repr(exact_zz_khz(q, m, g, 1.5)))
    print("exact zz j0 only (4.5/4.7, J0=5):", repr(exact_zz_khz([(4.5, -0.3, 4), (4.7, -0.3, 4)], [], [[], []], 5.0)))


if __name__ == "__main__":
    main()
