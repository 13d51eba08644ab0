"""Published reference values for the K6 + chain-of-3 example and the K10
three-chain network, used by the ``reproduce`` command and the regression
suite.  Digits are kept exactly as published (4-5 significant figures)."""

from __future__ import annotations

REFERENCE_VERSION = 1

# Full spectrum of the 9-vertex graph K6 with a pendant 3-vertex chain,
# descending.  The value 6 has multiplicity 4.
TABLE1_EIGENVALUES = (7.0355, 6.0, 6.0, 6.0, 6.0, 3.1832, 1.5163, 0.26503, 0.0)
TABLE1_P = 6
TABLE1_Q = 4
TABLE1_TOL = 1e-3

# Selected eigenvectors of the same graph (unit norm, vertex order: five
# plateau vertices, junction, three chain vertices).
TABLE1_EDGE_VECTOR = (
    0.1524, 0.1524, 0.1524, 0.1524, 0.1524,
    -0.9198, 0.19043, -0.039105, 0.0064791,
)
TABLE1_CHAIN_VECTORS = {
    3.1832: (-0.04879,) * 5 + (0.10652, 0.54399, -0.75017, 0.34361),
    1.5163: (0.098934,) * 5 + (-0.051079, -0.72369, -0.29898, 0.57908),
    0.26503: (-0.23129,) * 5 + (-0.16999, 0.18156, 0.48499, 0.65988),
}

# Edge-mode summary for the same graph: numerical solution vs large-p
# estimates (lambda, sigma+, C0 with the junction normalized to 1).
TABLE2_NUMERICAL = {"lambda": 7.03, "sigma_plus": -0.205, "C0": -0.166}
TABLE2_THEORY = {"lambda": 7.02, "sigma_plus": -0.2, "C0": -0.167}
TABLE2_TOL = 0.01

# Chain-band zeros of the phase form for the same graph, with the
# plateau-to-junction ratios 1/(1 - lambda); the measured eigenvector
# ratios are listed alongside.
TABLE3_ZEROS = (0.265033, 1.51622, 3.1832)
TABLE3_ORACLE = (0.26503, 1.5163, 3.1832)
TABLE3_RATIOS = (1.360, -1.9365, -0.4580)
TABLE3_MEASURED_RATIOS = (1.361, -1.9368, -0.4580)
TABLE3_ZERO_TOL = 1e-4
TABLE3_RATIO_TOL = 1e-3

# K10 with three pendant chains (interior lengths 5, 4, 3 at three distinct
# vertices): published antisymmetric edge eigenvalue.
K10_NETWORK = {
    "p": 10,
    "chain_lengths": (5, 4, 3),
    "antisymmetric_lambda": 11.11,
    "edge_count": 3,
}

K10_NETWORK_JSON = {
    "cliques": [{"id": "K10", "p": 10}],
    "links": [
        {"from": {"clique": "K10", "vertex": 9}, "to": "open", "length": 5},
        {"from": {"clique": "K10", "vertex": 4}, "to": "open", "length": 4},
        {"from": {"clique": "K10", "vertex": 0}, "to": "open", "length": 3},
    ],
}
