"""Print the matrices and first HITS iteration of the 6-node hierarchy, then
the converged scores under basic HITS and PageRank."""

import numpy as np

from qhrank import adjacency, build_graph, gram_products, hits_rank, hits_step, pagerank, HitsConfig

EDGES = [(1, 5, 1), (2, 4, 1), (4, 5, 1), (5, 3, 1), (6, 1, 1)]


def show(name, mat):
    print(f"{name} =")
    print(np.array2string(np.asarray(mat).astype(int)))


def main():
    g = build_graph(6, EDGES)
    L = adjacency(g)
    show("L", L)
    show("L^T", L.T)
    auth_gram, hub_gram = gram_products(g)
    show("L^T L", auth_gram)
    show("L L^T", hub_gram)

    auth, hub = hits_step(g, np.ones(6), np.ones(6), 1.0)
    print("auth(1) =", auth.astype(int).tolist())
    print("hub(1)  =", hub.astype(int).tolist())

    res = hits_rank(g, HitsConfig(alpha=1.0))
    print(f"converged after {res.iterations} iterations")
    print("auth =", np.round(res.auth, 6).tolist())
    print("hub  =", np.round(res.hub, 6).tolist())
    print("pagerank =", np.round(pagerank(g).scores, 6).tolist())


if __name__ == "__main__":
    main()
