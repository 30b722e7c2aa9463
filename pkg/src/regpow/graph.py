"""Finite simple graphs on vertices 1..n and the invariants the classifier needs."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Optional

ACYCLIC = "acyclic"


class GraphError(ValueError):
    pass


class EdgeListParseError(GraphError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


def _norm_edge(e):
    i, j = e
    i, j = int(i), int(j)
    return (i, j) if i < j else (j, i)


class Graph:
    """Immutable simple graph with vertex set ``{1, ..., n}``."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable = ()):
        if int(n) != n or n < 1:
            raise GraphError("vertex count must be a positive integer")
        n = int(n)
        seen = set()
        for e in edges:
            i, j = _norm_edge(e)
            if i == j:
                raise GraphError(f"loop at vertex {i}")
            if not (1 <= i <= n and 1 <= j <= n):
                raise GraphError(f"edge {{{i},{j}}} has an endpoint outside 1..{n}")
            if (i, j) in seen:
                raise GraphError(f"duplicate edge {{{i},{j}}}")
            seen.add((i, j))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(seen))
        adj = {v: set() for v in range(1, n + 1)}
        for i, j in seen:
            adj[i].add(j)
            adj[j].add(i)
        object.__setattr__(self, "_adj", {v: frozenset(s) for v, s in adj.items()})

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph({self.n}, {self.sorted_edges()})"

    @property
    def m(self):
        return len(self.edges)

    def vertices(self):
        return range(1, self.n + 1)

    def sorted_edges(self):
        return sorted(self.edges)

    def neighbors(self, v):
        return self._adj[v]

    def degree(self, v):
        return len(self._adj[v])

    def has_edge(self, u, v):
        return _norm_edge((u, v)) in self.edges

    def induced(self, vertices):
        """Induced subgraph, relabeled to 1..k in increasing vertex order."""
        vs = sorted(vertices)
        pos = {v: k + 1 for k, v in enumerate(vs)}
        return Graph(len(vs), [(pos[i], pos[j]) for i, j in self.edges if i in pos and j in pos])

    def relabel(self, perm):
        """``perm`` maps old label -> new label (dict or sequence indexed from 1)."""
        if not isinstance(perm, dict):
            perm = {v: perm[v - 1] for v in self.vertices()}
        if sorted(perm.values()) != list(self.vertices()):
            raise GraphError("relabeling must be a permutation of 1..n")
        return Graph(self.n, [(perm[i], perm[j]) for i, j in self.edges])


# -- basic structure ---------------------------------------------------------

def components(g: Graph, within=None):
    """Connected components (as sorted vertex lists) of g restricted to ``within``."""
    allowed = set(g.vertices()) if within is None else set(within)
    out = []
    seen = set()
    for s in sorted(allowed):
        if s in seen:
            continue
        comp = []
        stack = [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.neighbors(v):
                if w in allowed and w not in seen:
                    seen.add(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph):
    return len(components(g)) == 1


def is_forest(g: Graph):
    return g.m == g.n - len(components(g))


def is_path(g: Graph):
    """Connected graph with all degrees <= 2 and no cycle (a single vertex counts)."""
    return is_connected(g) and g.m == g.n - 1 and all(g.degree(v) <= 2 for v in g.vertices())


def is_cycle(g: Graph):
    return g.n >= 3 and is_connected(g) and all(g.degree(v) == 2 for v in g.vertices())


def path_order(g: Graph, vertices=None):
    """Vertices of a path component in traversal order, starting from the smaller end."""
    vs = list(g.vertices()) if vertices is None else list(vertices)
    if len(vs) == 1:
        return vs
    vset = set(vs)
    ends = sorted(v for v in vs if len(g.neighbors(v) & vset) == 1)
    if len(ends) != 2:
        raise GraphError("not a path")
    order = [ends[0]]
    prev = None
    while len(order) < len(vs):
        nxt = [w for w in g.neighbors(order[-1]) if w in vset and w != prev]
        prev = order[-1]
        order.append(nxt[0])
    return order


def cycle_order(g: Graph, vertices):
    """Cyclic order of a cycle's vertices, starting at the smallest label and
    continuing towards its smaller neighbour."""
    vset = set(vertices)
    start = min(vset)
    nb = sorted(g.neighbors(start) & vset)
    order = [start, nb[0]]
    while len(order) < len(vset):
        nxt = [w for w in g.neighbors(order[-1]) if w in vset and w != order[-2]]
        order.append(nxt[0])
    return order


def girth(g: Graph):
    """Length of a shortest cycle, or ``ACYCLIC`` for forests (BFS from every vertex)."""
    best = None
    for s in g.vertices():
        dist = {s: 0}
        parent = {s: None}
        queue = [s]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for w in g.neighbors(v):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    c = dist[v] + dist[w] + 1
                    if best is None or c < best:
                        best = c
    return ACYCLIC if best is None else best


def bipartition(g: Graph) -> Optional[tuple]:
    """2-colouring ``(V1, V2)`` with the smallest vertex of each component in V1."""
    color = {}
    for comp in components(g):
        root = comp[0]
        color[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if w not in color:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
    v1 = frozenset(v for v, c in color.items() if c == 0)
    v2 = frozenset(v for v, c in color.items() if c == 1)
    return v1, v2


def is_bipartite(g: Graph):
    return bipartition(g) is not None


# -- cliques and free vertices ----------------------------------------------

def maximal_cliques(g: Graph):
    """All maximal cliques (Bron-Kerbosch with pivoting), as sorted tuples."""
    out = []

    def expand(R, P, X):
        if not P and not X:
            out.append(tuple(sorted(R)))
            return
        pivot = max(P | X, key=lambda u: len(g.neighbors(u) & P))
        for v in sorted(P - g.neighbors(pivot)):
            nb = g.neighbors(v)
            expand(R | {v}, P & nb, X & nb)
            P = P - {v}
            X = X | {v}

    expand(set(), set(g.vertices()), set())
    return sorted(out)


def internal_vertices(g: Graph):
    count = {v: 0 for v in g.vertices()}
    for c in maximal_cliques(g):
        for v in c:
            count[v] += 1
    return sorted(v for v, k in count.items() if k >= 2)


def free_vertices(g: Graph):
    inner = set(internal_vertices(g))
    return [v for v in g.vertices() if v not in inner]


def internal_vertex_count(g: Graph):
    return len(internal_vertices(g))


# -- induced paths and cycles ------------------------------------------------

def _is_induced_path(g, vs):
    k = len(vs)
    sub = [len(g.neighbors(v) & vs) for v in vs]
    inner = sum(sub) // 2
    if inner != k - 1 or any(d > 2 for d in sub):
        return False
    return len(components(g, vs)) == 1


def longest_induced_path(g: Graph):
    """Edge count of a longest induced path, by DFS over induced paths."""
    best = 0
    adj = {v: g.neighbors(v) for v in g.vertices()}

    def extend(path, inside, blocked):
        nonlocal best
        best = max(best, len(path) - 1)
        last = path[-1]
        for w in adj[last]:
            if w in inside or w in blocked:
                continue
            # w may touch only ``last`` among the path vertices
            if len(adj[w] & inside) != 1:
                continue
            path.append(w)
            inside.add(w)
            extend(path, inside, blocked)
            inside.discard(w)
            path.pop()

    for s in g.vertices():
        extend([s], {s}, set())
    return best


def longest_induced_odd_cycle(g: Graph):
    """Length of a longest induced odd cycle, 0 if there is none (subset search)."""
    best = 0
    verts = list(g.vertices())
    for k in range(3, g.n + 1, 2):
        if k <= best:
            continue
        for sub in combinations(verts, k):
            s = set(sub)
            if all(len(g.neighbors(v) & s) == 2 for v in sub) and len(components(g, s)) == 1:
                best = k
                break
    return best


# -- edge operations ---------------------------------------------------------

def delete_edge(g: Graph, e):
    e = _norm_edge(e)
    if e not in g.edges:
        raise GraphError(f"edge {{{e[0]},{e[1]}}} is not present")
    return Graph(g.n, g.edges - {e})


def add_edge(g: Graph, e):
    e = _norm_edge(e)
    if e in g.edges:
        raise GraphError(f"edge {{{e[0]},{e[1]}}} is already present")
    return Graph(g.n, g.edges | {e})


def edge_completion(g: Graph, e):
    """Add every edge among ``N(u)`` and every edge among ``N(v)`` for ``e = {u, v}``."""
    u, v = _norm_edge(e)
    if u == v:
        raise GraphError("edge endpoints must differ")
    if (u, v) in g.edges:
        raise GraphError(f"edge {{{u},{v}}} is already present")
    new = set(g.edges)
    for w in (u, v):
        for a, b in combinations(sorted(g.neighbors(w)), 2):
            new.add((a, b))
    return Graph(g.n, new)


def blocks_and_cut_vertices(g: Graph):
    """Biconnected components (as sorted edge lists) and cut vertices (Tarjan)."""
    disc = {}
    low = {}
    counter = [0]
    stack = []
    blocks = []
    cuts = set()

    def dfs(root):
        disc[root] = low[root] = counter[0]
        counter[0] += 1
        children = 0
        # iterative DFS: frames of (vertex, parent, neighbour iterator)
        frames = [(root, None, iter(sorted(g.neighbors(root))))]
        while frames:
            v, parent, it = frames[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w not in disc:
                    stack.append(_norm_edge((v, w)))
                    disc[w] = low[w] = counter[0]
                    counter[0] += 1
                    if v == root:
                        children += 1
                    frames.append((w, v, iter(sorted(g.neighbors(w)))))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    stack.append(_norm_edge((v, w)))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            frames.pop()
            if parent is not None:
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    if parent != root:
                        cuts.add(parent)
                    block = []
                    edge = _norm_edge((parent, v))
                    while True:
                        top = stack.pop()
                        block.append(top)
                        if top == edge:
                            break
                    blocks.append(sorted(set(block)))
        if children >= 2:
            cuts.add(root)

    for v in g.vertices():
        if v not in disc:
            dfs(v)
    return sorted(blocks), frozenset(cuts)


# -- edge-list text format ---------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"i j"``; ``#`` starts a comment."""
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        tokens = []
        col = 0
        for tok in line.split():
            col = line.index(tok, col)
            tokens.append((tok, col + 1))
            col += len(tok)
        if len(tokens) != 2:
            c = tokens[2][1] if len(tokens) > 2 else 1
            raise EdgeListParseError(f"expected 2 integers, found {len(tokens)} fields", lineno, c)
        vals = []
        for tok, c in tokens:
            try:
                vals.append(int(tok))
            except ValueError:
                raise EdgeListParseError(f"not an integer: {tok!r}", lineno, c) from None
        if header is None:
            n, m = vals
            if n < 1 or m < 0:
                raise EdgeListParseError("header needs n >= 1 and m >= 0", lineno, 1)
            header = (n, m, lineno)
            continue
        i, j = vals
        n = header[0]
        if not (1 <= i < j <= n):
            raise EdgeListParseError(f"edge must satisfy 1 <= i < j <= {n}", lineno, tokens[0][1])
        if (i, j) in edges:
            raise EdgeListParseError(f"duplicate edge {i} {j}", lineno, tokens[0][1])
        edges.append((i, j))
    if header is None:
        raise EdgeListParseError("missing header line 'n m'", 1, 1)
    n, m, hl = header
    if len(edges) != m:
        raise EdgeListParseError(f"header announces {m} edges but {len(edges)} were given", hl, 1)
    return Graph(n, edges)


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{i} {j}" for i, j in g.sorted_edges()]
    return "\n".join(lines) + "\n"


# -- named families (handy for tests, demos and the corpus) -----------------

def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n):
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete_graph(n):
    return Graph(n, combinations(range(1, n + 1), 2))


def star_graph(k):
    """``K_{1,k}`` with centre 1."""
    return Graph(k + 1, [(1, j) for j in range(2, k + 2)])


def path_plus_edge(n, i, j):
    """``P_n`` on 1..n with the extra edge ``{i, j}``."""
    return add_edge(path_graph(n), (i, j))


def balloon_graph(cycle_len, tail_len):
    """Cycle 1..c with a path of ``tail_len`` edges hanging at vertex c."""
    c = cycle_len
    edges = [(i, i + 1) for i in range(1, c)] + [(1, c)]
    edges += [(c + k, c + k + 1) for k in range(tail_len)]
    return Graph(c + tail_len, edges)


def triangle_with_paths(a, b, c):
    """Triangle 1,2,3 with paths of a, b, c edges hanging at 1, 2, 3."""
    edges = [(1, 2), (1, 3), (2, 3)]
    nxt = 4
    for root, length in ((1, a), (2, b), (3, c)):
        prev = root
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt - 1, edges)


def fm_graph(m):
    """The bipartite graph with edges ``{2i, 2j-1}`` for ``1 <= i <= j <= m``."""
    return Graph(2 * m, [(2 * i, 2 * j - 1) for i in range(1, m + 1) for j in range(i, m + 1)])


def disjoint_union(*graphs):
    edges = []
    offset = 0
    for h in graphs:
        edges += [(i + offset, j + offset) for i, j in h.edges]
        offset += h.n
    return Graph(offset, edges)


# -- canonical form ----------------------------------------------------------

def _refine(g, cells):
    """Split cells by neighbour counts into every cell until stable.

    Sub-cells are ordered by their count signature, so the result only depends
    on the graph and the input partition, not on vertex names.
    """
    while True:
        index = {v: k for k, cell in enumerate(cells) for v in cell}
        out = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {}
            for v in cell:
                counts = [0] * len(cells)
                for w in g.neighbors(v):
                    counts[index[w]] += 1
                sig.setdefault(tuple(counts), []).append(v)
            if len(sig) > 1:
                changed = True
            out.extend(sig[k] for k in sorted(sig))
        cells = out
        if not changed:
            return cells


def canonical_form(g: Graph):
    """Lexicographically least sorted edge list over a set of relabelings.

    The candidates are the leaves of an individualize-and-refine search tree
    (start from the degree partition, refine, then branch on each vertex of
    the first non-singleton cell).  That set of orderings is carried to itself
    by isomorphisms, so isomorphic graphs get the same form.
    """
    best = None

    def leaf(order):
        lab = {v: k + 1 for k, v in enumerate(order)}
        return sorted(tuple(sorted((lab[i], lab[j]))) for i, j in g.edges)

    def search(cells):
        nonlocal best
        cells = _refine(g, cells)
        for k, cell in enumerate(cells):
            if len(cell) > 1:
                # twins (same neighbours apart from each other) give equal leaves
                first = cell[0]
                twins = all(g.neighbors(v) - {first} == g.neighbors(first) - {v} for v in cell)
                for v in (cell[:1] if twins else cell):
                    rest = [w for w in cell if w != v]
                    search(cells[:k] + [[v], rest] + cells[k + 1:])
                return
        edges = leaf([cell[0] for cell in cells])
        if best is None or edges < best:
            best = edges

    search([list(g.vertices())])
    return (g.n, tuple(best))


def canonical_graph(g: Graph):
    n, edges = canonical_form(g)
    return Graph(n, edges)


def connected_graphs(n):
    """One representative of each isomorphism class of connected graphs on n vertices."""
    if n == 1:
        return [Graph(1)]
    all_pairs = list(combinations(range(1, n + 1), 2))
    level = {canonical_form(Graph(n))}
    seen = set(level)
    out = []
    while level:
        nxt = set()
        for _, edges in level:
            es = set(edges)
            for e in all_pairs:
                if e in es:
                    continue
                key = canonical_form(Graph(n, es | {e}))
                if key not in seen:
                    seen.add(key)
                    nxt.add(key)
        level = nxt
    for n_, edges in sorted(seen, key=lambda k: (len(k[1]), k[1])):
        g = Graph(n_, edges)
        if is_connected(g):
            out.append(g)
    return out
