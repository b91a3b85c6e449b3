"""Bundled example networks and reference partitions.

Three datasets ship with the package:

* example1: six nodes A..F in two triangles joined through A and D, with
  doubled links B-C and E-F (a multigraph, 9 edges counting parallels).
* example2: four cliques of sizes 8, 5, 6 and 7 in a chain, joined by
  1, 2 and 1 bridge edges (26 nodes, 78 edges).
* karate: Zachary's karate club, 34 members and 78 friendships, labels
  "1".."34" matching the classic numbering.
"""

from __future__ import annotations

from .multigraph import Multigraph, parse_edge_list
from .partition import Partition

EXAMPLE1 = "example1"
EXAMPLE2 = "example2"
KARATE = "karate"

_EXAMPLE1_EDGE_LIST = """\
A B
A C
B C 2
A D
D E
D F
E F 2
"""

_EXAMPLE2_CLIQUE_SIZES = (8, 5, 6, 7)

# (clique a, clique b, number of bridge edges)
_EXAMPLE2_BRIDGES = ((0, 1, 1), (1, 2, 2), (2, 3, 1))

_KARATE_EDGES = (
    (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8), (1, 9), (1, 11),
    (1, 12), (1, 13), (1, 14), (1, 18), (1, 20), (1, 22), (1, 32),
    (2, 3), (2, 4), (2, 8), (2, 14), (2, 18), (2, 20), (2, 22), (2, 31),
    (3, 4), (3, 8), (3, 9), (3, 10), (3, 14), (3, 28), (3, 29), (3, 33),
    (4, 8), (4, 13), (4, 14),
    (5, 7), (5, 11),
    (6, 7), (6, 11), (6, 17),
    (7, 17),
    (9, 31), (9, 33), (9, 34),
    (10, 34),
    (14, 34),
    (15, 33), (15, 34),
    (16, 33), (16, 34),
    (19, 33), (19, 34),
    (20, 34),
    (21, 33), (21, 34),
    (23, 33), (23, 34),
    (24, 26), (24, 28), (24, 30), (24, 33), (24, 34),
    (25, 26), (25, 28), (25, 32),
    (26, 32),
    (27, 30), (27, 34),
    (28, 34),
    (29, 32), (29, 34),
    (30, 33), (30, 34),
    (31, 33), (31, 34),
    (32, 33), (32, 34),
    (33, 34),
)

# Instructor-side club membership once members 3 and 10 have joined it;
# the complement is the administrator's club.
_KARATE_INSTRUCTOR_17 = frozenset(
    "1 2 3 4 5 6 7 8 10 11 12 13 14 17 18 20 22".split()
)


def _example2_ranges():
    ranges = []
    start = 1
    for size in _EXAMPLE2_CLIQUE_SIZES:
        ranges.append(range(start, start + size))
        start += size
    return ranges


def _example2_edges():
    ranges = _example2_ranges()
    edges = []
    for block in ranges:
        members = list(block)
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                edges.append((str(members[a]), str(members[b])))
    # Bridges attach to the lowest-index members of each clique, no node
    # carrying two bridge ends.
    used = {k: 0 for k in range(len(ranges))}
    for a, b, count in _EXAMPLE2_BRIDGES:
        for _ in range(count):
            u = ranges[a][used[a]]
            v = ranges[b][used[b]]
            used[a] += 1
            used[b] += 1
            edges.append((str(u), str(v)))
    return edges


def dataset_names() -> tuple[str, ...]:
    return (EXAMPLE1, EXAMPLE2, KARATE)


def load_dataset(name: str) -> Multigraph:
    """Load a bundled dataset by name (example1, example2 or karate)."""
    if name == EXAMPLE1:
        return parse_edge_list(_EXAMPLE1_EDGE_LIST)
    if name == EXAMPLE2:
        return Multigraph(_example2_edges())
    if name == KARATE:
        return Multigraph((str(u), str(v)) for u, v in _KARATE_EDGES)
    raise ValueError(
        f"unknown dataset {name!r}; available: {', '.join(dataset_names())}"
    )


def dataset_info(name: str) -> dict:
    """Structural facts for the CLI's dataset subcommand."""
    g = load_dataset(name)
    info: dict = {"name": name, "n": g.n, "m": g.m}
    if name == EXAMPLE1:
        info["multigraph"] = True
    if name == EXAMPLE2:
        info["clique_sizes"] = list(_EXAMPLE2_CLIQUE_SIZES)
        info["bridge_edges"] = [list(b) for b in _EXAMPLE2_BRIDGES]
    return info


def example2_clique_partition() -> Partition:
    """The four maximal cliques of example2 as a partition."""
    return Partition([str(u) for u in block] for block in _example2_ranges())


def karate_split_17_17() -> Partition:
    """Both karate clubs at 17 members: the hierarchical split after
    members 3 and 10 have joined the instructor's side."""
    nodes = {str(i) for i in range(1, 35)}
    return Partition([_KARATE_INSTRUCTOR_17, nodes - _KARATE_INSTRUCTOR_17])


def karate_split_16_18() -> Partition:
    """Intermediate 16/18 split: member 3 with the instructor, member 10
    still with the administrator."""
    nodes = {str(i) for i in range(1, 35)}
    side = _KARATE_INSTRUCTOR_17 - {"10"}
    return Partition([side, nodes - side])


def karate_split_15_19() -> Partition:
    """The classic two-group split from hierarchical clustering: members 3
    and 10 grouped with the administrator's side. Documented starting
    point for dynamics on the karate graph."""
    nodes = {str(i) for i in range(1, 35)}
    side = _KARATE_INSTRUCTOR_17 - {"3", "10"}
    return Partition([side, nodes - side])
