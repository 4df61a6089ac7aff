import logging
import random
from typing import Iterator, List, Optional

import networkx as nx

from homology_errors import ResourceLimitError
from simple_graph import SimpleGraph, from_networkx

logger = logging.getLogger(__name__)

# The networkx atlas lists every graph with at most seven vertices.
ATLAS_MAX_VERTICES = 7


def connected_graphs(vertex_count: int) -> List[SimpleGraph]:
    """All connected simple graphs on `vertex_count` vertices, one per isomorphism class."""
    if vertex_count > ATLAS_MAX_VERTICES:
        raise ResourceLimitError(
            f"exhaustive enumeration is limited to {ATLAS_MAX_VERTICES} vertices, got {vertex_count}"
        )
    found = [
        from_networkx(atlas_graph)
        for atlas_graph in nx.graph_atlas_g()
        if atlas_graph.number_of_nodes() == vertex_count
        and (vertex_count == 0 or nx.is_connected(atlas_graph))
    ]
    logger.debug(f"Atlas yields {len(found)} connected graphs on {vertex_count} vertices")
    return found


def connected_graphs_up_to(max_vertices: int, min_vertices: int = 1) -> Iterator[SimpleGraph]:
    for vertex_count in range(min_vertices, max_vertices + 1):
        yield from connected_graphs(vertex_count)


def sample_connected_graphs(vertex_count: int, size: int, seed: int = 0) -> List[SimpleGraph]:
    """A reproducible random sample (without replacement) of the connected graphs on `vertex_count` vertices."""
    population = connected_graphs(vertex_count)
    if size >= len(population):
        return population
    rng = random.Random(seed)
    chosen = sorted(rng.sample(range(len(population)), size))
    return [population[k] for k in chosen]


def verification_population(max_vertices: int = 6, sample_vertices: Optional[int] = 7,
                            sample_size: int = 200, seed: int = 0) -> List[SimpleGraph]:
    """Every connected graph up to `max_vertices`, plus a fixed sample at `sample_vertices`."""
    population = list(connected_graphs_up_to(max_vertices))
    if sample_vertices is not None and sample_vertices > max_vertices:
        population.extend(sample_connected_graphs(sample_vertices, sample_size, seed))
    return population
