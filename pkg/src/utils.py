import asyncio
import logging
from concurrent.futures import Executor, ProcessPoolExecutor
from pathlib import Path
from typing import Callable, Iterator, Optional

import networkx as nx
from rich.console import Console
from rich.progress import Progress, SpinnerColumn, TextColumn, BarColumn

from constants import GRAPH6_HEADER, MAX_ATLAS_ORDER, MAX_PARALLEL_ORDER
from errors import Graph6ParseError, GraphArgumentError
from graphs import Graph, encode_graph6, parse_graph6

logger = logging.getLogger(__name__)

console = Console(stderr=True)

# CORPUS UTILS

def _atlas(max_n: int, connected_only: bool) -> Iterator[Graph]:
    if not 0 <= max_n <= MAX_ATLAS_ORDER:
        raise GraphArgumentError(f"the bundled atlas covers orders 0..{MAX_ATLAS_ORDER}, got {max_n}")
    for ng in nx.graph_atlas_g():
        if ng.number_of_nodes() > max_n:
            break
        if ng.number_of_nodes() == 0:
            continue
        if connected_only and not nx.is_connected(ng):
            continue
        yield Graph.from_networkx(ng)


def _trees(max_n: int) -> Iterator[Graph]:
    if max_n < 1:
        raise GraphArgumentError(f"tree corpus needs an order of at least 1, got {max_n}")
    yield Graph.edgeless(1)
    for n in range(2, max_n + 1):
        for ng in nx.nonisomorphic_trees(n):
            yield Graph.from_networkx(ng)


def _noncrossing(rungs: list[tuple[int, int]]) -> Iterator[list[tuple[int, int]]]:
    """Subsets of the sorted `rungs` whose bottom ends never move left."""
    def extend(start: int, last: int, chosen: list[tuple[int, int]]):
        yield chosen
        for k in range(start, len(rungs)):
            if rungs[k][1] >= last:
                yield from extend(k + 1, rungs[k][1], chosen + [rungs[k]])

    yield from extend(0, 0, [])


def _parallel_paths(max_n: int) -> Iterator[Graph]:
    """Graphs on two parallel paths, up to isomorphism, with 2..max_n vertices.

    These are exactly the graphs with Z(G) <= 2 other than K_1: two induced
    paths drawn side by side plus non-crossing rungs between them.
    """
    if not 2 <= max_n <= MAX_PARALLEL_ORDER:
        raise GraphArgumentError(f"parallel-path corpus covers orders 2..{MAX_PARALLEL_ORDER}, got {max_n}")
    seen: dict[str, list[nx.Graph]] = {}
    for n in range(2, max_n + 1):
        for a in range(1, n // 2 + 1):
            top, bottom = list(range(a)), list(range(a, n))
            spine = list(zip(top, top[1:])) + list(zip(bottom, bottom[1:]))
            rungs = [(i, j) for i in top for j in bottom]
            for chosen in _noncrossing(rungs):
                ng = nx.Graph()
                ng.add_nodes_from(range(n))
                ng.add_edges_from(spine + chosen)
                bucket = seen.setdefault(nx.weisfeiler_lehman_graph_hash(ng), [])
                if any(nx.is_isomorphic(ng, h) for h in bucket):
                    continue
                bucket.append(ng)
                yield Graph.from_networkx(ng)


BUNDLED_CORPORA = {
    "atlas": lambda n: _atlas(n, connected_only=False),
    "connected": lambda n: _atlas(n, connected_only=True),
    "trees": _trees,
    "parallel": _parallel_paths,
}


def is_bundled(source: str) -> bool:
    name, _, order = source.partition(":")
    return name in BUNDLED_CORPORA and order.isdigit()


def read_graph6_lines(lines: list[str], source: str = "<input>") -> list[Graph]:
    """Parse newline-delimited graph6 records, skipping blank lines and a
    leading header line."""
    graphs = []
    for lineno, line in enumerate(lines, start=1):
        record = line.strip()
        if not record or record == GRAPH6_HEADER:
            continue
        try:
            graphs.append(parse_graph6(record))
        except Graph6ParseError as e:
            raise Graph6ParseError(f"{source}:{lineno}: {e}", e.offset) from e
    return graphs


def load_corpus(source: str) -> list[Graph]:
    """Graphs from a graph6 file or a bundled corpus such as `connected:6`,
    `atlas:7` or `trees:9`."""
    if is_bundled(source):
        name, _, order = source.partition(":")
        graphs = list(BUNDLED_CORPORA[name](int(order)))
        logger.info("loaded %d graphs from bundled corpus %s", len(graphs), source)
        return graphs
    path = Path(source)
    graphs = read_graph6_lines(path.read_text().splitlines(), str(path))
    logger.info("loaded %d graphs from %s", len(graphs), path)
    return graphs


def write_graph6_lines(graphs: list[Graph], path: str) -> None:
    Path(path).write_text("".join(encode_graph6(g) + "\n" for g in graphs))


# ASYNC UTILS

async def run_async_with_progress(
    items: list,
    processor: Callable,
    max_concurrent: int = 8,
    quiet: bool = False,
    get_item_name=lambda item: str(item),
    description: str = "Checking",
) -> list:
    """
    Run a picklable function on a list of items in a process pool, with an
    optional progress bar.

    Args:
        items: List of items to process
        processor: Module-level function that takes an item and returns a result
        max_concurrent: Number of worker processes; 1 runs everything in-process
        quiet: Whether to suppress progress bar
        get_item_name: Function to extract display name from item
        description: Label shown next to the progress bar

    Returns:
        List of results in the same order as input items
    """
    loop = asyncio.get_running_loop()
    semaphore = asyncio.Semaphore(max_concurrent)
    pool: Optional[Executor] = ProcessPoolExecutor(max_workers=max_concurrent) if max_concurrent > 1 else None

    async def call(item):
        if pool is None:
            return processor(item)
        return await loop.run_in_executor(pool, processor, item)

    try:
        if quiet:
            async def runner_with_semaphore(item):
                async with semaphore:
                    return await call(item)

            tasks = [runner_with_semaphore(item) for item in items]
            return await asyncio.gather(*tasks)

        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            TextColumn("[progress.percentage]{task.percentage:>3.0f}%"),
            TextColumn("({task.completed}/{task.total})"),
            console=console,
            transient=True,
        ) as progress:
            task = progress.add_task(f"{description}...", total=len(items))

            async def runner_with_progress(item):
                async with semaphore:
                    progress.update(task, description=f"{description} {get_item_name(item)}")
                    result = await call(item)
                    progress.advance(task)
                    return result

            tasks = [runner_with_progress(item) for item in items]
            return await asyncio.gather(*tasks)
    finally:
        if pool is not None:
            pool.shutdown()


def run_batch(items: list, processor: Callable, jobs: int = 1, quiet: bool = True, **kwargs) -> list:
    return asyncio.run(run_async_with_progress(items, processor, max_concurrent=max(jobs, 1), quiet=quiet, **kwargs))
