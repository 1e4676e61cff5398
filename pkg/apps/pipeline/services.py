"""Pipeline runner: one method per subcommand, each returning a printable summary."""

from __future__ import annotations

import logging
from pathlib import Path

import pandas as pd
from django.conf import settings

from core.centrality import (
    CentralityResult,
    betweenness,
    centrality_vs_distance,
    eigenvector,
    group_stats,
    histogram_table,
)
from core.community import (
    Partition,
    QualityParams,
    best_louvain,
    community_sizes,
    compare_partitions,
    resolution_sweep,
    sweep_frame,
)
from core.exceptions import InputError
from core.export import export
from core.geo import distances_to_center, resolve_geo
from core.graph import Graph, build_graph
from core.ingest import (
    NodeMeta,
    read_edges,
    read_nodes,
    read_partition,
    write_edges,
    write_frame,
    write_nodes_utm,
    write_nodes_with_geo,
    write_partition,
)
from core.parallel import derive_seed
from core.segregation import build_flow_table, null_expected
from core.synth import SynthSpec, generate

from .config import RunConfig

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.12g"


def read_scores(path: Path) -> CentralityResult:
    """Load a score file written by the ``centrality`` subcommand."""
    frame = pd.read_csv(path)
    measures = [c for c in frame.columns if c in ("betweenness", "eigenvector")]
    if "id" not in frame.columns or len(measures) != 1:
        raise InputError(f"{path}: expected columns id plus betweenness or eigenvector, got {list(frame.columns)}")
    frame = frame.sort_values("id", kind="stable")
    return CentralityResult(
        measure=measures[0],
        nodes=tuple(int(v) for v in frame["id"]),
        scores=frame[measures[0]].to_numpy(dtype=float),
        normalization=f"read from {path.name}",
    )


class PipelineRunner:
    """Runs one validated subcommand end to end."""

    def __init__(self, config: RunConfig):
        self.config = config

    @property
    def seed(self) -> int:
        return derive_seed(self.config.seed, self.config.subcommand)

    def run(self) -> dict:
        handler = getattr(self, "_" + self.config.subcommand.replace("-", "_"))
        summary = handler()
        logger.info("Subcommand %s finished", self.config.subcommand, extra=summary)
        return summary

    def _graph(self, metas: list[NodeMeta] | None = None) -> Graph:
        """Graph of the edge file; towers listed in a node file join it even without records."""
        c = self.config
        if metas is None and c.nodes:
            metas = read_nodes(c.nodes)
        records = read_edges(c.edges)
        towers = [m.id for m in metas] if metas else None
        return build_graph(records, directed=c.directed, weighted=c.weighted, nodes=towers)

    def _partition_for(self, g: Graph) -> Partition:
        p = read_partition(self.config.partition)
        p.covers(g)
        return p

    # -- subcommands ---------------------------------------------------------

    def _convert(self) -> dict:
        c = self.config
        metas = resolve_geo(read_nodes(c.nodes), zone=c.zone, hemisphere=c.hemisphere)
        write_nodes_with_geo(metas, c.out, decimals=c.decimals)
        return {"nodes": len(metas)}

    def _build(self) -> dict:
        g = self._graph()
        if self.config.out:
            write_edges(g, self.config.out)
        return g.summary()

    def _detect(self) -> dict:
        c = self.config
        g = self._graph()
        q = QualityParams(resolution=c.resolution, formulation=c.formulation)
        best = best_louvain(g, q, seed=self.seed, runs=c.runs, order=c.visit_order, workers=c.workers)
        write_partition(best, c.out)
        return {"quality": best.quality, "resolution": c.resolution, **community_sizes(best)}

    def _sweep(self) -> dict:
        c = self.config
        g = self._graph()
        rows = resolution_sweep(
            g,
            resolutions=c.resolutions,
            seed=self.seed,
            runs=c.runs,
            order=c.visit_order,
            formulation=c.formulation,
            workers=c.workers,
        )
        write_frame(sweep_frame(rows), c.out, float_format=FLOAT_FORMAT)
        return {"resolutions": len(rows), "runs": c.runs}

    def _compare(self) -> dict:
        c = self.config
        result = compare_partitions(read_partition(c.a), read_partition(c.b))
        if c.contingency:
            result.contingency.to_frame().to_csv(c.contingency, lineterminator="\n")
        if c.out:
            write_frame(pd.DataFrame([result.as_dict()]), c.out, float_format=FLOAT_FORMAT)
        return result.as_dict()

    def _centrality(self) -> dict:
        c = self.config
        g = self._graph()
        if c.measure == "betweenness":
            result = betweenness(g, edge_length=c.edge_length, workers=c.workers)
        else:
            result = eigenvector(g, teleport=c.teleport)
        write_frame(result.to_frame(), c.out, float_format=FLOAT_FORMAT)

        summary: dict = {"measure": result.measure, "nodes": g.n, "normalization": result.normalization}
        if result.eigenvalue is not None:
            summary["eigenvalue"] = result.eigenvalue
        if c.partition and (c.stats or c.boxplot or c.histogram):
            p = self._partition_for(g)
            grouped = group_stats(result, p)
            if c.stats:
                write_frame(grouped.to_frame(), c.stats, float_format=FLOAT_FORMAT)
            if c.boxplot:
                write_frame(grouped.boxplot_frame(), c.boxplot, float_format=FLOAT_FORMAT)
            if c.histogram:
                write_frame(histogram_table(result, p, bins=c.bins), c.histogram, float_format=FLOAT_FORMAT)
            summary["communities"] = p.k
        elif c.stats or c.boxplot or c.histogram:
            raise InputError("--stats, --boxplot and --histogram need --partition")
        return summary

    def _geo_stats(self) -> dict:
        c = self.config
        table = distances_to_center(read_nodes(c.nodes), center=c.center, zone=c.zone, hemisphere=c.hemisphere)
        write_frame(table.to_frame(), c.out, float_format=FLOAT_FORMAT)

        summary: dict = {"center_lat": table.center.lat, "center_lon": table.center.lon, "nodes": len(table.nodes)}
        matrices = []
        scatter = None
        for path in c.scores:
            scores = read_scores(path)
            correlation = centrality_vs_distance(scores, table)
            matrices.append(correlation.matrix())
            scatter = (
                correlation.scatter
                if scatter is None
                else scatter.merge(correlation.scatter, on=["id", "distance_km"], how="outer")
            )
            summary[f"pearson_{scores.measure}"] = correlation.r if correlation.error is None else correlation.error
        if c.scatter and scatter is not None:
            write_frame(scatter.sort_values("id", ignore_index=True), c.scatter, float_format=FLOAT_FORMAT)
        if c.matrix and matrices:
            combined = pd.concat(matrices, keys=[m.columns[1] for m in matrices], names=["measure", "variable"])
            combined.to_csv(c.matrix, lineterminator="\n", float_format=FLOAT_FORMAT)
        return summary

    def _segregation(self) -> dict:
        c = self.config
        records = read_edges(c.edges)
        p = read_partition(c.partition)
        table = build_flow_table(records, p, count_mode=c.count_mode)
        table = null_expected(table, mode=c.null, trials=c.trials, seed=self.seed, workers=c.workers)
        frame = table.to_frame()
        write_frame(frame, c.out, float_format=FLOAT_FORMAT)
        return {
            "communities": table.k,
            "total": int(table.total),
            "segregated_pairs": int(frame["segregated"].sum()),
            "null": table.null_mode,
        }

    def _synth(self) -> dict:
        c = self.config
        spec = SynthSpec(
            communities=c.k,
            nodes_per_community=c.n,
            p_in=c.p_in,
            p_out=c.p_out,
            mean_count=c.mean_count,
            zone=c.zone or settings.DEFAULT_UTM_ZONE,
            hemisphere=c.hemisphere or settings.DEFAULT_HEMISPHERE,
            seed=self.seed,
        )
        city = generate(spec)
        write_frame(city.edges_frame(), c.out_edges)
        write_nodes_utm(city.metas, c.out_nodes)
        write_partition(city.planted, c.out_truth)
        return {"nodes": spec.n, "records": len(city.records), "communities": spec.communities}

    def _export(self) -> dict:
        c = self.config
        metas: list[NodeMeta] = read_nodes(c.nodes) if c.nodes else []
        g = self._graph(metas)
        p = self._partition_for(g)
        if c.format == "geojson":
            if not metas:
                raise InputError("GeoJSON export requires --nodes with coordinates")
            metas = resolve_geo(metas, zone=c.zone, hemisphere=c.hemisphere)
        scores = [read_scores(path) for path in c.scores]
        export(g, p, metas, c.format, c.out, scores=scores)
        return {"format": c.format, "nodes": g.n, "edges": g.edge_count}
