from .betweenness import PathAccumulator, betweenness
from .eigenvector import eigenvector
from .result import CentralityResult
from .stats import (
    CommunityStats,
    DistanceCorrelation,
    GroupStats,
    centrality_vs_distance,
    group_stats,
    histogram_table,
    pearson,
)

__all__ = [
    "CentralityResult",
    "CommunityStats",
    "DistanceCorrelation",
    "GroupStats",
    "PathAccumulator",
    "betweenness",
    "centrality_vs_distance",
    "eigenvector",
    "group_stats",
    "histogram_table",
    "pearson",
]
