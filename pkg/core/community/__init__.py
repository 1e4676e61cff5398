from .comparison import ContingencyTable, PartitionComparison, compare_partitions, contingency_table
from .louvain import CommunityState, louvain
from .modularity import modularity
from .partition import CommunityTotals, Partition, QualityParams, community_sizes, community_totals
from .sweep import SweepRow, best_louvain, best_of, resolution_sweep, sweep_frame

__all__ = [
    "CommunityState",
    "CommunityTotals",
    "ContingencyTable",
    "Partition",
    "PartitionComparison",
    "QualityParams",
    "SweepRow",
    "best_louvain",
    "best_of",
    "community_sizes",
    "community_totals",
    "compare_partitions",
    "contingency_table",
    "louvain",
    "modularity",
    "resolution_sweep",
    "sweep_frame",
]
