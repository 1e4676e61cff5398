from .readers import read_edges, read_nodes, read_partition
from .schemas import NodeMeta
from .writers import write_edges, write_frame, write_nodes_utm, write_nodes_with_geo, write_partition

__all__ = [
    "NodeMeta",
    "read_edges",
    "read_nodes",
    "read_partition",
    "write_edges",
    "write_frame",
    "write_nodes_utm",
    "write_nodes_with_geo",
    "write_partition",
]
