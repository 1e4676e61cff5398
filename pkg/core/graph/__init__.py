from .structure import Graph, ODRecord, Strengths, build_graph, coerce_record, strengths

__all__ = ["Graph", "ODRecord", "Strengths", "build_graph", "coerce_record", "strengths"]
