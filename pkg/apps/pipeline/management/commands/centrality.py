from apps.pipeline.management.base import SubcityCommand


class Command(SubcityCommand):
    help = "Betweenness or eigenvector centrality, optionally summarised per community."
    subcommand = "centrality"
    parallel = True

    def add_arguments(self, parser):
        parser.add_argument("--edges", required=True)
        parser.add_argument("--nodes", help="Node file whose ids join the graph, isolated towers included")
        parser.add_argument("--out", required=True)
        parser.add_argument("--measure", choices=["betweenness", "eigenvector"])
        parser.add_argument("--length", choices=["unit", "inverse"], help="Shortest-path edge length")
        parser.add_argument("--teleport", action="store_true", default=None, help="Uniform teleport damping")
        parser.add_argument("--partition")
        parser.add_argument("--stats")
        parser.add_argument("--boxplot")
        parser.add_argument("--histogram")
        parser.add_argument("--bins", type=int)
        self.add_variant_arguments(parser)
