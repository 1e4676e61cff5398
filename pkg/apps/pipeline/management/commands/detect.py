from apps.pipeline.management.base import SubcityCommand


class Command(SubcityCommand):
    help = "Louvain community detection; writes id,community."
    subcommand = "detect"

    def add_arguments(self, parser):
        parser.add_argument("--edges", required=True)
        parser.add_argument("--nodes", help="Node file whose ids join the graph, isolated towers included")
        parser.add_argument("--out", required=True)
        parser.add_argument("--resolution", type=float, help="Larger values give fewer, larger communities")
        parser.add_argument("--formulation", choices=["gamma", "scaled"])
        parser.add_argument("--seed", type=int)
        parser.add_argument("--runs", type=int, help="Independent runs; the best modularity wins")
        parser.add_argument("--order", choices=["ascending", "shuffled"])
        self.add_variant_arguments(parser)
