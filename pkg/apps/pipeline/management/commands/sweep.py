from apps.pipeline.management.base import SubcityCommand, resolution_list


class Command(SubcityCommand):
    help = "Community counts and best modularity across resolutions."
    subcommand = "sweep"
    parallel = True

    def add_arguments(self, parser):
        parser.add_argument("--edges", required=True)
        parser.add_argument("--nodes", help="Node file whose ids join the graph, isolated towers included")
        parser.add_argument("--out", required=True)
        parser.add_argument("--resolutions", type=resolution_list, help="Comma-separated, e.g. 0.25,0.5,1.0")
        parser.add_argument("--formulation", choices=["gamma", "scaled"])
        parser.add_argument("--seed", type=int)
        parser.add_argument("--runs", type=int)
        parser.add_argument("--order", choices=["ascending", "shuffled"])
        self.add_variant_arguments(parser)
