from apps.pipeline.management.base import SubcityCommand


class Command(SubcityCommand):
    help = "Aggregate OD records into one graph variant; print its summary and optionally the edge list."
    subcommand = "build"

    def add_arguments(self, parser):
        parser.add_argument("--edges", required=True)
        parser.add_argument("--nodes", help="Node file whose ids join the graph, isolated towers included")
        parser.add_argument("--out", help="Aggregated edge list Source,Target,weight")
        self.add_variant_arguments(parser)
