from apps.pipeline.management.base import SubcityCommand


class Command(SubcityCommand):
    help = "Export a partitioned graph as GeoJSON points or a DOT graph."
    subcommand = "export"

    def add_arguments(self, parser):
        parser.add_argument("--edges", required=True)
        parser.add_argument("--partition", required=True)
        parser.add_argument("--nodes", help="Node coordinates (required for geojson)")
        parser.add_argument("--format", choices=["geojson", "dot"])
        parser.add_argument("--scores", action="append", help="Score files added as feature properties")
        parser.add_argument("--out", required=True)
        self.add_variant_arguments(parser)
        self.add_geo_arguments(parser)
