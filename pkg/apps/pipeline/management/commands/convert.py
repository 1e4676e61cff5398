from apps.pipeline.management.base import SubcityCommand


class Command(SubcityCommand):
    help = "Fill lat/lon from UTM coordinates and write id,lat,lon,community."
    subcommand = "convert"

    def add_arguments(self, parser):
        parser.add_argument("--nodes", required=True, help="Node file with easting/northing and/or lat/lon")
        parser.add_argument("--out", required=True)
        parser.add_argument("--decimals", type=int, help="Fixed decimal digits for lat/lon (>= 9)")
        self.add_geo_arguments(parser)
