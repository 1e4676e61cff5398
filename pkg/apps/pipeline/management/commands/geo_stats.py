from apps.pipeline.management.base import SubcityCommand


class Command(SubcityCommand):
    help = "Distance to the city centre per node and its correlation with centrality scores."
    subcommand = "geo-stats"

    def add_arguments(self, parser):
        parser.add_argument("--nodes", required=True)
        parser.add_argument("--out", required=True, help="id,lat,lon,distance_km")
        parser.add_argument("--scores", action="append", help="Score file from `centrality`; repeatable")
        parser.add_argument("--scatter", help="id,distance_km plus one column per score file")
        parser.add_argument("--matrix", help="2x2 Pearson matrices, one block per score file")
        parser.add_argument("--center", choices=["mean", "spherical"])
        self.add_geo_arguments(parser)
