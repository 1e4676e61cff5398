from apps.pipeline.management.base import SubcityCommand


class Command(SubcityCommand):
    help = "Generate a planted-partition city (edges, UTM nodes, ground truth)."
    subcommand = "synth"

    def add_arguments(self, parser):
        parser.add_argument("--k", type=int, help="Number of blocks")
        parser.add_argument("--n", type=int, help="Towers per block")
        parser.add_argument("--p-in", dest="p_in", type=float)
        parser.add_argument("--p-out", dest="p_out", type=float)
        parser.add_argument("--mean-count", dest="mean_count", type=float)
        parser.add_argument("--seed", type=int)
        parser.add_argument("--out-edges", dest="out_edges", required=True)
        parser.add_argument("--out-nodes", dest="out_nodes", required=True)
        parser.add_argument("--out-truth", dest="out_truth", required=True)
        self.add_geo_arguments(parser)
