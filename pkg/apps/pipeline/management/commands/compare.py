from apps.pipeline.management.base import SubcityCommand


class Command(SubcityCommand):
    help = "Similarity (optimal label matching), NMI and ARI between two partitions."
    subcommand = "compare"

    def add_arguments(self, parser):
        parser.add_argument("--a", required=True)
        parser.add_argument("--b", required=True)
        parser.add_argument("--out", help="similarity_pct,nmi,ari")
        parser.add_argument("--contingency", help="Contingency matrix CSV")
