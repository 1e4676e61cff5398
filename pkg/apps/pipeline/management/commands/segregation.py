from apps.pipeline.management.base import SubcityCommand


class Command(SubcityCommand):
    help = "Community flow probabilities against a random-target null."
    subcommand = "segregation"
    parallel = True

    def add_arguments(self, parser):
        parser.add_argument("--edges", required=True)
        parser.add_argument("--partition", required=True)
        parser.add_argument("--out", required=True)
        parser.add_argument("--null", choices=["analytic", "montecarlo"])
        parser.add_argument("--trials", type=int)
        parser.add_argument("--seed", type=int)
        parser.add_argument("--count-mode", dest="count_mode", choices=["records", "pairs"])
