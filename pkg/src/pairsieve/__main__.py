from pairsieve.cli import entry

entry()
