"""entgraph command-line interface."""
