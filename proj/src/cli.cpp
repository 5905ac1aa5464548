// filled in with the CLI entry points
