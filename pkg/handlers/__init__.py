"""Handlers package: one module per subcommand, each exposing register() and handle()."""
