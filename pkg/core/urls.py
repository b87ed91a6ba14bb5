from .views import (
    betti_view,
    build_view,
    graph_view,
    morse_view,
    shell_view,
    verify_view,
)

# Subcommand name -> handler; cli.py builds one argparse subparser per entry
commandpatterns = {
    "build": build_view,
    "betti": betti_view,
    "shell": shell_view,
    "morse": morse_view,
    "verify": verify_view,
    "graph": graph_view,
}
