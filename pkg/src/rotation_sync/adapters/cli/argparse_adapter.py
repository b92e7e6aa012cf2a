"""
Adapter for argparse that implements the CommandLineInterface.
"""
import argparse
from typing import Any, Callable, Dict, Optional, Sequence

from rotation_sync.application.interfaces.command_line_interface import CommandLineInterface


class ArgparseAdapter(CommandLineInterface):
    """Subcommand dispatcher built on argparse."""

    def __init__(self, prog: str = "rotsync", description: str = ""):
        """Initialize the parser and its subcommand registry."""
        self.parser = argparse.ArgumentParser(prog=prog, description=description)
        self.subparsers = self.parser.add_subparsers(dest="command", metavar="COMMAND")
        self.subparsers.required = True
        self.handlers: Dict[str, Callable[[argparse.Namespace], int]] = {}

    def register_command(
        self,
        name: str,
        handler_func: Callable[[Any], int],
        help_text: str = "",
        configure: Optional[Callable[[Any], None]] = None,
    ) -> None:
        """Register a subcommand and let ``configure`` add its arguments."""
        subparser = self.subparsers.add_parser(name, help=help_text, description=help_text)
        if configure is not None:
            configure(subparser)
        self.handlers[name] = handler_func

    def get_app(self) -> argparse.ArgumentParser:
        """Return the argparse parser."""
        return self.parser

    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        """
        Parse ``argv`` and run the selected handler.

        Usage errors return status 2 instead of exiting the process.
        """
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else 2
        return int(self.handlers[args.command](args))
