"""
Command Line Interface that defines how argument-parsing frameworks
should interact with our application layer.
"""
from abc import ABC, abstractmethod
from typing import Any, Callable, Optional, Sequence


class CommandLineInterface(ABC):
    """Interface for command-line framework adapters."""

    @abstractmethod
    def register_command(
        self,
        name: str,
        handler_func: Callable[[Any], int],
        help_text: str = "",
        configure: Optional[Callable[[Any], None]] = None,
    ) -> None:
        """Register a subcommand; ``configure`` declares its options on the framework's parser."""
        pass

    @abstractmethod
    def get_app(self) -> Any:
        """Return the underlying parser instance."""
        pass

    @abstractmethod
    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        """Parse arguments, dispatch to the handler and return its exit code."""
        pass
