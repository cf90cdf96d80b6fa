"""Terminal rendering of result lines."""

from __future__ import annotations

from rich.console import Console
from rich.highlighter import RegexHighlighter
from rich.text import Text

COUNTEREXAMPLE_STYLE = "bold red"


class TermHighlighter(RegexHighlighter):
    """Highlights result lines of the form ``coeff index`` and suite summaries."""

    base_style = "repr."
    highlights = [
        r"(?m)^(?P<bool_true>PASS)\b|^(?P<bool_false>FAIL)\b",
        r"(?P<number>(?<![^\n])-?\d+(?:/\d+)?(?= |$))",
        r"(?P<tag_name>\b(?:perm|h|p|X|M)(?=[\[ ]))",
        r"(?P<brace>[\[\]⊗])",
    ]

    def highlight(self, text: Text) -> None:
        super().highlight(text)
        # the indented line under a FAIL names the failing case
        text.highlight_regex(r"(?m)^  first counterexample for .*$", style=COUNTEREXAMPLE_STYLE)


def make_console(**kwargs) -> Console:
    """A stdout console that prints plain text when not attached to a terminal."""
    return Console(highlighter=TermHighlighter(), markup=False, emoji=False, soft_wrap=True, **kwargs)
