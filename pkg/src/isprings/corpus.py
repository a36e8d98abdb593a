"""The bundled corpus of ring expressions and batch loading."""

from importlib import resources

from .expr import parse, to_text


def read_expressions(text):
    """Non-blank, non-comment lines."""
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def standard_expressions():
    return read_expressions(resources.files("isprings").joinpath("data/standard.txt").read_text())


def load_corpus(expressions=None, max_size=None):
    """``[(canonical text, ring)]`` for the given expressions (default: the standard corpus)."""
    from .expr import elaborate

    exprs = standard_expressions() if expressions is None else expressions
    out = []
    for e in exprs:
        node = parse(e)
        out.append((to_text(node), elaborate(node, max_size)))
    return out
