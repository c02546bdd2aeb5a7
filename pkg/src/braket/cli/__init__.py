from .parser import ParseError, TypeCheckError, evaluate, evaluate_text, infer_type, parse, unparse

__all__ = [
    "ParseError",
    "TypeCheckError",
    "evaluate",
    "evaluate_text",
    "infer_type",
    "parse",
    "unparse",
]
