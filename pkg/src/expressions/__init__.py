# Graph expression language
from src.expressions.parser import (
    Edit,
    ExprSyntaxError,
    FamilyAtom,
    FileRef,
    GraphExpr,
    Join,
    Location,
    Power,
    Product,
    parse_expr,
    pretty_print,
    tokenize,
)
from src.expressions.evaluator import ExprEvalError, eval_expr, evaluate

__all__ = [
    'Edit', 'ExprSyntaxError', 'FamilyAtom', 'FileRef', 'GraphExpr', 'Join', 'Location', 'Power', 'Product',
    'parse_expr', 'pretty_print', 'tokenize',
    'ExprEvalError', 'eval_expr', 'evaluate',
]
