from .main import main, run
from .parser import ParsedExpression, parse_expr, parse_poly, parse_rational

__all__ = ["main", "run", "ParsedExpression", "parse_expr", "parse_poly", "parse_rational"]
