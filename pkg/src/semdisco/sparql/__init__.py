from ..errors import QueryValidationError, SparqlSyntaxError, UnknownPrefixError
from .evaluator import ResultTable, evaluate, solutions
from .parser import Query, parse_query
from .results import MEDIA_TYPE, from_sparql_json, to_sparql_json

# Everything parse_query may raise for bad user input.
QUERY_ERRORS = (SparqlSyntaxError, QueryValidationError, UnknownPrefixError)

__all__ = [
    "MEDIA_TYPE",
    "QUERY_ERRORS",
    "Query",
    "ResultTable",
    "evaluate",
    "from_sparql_json",
    "parse_query",
    "solutions",
    "to_sparql_json",
]
