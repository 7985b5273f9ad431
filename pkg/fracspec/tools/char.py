"""Module providing basic character strings-related functions

A basic module providing methods related to character string operations,
for FRACSPEC tools: natural mathematical expressions of initial data and
lists of numbers given in configuration files.

"""

import ast
import re
import typing as tp

import numpy as np

from fracspec.base.errors import ArgumentError

# ================
# Module Constants
# ================

# Names accepted in expressions, all vectorized through numpy
EXPR_NAMES = {
    'sin': np.sin,
    'cos': np.cos,
    'tan': np.tan,
    'exp': np.exp,
    'log': np.log,
    'log10': np.log10,
    'sqrt': np.sqrt,
    'abs': np.abs,
    'sinh': np.sinh,
    'cosh': np.cosh,
    'tanh': np.tanh,
    'pi': np.pi,
}


# ==============
# Module Methods
# ==============

def convert_expr(expr: str,
                 variable: tp.Optional[str] = None,
                 natural: bool = True) -> str:
    """Converts mathematical expression to correct Python form.

    A very basic function to convert a mathematical expression given in
    a more natural language to Python-compatible expressions, like
    `"x^2*(L-x)"` or `"sin(pi*x)+ln(1+x)/2"`.

    Parameters
    ----------
    expr
        String expression to interpret.
    variable
        Variable accepted in the expression.
    natural
        Assumes more natural function names (ln for natural logarithm,
        log for decimal logarithm).

    Returns
    -------
    string
        Python-compatible expression.

    Raises
    ------
    ArgumentError
        String contains invalid elements
    """
    # Very simple test on possible safety issues.
    if any(item in expr for item in ('exec', 'lambda', '__', 'import')):
        raise ArgumentError('expr', 'Pure mathematical expressions expected')
    if not expr.strip():
        raise ArgumentError('expr', 'Empty expression')

    _expr = expr.strip()
    if natural:
        _expr = re.sub(r'\blog\b', 'log10', _expr)
        _expr = re.sub(r'\bln\b', 'log', _expr)

    number = r'\d+\.?\d*'
    if variable is not None:
        number = f'(?:{number}{variable}?|{variable})'
    pattern = r'\^([-\+]?' + number + ')'

    if '^' in _expr:
        # Replace case without protecting parentheses (ex: x^-3)
        _expr = re.sub(pattern, r'**(\1)', _expr)
        # Replace other cases
        _expr = _expr.replace('^', '**')

    return _expr


def expr_function(expr: str,
                  variable: str = 'x',
                  consts: tp.Optional[tp.Dict[str, float]] = None
                  ) -> tp.Callable[[np.ndarray], np.ndarray]:
    """Build a vectorized function from a mathematical expression.

    Parameters
    ----------
    expr
        Expression in natural form (see `convert_expr`).
    variable
        Name of the variable.
    consts
        Additional named constants (for instance the length L).

    Returns
    -------
    function
        Function of an array of values of the variable.

    Raises
    ------
    ArgumentError
        Invalid expression or unknown names.
    """
    _expr = convert_expr(expr, variable)
    names = dict(EXPR_NAMES)
    if consts:
        names.update(consts)
    allowed = set(names) | {variable}
    try:
        tree = ast.parse(_expr, mode='eval')
    except SyntaxError as err:
        raise ArgumentError('expr', f'Invalid expression: {expr}') from err
    for node in ast.walk(tree):
        if isinstance(node, ast.Attribute):
            raise ArgumentError('expr', 'Attributes are not allowed')
        if isinstance(node, ast.Name) and node.id not in allowed:
            raise ArgumentError('expr',
                                f'Unknown name in expression: {node.id}')
    code = compile(tree, '<expr>', 'eval')
    namespace = {'__builtins__': {}, **names}

    def func(x: np.ndarray) -> np.ndarray:
        xarr = np.asarray(x, dtype=float)
        # pylint: disable=eval-used
        res = eval(code, namespace, {variable: xarr})
        return np.broadcast_to(np.asarray(res, dtype=float), xarr.shape)

    return func


def convert_floats(text: str) -> tp.List[float]:
    """Convert a comma- or space-separated list of numbers."""
    items = [item for item in re.split(r'[,;\s]+', text.strip()) if item]
    try:
        return [float(item) for item in items]
    except ValueError as err:
        raise ArgumentError('text', f'Invalid list of numbers: {text}') \
            from err
