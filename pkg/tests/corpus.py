"""Expressions used by the CLI round-trip tests."""

CORPUS = [
    "0",
    "1",
    "-7/3",
    "X",
    "1/X",
    "X^2 - 3*X + 2",
    "(X^2 - 1)/(X - 1)",
    "(3*X^2 + 5*X + 7)/(X^2 + 1)",
    "-3*X^2/(X^2 + 1)",
    "pi",
    "1/pi",
    "sqrt2pi",
    "X/pi + 1",
    "i",
    "(2 + 3*i)*(2 - 3*i)",
    "i*X/(X - 2) + pi^2",
    "x",
    "x^3 - 2*x + 1",
    "X*x^2",
    "w(2)",
    "x*w(-1/2) + w(3)",
    "i*x^2*w(1) - pi*w(0)",
    "d(0;0)",
    "d(3;0)",
    "d(1;1/2) - 2*d(0;-1)",
    "X*d(2;0) + i*d(0;0)",
    "x*d(2;0)",
    "x^2*d(3;1)",
    "jfun(exp(-1), exp(1))",
    "jfun(x*exp(-2), 0)",
    "jfun(exp(-1+2i), 3*exp(1/2))",
    "jfun(exp(-1), exp(1)) + d(0;0)",
    "d(1;0) - X*jfun(x*exp(-1), x^2*exp(1))",
    "(1 + i)*jfun(exp(-3/2-2i), exp(1))",
]
