from fractions import Fraction


def decimal_str(value, places: int = 4) -> str:
    """Exact rendering of a rational to ``places`` decimals, halves rounded away from zero."""
    value = Fraction(value)
    sign = "-" if value < 0 else ""
    value = abs(value)
    scaled = value * 10 ** places
    q, r = divmod(scaled.numerator, scaled.denominator)
    if 2 * r >= scaled.denominator:
        q += 1
    digits = str(q).rjust(places + 1, "0")
    if places == 0:
        return sign + digits
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def fraction_str(value) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def key_str(key) -> str:
    return ",".join(str(v) for v in key)
