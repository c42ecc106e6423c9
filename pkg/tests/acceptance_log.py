"""Collects one verdict line per acceptance criterion."""

RESULTS = {}


def record(number: int, title: str, ok: bool, seconds: float, detail: str = ""):
    RESULTS[number] = (title, ok, seconds, detail)
    line = format_line(number)
    print(line)
    return line


def format_line(number: int) -> str:
    title, ok, seconds, detail = RESULTS[number]
    status = "PASS" if ok else "FAIL"
    extra = f" [{detail}]" if detail else ""
    return f"criterion {number}: {status} {title} ({seconds:.2f}s){extra}"


def summary_lines():
    return [format_line(n) for n in sorted(RESULTS)]
