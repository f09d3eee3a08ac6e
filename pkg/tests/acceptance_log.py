"""Collects one PASS/FAIL line per acceptance criterion for the terminal summary."""

LINES: list[str] = []


def record(criterion: str, ok: bool, detail: str, elapsed: float, budget: float | None) -> bool:
    within = budget is None or elapsed < budget
    status = "PASS" if ok and within else "FAIL"
    limit = f" / budget {budget:g} s" if budget is not None else ""
    line = f"ACCEPTANCE {criterion}: {status}  {detail}  [{elapsed:.2f} s{limit}]"
    LINES.append(line)
    print(line)
    return ok and within
